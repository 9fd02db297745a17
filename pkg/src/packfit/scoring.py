"""Elementary values, weighted-sum aggregation, and candidate ranking."""

import math
from dataclasses import dataclass

from .errors import ValidationError
from .macbeth import Weights
from .model import LeafKind


@dataclass(frozen=True)
class ValueFunction:
    """Linear map from a raw quantitative measure to [0, 1].

    The bad reference level maps to 0 and the good one to 1; values beyond
    the references clip. A decreasing direction (costs, risks) just means
    the good level is the smaller number.
    """

    direction: str
    good_level: float
    bad_level: float

    def __post_init__(self):
        if self.direction not in ("increasing", "decreasing"):
            raise ValidationError(f"unknown direction {self.direction!r}")
        if self.direction == "increasing" and not (self.good_level > self.bad_level):
            raise ValidationError("increasing value function needs good_level > bad_level")
        if self.direction == "decreasing" and not (self.good_level < self.bad_level):
            raise ValidationError("decreasing value function needs good_level < bad_level")


def to_elementary_value(raw: float, vf: ValueFunction) -> float:
    """Interpolate a raw measure between the bad (0) and good (1) anchors."""
    if not math.isfinite(raw):
        raise ValidationError(f"raw measure {raw!r} is not finite")
    t = (raw - vf.bad_level) / (vf.good_level - vf.bad_level)
    return min(1.0, max(0.0, t))


@dataclass(frozen=True)
class PerformanceVector:
    """Per-criterion elementary values of one candidate, each tagged with
    how it was obtained (judged scale or quantitative value function)."""

    candidate_id: str
    values: dict[str, float]
    provenance: dict[str, LeafKind]

    def __post_init__(self):
        if set(self.values) != set(self.provenance):
            raise ValidationError(
                f"candidate {self.candidate_id}: values and provenance cover "
                f"different criteria"
            )
        for cid, v in self.values.items():
            if not (0.0 <= v <= 1.0):
                raise ValidationError(
                    f"candidate {self.candidate_id}: value for {cid!r} is {v!r}, "
                    f"outside [0, 1]"
                )


def aggregate(vector: PerformanceVector, weights: Weights) -> float:
    """Weighted-sum overall score; criteria are summed in sorted-id order."""
    if set(vector.values) != set(weights.values):
        raise ValidationError(
            f"candidate {vector.candidate_id}: criteria do not match the weights"
        )
    return sum(weights.values[cid] * vector.values[cid] for cid in sorted(vector.values))


@dataclass(frozen=True)
class RankedEntry:
    candidate_id: str
    overall: float
    vector: PerformanceVector


@dataclass(frozen=True)
class RankedResult:
    """Candidates in non-increasing overall order, ties by ascending id."""

    entries: tuple[RankedEntry, ...]
    weights: Weights


def rank(vectors: list[PerformanceVector], weights: Weights) -> RankedResult:
    if not vectors:
        raise ValidationError("nothing to rank")
    ids = [v.candidate_id for v in vectors]
    if len(set(ids)) != len(ids):
        raise ValidationError("duplicate candidate ids")
    entries = [
        RankedEntry(v.candidate_id, aggregate(v, weights), v) for v in vectors
    ]
    entries.sort(key=lambda e: (-e.overall, e.candidate_id))
    return RankedResult(tuple(entries), weights)
