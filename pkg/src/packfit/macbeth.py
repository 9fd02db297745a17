"""Cardinal scales and criteria weights from qualitative difference judgments.

Decision makers compare pairs of elements (candidate levels, or reference
profiles when weighting criteria) on a seven-category attractiveness-
difference ladder, category 0 meaning no difference and 6 an extreme one.
Judgments may span a run of categories or be declared unknown. A linear
program checks that all judgments can coexist and extracts a numeric scale
when they do.

Constraint system, with one free value per element, the last element pinned
to 0, and a unit step of 1:
  (a) consecutive elements in the stated order: v(earlier) >= v(later);
  (b) a category-0 judgment on (x, y): v(x) - v(y) = 0;
  (c) a judgment [lo, hi] with lo >= 1 on (x, y): v(x) - v(y) >= lo;
  (d) for judged pairs p, q with lo(p) > hi(q): diff(p) >= diff(q) + lo(p) - hi(q).
The extracted scale minimizes the first element's value, then is rescaled
so the anchors land exactly on 1 and 0.
"""

from dataclasses import dataclass

from .errors import (
    ConsistencyError,
    DegenerateWeightsError,
    StateError,
    ValidationError,
)
from .lp import (
    Constraint,
    LinearProgram,
    Objective,
    Variable,
    solve_lp,
)

CATEGORY_MIN = 0
CATEGORY_MAX = 6

WEIGHT_SUM_TOL = 1e-9

# Slack used when checking an externally produced (e.g. rounded) scale
# against the judgment constraints.
DEFAULT_SCALE_TOL = 0.005


@dataclass(frozen=True)
class AttractivenessJudgment:
    """A difference-of-attractiveness interval on the 0..6 category ladder."""

    lo: int
    hi: int

    def __post_init__(self):
        if not (CATEGORY_MIN <= self.lo <= self.hi <= CATEGORY_MAX):
            raise ValidationError(f"judgment [{self.lo}, {self.hi}] is not a valid interval")
        if self.lo == 0 and self.hi != 0:
            raise ValidationError("category 0 cannot join a union with positive categories")

    @classmethod
    def category(cls, k: int) -> "AttractivenessJudgment":
        return cls(k, k)

    @classmethod
    def union(cls, lo: int, hi: int) -> "AttractivenessJudgment":
        return cls(lo, hi)

    @classmethod
    def dont_know(cls) -> "AttractivenessJudgment":
        """An unknown but positive difference: anywhere from category 1 to 6."""
        return cls(1, 6)


@dataclass(frozen=True)
class JudgmentMatrix:
    """Pairwise judgments over elements listed in decreasing attractiveness.

    Judgments are keyed by (better, worse) pairs and allowed only in that
    orientation. ``good`` and ``bad`` name optional anchor elements that the
    derived scale maps to 1 and 0.
    """

    context: str
    elements: tuple[str, ...]
    judgments: dict[tuple[str, str], AttractivenessJudgment]
    good: str | None = None
    bad: str | None = None

    def __post_init__(self):
        if len(self.elements) < 2:
            raise ValidationError("a judgment matrix needs at least two elements")
        if len(set(self.elements)) != len(self.elements):
            raise ValidationError("matrix elements must be unique")
        position = {e: i for i, e in enumerate(self.elements)}
        for x, y in self.judgments:
            if x not in position or y not in position:
                raise ValidationError(f"judged pair ({x!r}, {y!r}) uses unknown elements")
            if position[x] >= position[y]:
                raise ValidationError(
                    f"judged pair ({x!r}, {y!r}) is not in decreasing-attractiveness order"
                )
        for anchor in (self.good, self.bad):
            if anchor is not None and anchor not in position:
                raise ValidationError(f"anchor {anchor!r} is not an element")
        if self.good is not None and self.bad is not None:
            if self.good != self.elements[0] or self.bad != self.elements[-1]:
                raise ValidationError("anchors must be the first and last elements")

    def ordered_pairs(self) -> list[tuple[str, str]]:
        """Judged pairs sorted by element positions; the canonical pass order."""
        position = {e: i for i, e in enumerate(self.elements)}
        return sorted(self.judgments, key=lambda p: (position[p[0]], position[p[1]]))


@dataclass(frozen=True)
class ConsistencyReport:
    consistent: bool
    conflicts: tuple[tuple[str, str], ...] = ()


@dataclass(frozen=True)
class CardinalScale:
    """Element values on [0, 1] plus the raw pre-normalization LP solution."""

    context: str
    value: dict[str, float]
    raw: dict[str, float]


@dataclass(frozen=True)
class Weights:
    """Positive leaf-criterion weights summing to one."""

    values: dict[str, float]

    def __post_init__(self):
        if not self.values:
            raise ValidationError("weights must be nonempty")
        for cid, w in self.values.items():
            if not (w > 0):
                raise ValidationError(f"weight for {cid!r} must be positive")
        total = sum(self.values.values())
        if abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise ValidationError(f"weights sum to {total!r}, expected 1")


def _build_lp(
    elements: tuple[str, ...],
    judgments: dict[tuple[str, str], AttractivenessJudgment],
) -> LinearProgram:
    variables = [
        Variable(e, lower=0.0, upper=0.0 if i == len(elements) - 1 else None)
        for i, e in enumerate(elements)
    ]
    constraints = []
    for earlier, later in zip(elements, elements[1:]):
        constraints.append(
            Constraint({earlier: 1.0, later: -1.0}, ">=", 0.0)
        )
    position = {e: i for i, e in enumerate(elements)}
    pairs = sorted(judgments, key=lambda p: (position[p[0]], position[p[1]]))
    for x, y in pairs:
        j = judgments[(x, y)]
        if j.lo == 0:
            constraints.append(Constraint({x: 1.0, y: -1.0}, "=", 0.0))
        else:
            constraints.append(Constraint({x: 1.0, y: -1.0}, ">=", float(j.lo)))
    for px, py in pairs:
        jp = judgments[(px, py)]
        for qx, qy in pairs:
            if (px, py) == (qx, qy):
                continue
            jq = judgments[(qx, qy)]
            if jp.lo > jq.hi:
                # diff(p) - diff(q) >= lo(p) - hi(q); coefficients may touch
                # shared elements, so accumulate instead of assigning.
                coeff: dict[str, float] = {}
                for e, c in ((px, 1.0), (py, -1.0), (qx, -1.0), (qy, 1.0)):
                    coeff[e] = coeff.get(e, 0.0) + c
                coeff = {e: c for e, c in coeff.items() if c != 0.0}
                constraints.append(Constraint(coeff, ">=", float(jp.lo - jq.hi)))
    objective = Objective("min", {elements[0]: 1.0})
    return LinearProgram(variables, constraints, objective)


def _feasible(
    elements: tuple[str, ...],
    judgments: dict[tuple[str, str], AttractivenessJudgment],
) -> bool:
    return solve_lp(_build_lp(elements, judgments)).is_optimal()


def _greedy_witness(matrix: JudgmentMatrix) -> list[tuple[str, str]]:
    """Drop judgments one at a time, in pair order, until the rest coexist."""
    remaining = dict(matrix.judgments)
    removed: list[tuple[str, str]] = []
    for pair in matrix.ordered_pairs():
        if _feasible(matrix.elements, remaining):
            break
        del remaining[pair]
        removed.append(pair)
    return removed


def check_consistency(matrix: JudgmentMatrix) -> ConsistencyReport:
    """Report whether all judgments can coexist on one cardinal scale.

    When they cannot, ``conflicts`` holds a set of judgments whose removal
    restores feasibility (a witness, not necessarily minimal).
    """
    if _feasible(matrix.elements, matrix.judgments):
        return ConsistencyReport(consistent=True)
    return ConsistencyReport(consistent=False, conflicts=tuple(_greedy_witness(matrix)))


def locate_conflicts(matrix: JudgmentMatrix) -> list[tuple[str, str]]:
    """Conflict witness for an inconsistent matrix; see check_consistency."""
    if _feasible(matrix.elements, matrix.judgments):
        raise StateError("matrix is consistent; there are no conflicts to locate")
    return _greedy_witness(matrix)


def derive_scale(matrix: JudgmentMatrix) -> CardinalScale:
    """Extract a cardinal scale from a consistent matrix.

    Raw values come from the minimizing linear program; the published scale
    is the affine rescaling that puts the anchors (or, without anchors, the
    first and last elements) exactly at 1 and 0.
    """
    outcome = solve_lp(_build_lp(matrix.elements, matrix.judgments))
    if not outcome.is_optimal():
        report = ConsistencyReport(
            consistent=False, conflicts=tuple(_greedy_witness(matrix))
        )
        raise ConsistencyError(
            f"judgments for {matrix.context!r} are mutually inconsistent", report=report
        )
    raw = {e: outcome.assignment[e] for e in matrix.elements}
    top = matrix.good if matrix.good is not None else matrix.elements[0]
    bottom = matrix.bad if matrix.bad is not None else matrix.elements[-1]
    span = raw[top] - raw[bottom]
    if span <= 0:
        raise ValidationError(
            f"matrix {matrix.context!r} does not separate {top!r} from {bottom!r}; "
            "no positive judgment distinguishes them"
        )
    value = {e: (raw[e] - raw[bottom]) / span for e in matrix.elements}
    return CardinalScale(context=matrix.context, value=value, raw=raw)


def derive_weights(profile_matrix: JudgmentMatrix) -> Weights:
    """Turn judgments over per-criterion reference profiles into weights.

    Elements are one profile per leaf criterion (id = criterion id) plus the
    bad anchor last. Raw profile values are normalized by their sum, so the
    weights total 1.
    """
    if profile_matrix.bad is None:
        raise ValidationError("weighting matrix needs a bad anchor")
    if profile_matrix.bad != profile_matrix.elements[-1]:
        raise ValidationError("bad anchor must be the least attractive element")
    scale = derive_scale(profile_matrix)
    profiles = [e for e in profile_matrix.elements if e != profile_matrix.bad]
    raws = {e: scale.raw[e] for e in profiles}
    zero = [e for e, v in raws.items() if v <= 0]
    if zero:
        raise DegenerateWeightsError(
            f"profiles {zero} are not separated from the bad reference"
        )
    total = sum(raws.values())
    return Weights({e: raws[e] / total for e in profiles})


def scale_respects_judgments(
    matrix: JudgmentMatrix,
    value: dict[str, float],
    tol: float = DEFAULT_SCALE_TOL,
) -> bool:
    """Check an externally produced scale against the judgment constraints.

    The scale's unit step is unknown, so this decides whether any positive
    step size makes all constraints hold within ``tol``. Every interval
    constraint puts an upper bound on the step; the scale passes when the
    ordinal and equality constraints hold and the tightest bound stays
    positive.
    """
    missing = [e for e in matrix.elements if e not in value]
    if missing:
        raise ValidationError(f"scale lacks elements: {missing}")
    for earlier, later in zip(matrix.elements, matrix.elements[1:]):
        if value[earlier] - value[later] < -tol:
            return False
    step_caps: list[float] = []
    pairs = matrix.ordered_pairs()
    for x, y in pairs:
        j = matrix.judgments[(x, y)]
        diff = value[x] - value[y]
        if j.lo == 0:
            if abs(diff) > tol:
                return False
        else:
            step_caps.append((diff + tol) / j.lo)
    for px, py in pairs:
        jp = matrix.judgments[(px, py)]
        for qx, qy in pairs:
            if (px, py) == (qx, qy):
                continue
            jq = matrix.judgments[(qx, qy)]
            if jp.lo > jq.hi:
                margin = (value[px] - value[py]) - (value[qx] - value[qy])
                step_caps.append((margin + tol) / (jp.lo - jq.hi))
    return min(step_caps, default=1.0) > 0
