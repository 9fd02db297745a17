"""Domain vocabulary of the package-selection problem.

Requirements with normalized importance weights, candidate packages with
screening attributes, the satisfaction matrix relating them, matching
patterns and per-requirement thresholds, the tailoring-type risk ladder,
screening criteria, and the criteria tree that scoring aggregates over.

All types are immutable values; operations return new values.
"""

from dataclasses import dataclass, replace
from enum import Enum

from .errors import DegenerateWeightsError, NotFoundError, ValidationError

WEIGHT_SUM_TOL = 1e-9


@dataclass(frozen=True)
class Requirement:
    """One required functionality with its importance weight."""

    id: str
    label: str
    weight: float
    description: str = ""
    functional_area: str = ""

    def __post_init__(self):
        if not self.id:
            raise ValidationError("requirement id must be nonempty")
        if not (self.weight >= 0):
            raise ValidationError(f"requirement {self.id}: weight must be >= 0")


@dataclass(frozen=True)
class RequirementSet:
    """Ordered requirements whose weights sum to one."""

    requirements: tuple[Requirement, ...]

    def __post_init__(self):
        ids = [r.id for r in self.requirements]
        if len(set(ids)) != len(ids):
            raise ValidationError("requirement ids must be unique")
        # Empty sets are legal (a freshly created project); the sum rule
        # applies once any requirement exists.
        total = sum(r.weight for r in self.requirements)
        if self.requirements and abs(total - 1.0) > WEIGHT_SUM_TOL:
            raise ValidationError(f"requirement weights sum to {total!r}, expected 1")

    def __iter__(self):
        return iter(self.requirements)

    def __len__(self):
        return len(self.requirements)

    def get(self, requirement_id: str) -> Requirement:
        for r in self.requirements:
            if r.id == requirement_id:
                return r
        raise NotFoundError(f"no requirement {requirement_id!r}")


@dataclass(frozen=True)
class Candidate:
    """A candidate package plus the attributes screening filters on."""

    id: str
    name: str
    vendor: str = ""
    industry_types: frozenset[str] = frozenset()
    organization_sizes: frozenset[str] = frozenset()
    platforms: frozenset[str] = frozenset()
    tco_estimate: float = 0.0

    def __post_init__(self):
        if not self.id:
            raise ValidationError("candidate id must be nonempty")
        if not (self.tco_estimate >= 0):
            raise ValidationError(f"candidate {self.id}: tco_estimate must be >= 0")


@dataclass(frozen=True)
class SatisfactionAssessment:
    """Initial satisfaction levels, candidate x requirement -> [0, 1]."""

    levels: dict[str, dict[str, float]]

    def __post_init__(self):
        for cid, row in self.levels.items():
            for rid, a in row.items():
                if not (0.0 <= a <= 1.0):
                    raise ValidationError(
                        f"satisfaction for candidate {cid!r}, requirement {rid!r} "
                        f"is {a!r}, outside [0, 1]"
                    )

    def level(self, candidate_id: str, requirement_id: str) -> float:
        try:
            return self.levels[candidate_id][requirement_id]
        except KeyError:
            raise NotFoundError(
                f"no satisfaction entry for candidate {candidate_id!r}, "
                f"requirement {requirement_id!r}"
            ) from None

    def row(self, candidate_id: str) -> dict[str, float]:
        if candidate_id not in self.levels:
            raise NotFoundError(f"no satisfaction row for candidate {candidate_id!r}")
        return dict(self.levels[candidate_id])


@dataclass(frozen=True)
class MatchThresholds:
    """Per-requirement acceptance band for the initial satisfaction level."""

    target_level: float
    worst_acceptable: float = 0.0

    def __post_init__(self):
        if not (0.0 < self.target_level <= 1.0):
            raise ValidationError("target_level must be in (0, 1]")
        if not (0.0 <= self.worst_acceptable <= 1.0):
            raise ValidationError("worst_acceptable must be in [0, 1]")
        if self.worst_acceptable > self.target_level:
            raise ValidationError("worst_acceptable must not exceed target_level")


class MatchingPattern(Enum):
    """How a candidate's satisfaction level relates to a requirement."""

    FULFILL = "fulfill"
    DIFFER = "differ"
    FAIL = "fail"
    EXTEND = "extend"


class ExtensionImpact(Enum):
    NEUTRAL = "neutral"
    HELPFUL = "helpful"
    HURTFUL = "hurtful"


@dataclass(frozen=True)
class ExtensionNote:
    """Analyst-recorded unrequested feature of a candidate (report-only)."""

    candidate_id: str
    feature: str
    impact: ExtensionImpact = ExtensionImpact.NEUTRAL


class TailoringType(Enum):
    """Adaptation techniques, ordered from lowest to highest implementation risk."""

    CONFIGURATION = "configuration"
    BOLT_ONS = "bolt-ons"
    SCREEN_MASKS = "screen-masks"
    EXTENDED_REPORTING = "extended-reporting"
    WORKFLOW_PROGRAMMING = "workflow-programming"
    USER_EXITS = "user-exits"
    ERP_PROGRAMMING = "erp-programming"
    INTERFACE_DEVELOPMENT = "interface-development"
    PACKAGE_CODE_MODIFICATION = "package-code-modification"

    @property
    def risk_rank(self) -> int:
        """Ordinal implementation risk, 1 (lowest) through 9 (highest)."""
        return list(TailoringType).index(self) + 1


class ScreeningAttribute(Enum):
    INDUSTRY_TYPE = "industry_type"
    ORGANIZATION_SIZE = "organization_size"
    PLATFORM = "platform"
    TCO_CEILING = "tco_ceiling"


@dataclass(frozen=True)
class ScreeningCriterion:
    """One must-pass filter applied before any detailed evaluation.

    Set-valued attributes pass when the candidate supports every required
    value; tco_ceiling passes when the estimate does not exceed the ceiling.
    """

    attribute: ScreeningAttribute
    required: frozenset[str] = frozenset()
    ceiling: float | None = None

    def __post_init__(self):
        if self.attribute is ScreeningAttribute.TCO_CEILING:
            if self.ceiling is None or not (self.ceiling >= 0):
                raise ValidationError("tco_ceiling criterion needs a ceiling >= 0")
        elif not self.required:
            raise ValidationError(f"{self.attribute.value} criterion needs required values")

    def admits(self, candidate: Candidate) -> bool:
        if self.attribute is ScreeningAttribute.TCO_CEILING:
            return candidate.tco_estimate <= self.ceiling
        supported = {
            ScreeningAttribute.INDUSTRY_TYPE: candidate.industry_types,
            ScreeningAttribute.ORGANIZATION_SIZE: candidate.organization_sizes,
            ScreeningAttribute.PLATFORM: candidate.platforms,
        }[self.attribute]
        return self.required <= supported


class LeafKind(Enum):
    """How a leaf criterion is measured."""

    MACBETH_JUDGED = "macbeth-judged"
    QUANTITATIVE = "quantitative"


@dataclass(frozen=True)
class CriterionNode:
    """Node of the selection-criteria tree; leaves carry a measurement kind."""

    id: str
    label: str
    children: tuple["CriterionNode", ...] = ()
    kind: LeafKind | None = None

    def __post_init__(self):
        if not self.id:
            raise ValidationError("criterion id must be nonempty")
        if self.children and self.kind is not None:
            raise ValidationError(f"criterion {self.id}: only leaves carry a kind")
        if not self.children and self.kind is None:
            raise ValidationError(f"criterion {self.id}: leaf needs a kind")

    @property
    def is_leaf(self) -> bool:
        return not self.children


def leaf_criteria(root: CriterionNode) -> list[CriterionNode]:
    """Leaves of the tree in depth-first order; their ids must be unique."""
    leaves: list[CriterionNode] = []
    stack = [root]
    while stack:
        node = stack.pop()
        if node.is_leaf:
            leaves.append(node)
        else:
            stack.extend(reversed(node.children))
    seen = set()
    for leaf in leaves:
        if leaf.id in seen:
            raise ValidationError(f"duplicate leaf criterion id {leaf.id!r}")
        seen.add(leaf.id)
    return leaves


def classify_match(a: float, thresholds: MatchThresholds) -> MatchingPattern:
    """Place one satisfaction level into the fulfill/differ/fail bands."""
    if not (0.0 <= a <= 1.0):
        raise ValidationError(f"satisfaction level {a!r} outside [0, 1]")
    if a >= thresholds.target_level:
        return MatchingPattern.FULFILL
    if a >= thresholds.worst_acceptable:
        return MatchingPattern.DIFFER
    return MatchingPattern.FAIL


@dataclass(frozen=True)
class ScreeningResult:
    survivors: tuple[Candidate, ...]
    exclusions: dict[str, tuple[ScreeningCriterion, ...]]


def screen_candidates(
    candidates: list[Candidate], criteria: list[ScreeningCriterion]
) -> ScreeningResult:
    """Keep candidates satisfying every criterion; record why the rest fall."""
    survivors = []
    exclusions = {}
    for candidate in candidates:
        violated = tuple(c for c in criteria if not c.admits(candidate))
        if violated:
            exclusions[candidate.id] = violated
        else:
            survivors.append(candidate)
    return ScreeningResult(tuple(survivors), exclusions)


@dataclass(frozen=True)
class AddRequirement:
    requirement: Requirement
    raw_weight: float


@dataclass(frozen=True)
class RemoveRequirement:
    requirement_id: str


@dataclass(frozen=True)
class ReweightRequirement:
    requirement_id: str
    raw_weight: float


RequirementEdit = AddRequirement | RemoveRequirement | ReweightRequirement


def revise_requirements(
    current: RequirementSet, edits: list[RequirementEdit]
) -> RequirementSet:
    """Apply add/remove/reweight edits, then renormalize weights to sum 1.

    Proportions among untouched requirements are preserved: everything is
    divided by one common sum at the end.
    """
    entries: list[tuple[Requirement, float]] = [(r, r.weight) for r in current]

    def index_of(requirement_id: str) -> int:
        for i, (r, _) in enumerate(entries):
            if r.id == requirement_id:
                return i
        raise NotFoundError(f"no requirement {requirement_id!r}")

    for edit in edits:
        if isinstance(edit, AddRequirement):
            if not (edit.raw_weight >= 0):
                raise ValidationError("raw weight must be >= 0")
            if any(r.id == edit.requirement.id for r, _ in entries):
                raise ValidationError(f"duplicate requirement id {edit.requirement.id!r}")
            entries.append((edit.requirement, edit.raw_weight))
        elif isinstance(edit, RemoveRequirement):
            del entries[index_of(edit.requirement_id)]
        elif isinstance(edit, ReweightRequirement):
            if not (edit.raw_weight >= 0):
                raise ValidationError("raw weight must be >= 0")
            i = index_of(edit.requirement_id)
            entries[i] = (entries[i][0], edit.raw_weight)
        else:
            raise ValidationError(f"unknown edit {edit!r}")

    if not entries:
        raise ValidationError("revision would leave no requirements")
    total = sum(weight for _, weight in entries)
    if total <= 0:
        raise DegenerateWeightsError("all weights are zero after edits")
    revised = tuple(replace(r, weight=weight / total) for r, weight in entries)
    return RequirementSet(revised)
