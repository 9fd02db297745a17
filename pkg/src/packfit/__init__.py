"""Decision support for selecting and tailoring configurable software packages.

The library walks the whole selection funnel: requirements with normalized
weights, candidate screening, gap analysis against per-requirement
thresholds, exact budget-constrained adaptation planning, qualitative
judgment matrices turned into cardinal scales and criteria weights, and a
weighted-sum ranking of the surviving candidates. Projects persist as
canonical JSON documents; a CLI and an HTTP service drive the same
pipeline.
"""

from .adaptation import (
    AdaptationInstance,
    AdaptationPlan,
    AdaptationStrategy,
    Mismatch,
    QuantitativePerformance,
    objective_value,
    optimize_adaptation,
    performance_profile,
)
from .errors import (
    ConsistencyError,
    DegenerateWeightsError,
    NotFoundError,
    PackfitError,
    PreconditionError,
    SchemaVersionError,
    SizeLimitError,
    StateError,
    ValidationError,
    VersionConflictError,
)
from .macbeth import (
    AttractivenessJudgment,
    CardinalScale,
    ConsistencyReport,
    JudgmentMatrix,
    Weights,
    check_consistency,
    derive_scale,
    derive_weights,
    locate_conflicts,
    scale_respects_judgments,
)
from .mckp import MckpInstance, MckpItem, MckpSelection, brute_force_mckp, solve_mckp
from .model import (
    Candidate,
    CriterionNode,
    ExtensionImpact,
    ExtensionNote,
    LeafKind,
    MatchThresholds,
    MatchingPattern,
    Requirement,
    RequirementSet,
    SatisfactionAssessment,
    ScreeningAttribute,
    ScreeningCriterion,
    TailoringType,
    classify_match,
    leaf_criteria,
    revise_requirements,
    screen_candidates,
)
from .project import (
    Project,
    QuantitativeBinding,
    Stage,
    Violation,
    load,
    new_project,
    save,
    validate_document,
)
from .scoring import (
    PerformanceVector,
    RankedResult,
    ValueFunction,
    aggregate,
    rank,
    to_elementary_value,
)

__all__ = [
    "AdaptationInstance",
    "AdaptationPlan",
    "AdaptationStrategy",
    "AttractivenessJudgment",
    "Candidate",
    "CardinalScale",
    "ConsistencyError",
    "ConsistencyReport",
    "CriterionNode",
    "DegenerateWeightsError",
    "ExtensionImpact",
    "ExtensionNote",
    "JudgmentMatrix",
    "LeafKind",
    "MatchThresholds",
    "MatchingPattern",
    "MckpInstance",
    "MckpItem",
    "MckpSelection",
    "Mismatch",
    "NotFoundError",
    "PackfitError",
    "PerformanceVector",
    "PreconditionError",
    "Project",
    "QuantitativeBinding",
    "QuantitativePerformance",
    "RankedResult",
    "Requirement",
    "RequirementSet",
    "SatisfactionAssessment",
    "SchemaVersionError",
    "ScreeningAttribute",
    "ScreeningCriterion",
    "SizeLimitError",
    "Stage",
    "StateError",
    "TailoringType",
    "ValidationError",
    "ValueFunction",
    "VersionConflictError",
    "Violation",
    "Weights",
    "aggregate",
    "brute_force_mckp",
    "check_consistency",
    "classify_match",
    "derive_scale",
    "derive_weights",
    "leaf_criteria",
    "load",
    "locate_conflicts",
    "new_project",
    "objective_value",
    "optimize_adaptation",
    "performance_profile",
    "rank",
    "revise_requirements",
    "save",
    "scale_respects_judgments",
    "screen_candidates",
    "solve_mckp",
    "to_elementary_value",
    "validate_document",
]
