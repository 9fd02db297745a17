"""Per-candidate adaptation planning.

A mismatch is a requirement the candidate does not fully satisfy; each
mismatch offers tailoring strategies that raise satisfaction at some risk
and cost. Planning picks at most one strategy per mismatch to maximize
risk-discounted fitness gain within the adaptation budget, then the four
quantitative performance measures summarize the outcome.
"""

from dataclasses import dataclass

from .errors import ValidationError
from .mckp import MckpInstance, MckpItem, solve_mckp
from .model import RequirementSet, TailoringType


@dataclass(frozen=True)
class AdaptationStrategy:
    """One tailoring option: anticipated satisfaction b, risk r, cost c."""

    id: str
    tailoring_type: TailoringType
    anticipated_satisfaction: float
    risk: float
    cost: float

    def __post_init__(self):
        if not self.id:
            raise ValidationError("strategy id must be nonempty")
        if not (0.0 <= self.anticipated_satisfaction <= 1.0):
            raise ValidationError(f"strategy {self.id}: anticipated satisfaction outside [0, 1]")
        if not (0.0 <= self.risk <= 1.0):
            raise ValidationError(f"strategy {self.id}: risk outside [0, 1]")
        if not (self.cost >= 0):
            raise ValidationError(f"strategy {self.id}: cost must be >= 0")

    @property
    def omega(self) -> int:
        """1 when the strategy changes delivered code paths, 0 for pure configuration."""
        return 0 if self.tailoring_type is TailoringType.CONFIGURATION else 1


@dataclass(frozen=True)
class Mismatch:
    """An unmet requirement with its candidate-specific strategy menu."""

    requirement_id: str
    weight: float
    initial_satisfaction: float
    strategies: tuple[AdaptationStrategy, ...]

    def __post_init__(self):
        if not (self.weight >= 0):
            raise ValidationError(f"mismatch {self.requirement_id}: weight must be >= 0")
        if not (0.0 <= self.initial_satisfaction < 1.0):
            raise ValidationError(
                f"mismatch {self.requirement_id}: initial satisfaction must be in [0, 1)"
            )
        ids = [s.id for s in self.strategies]
        if len(set(ids)) != len(ids):
            raise ValidationError(f"mismatch {self.requirement_id}: duplicate strategy ids")
        for s in self.strategies:
            # A strategy that does not improve fitness is a data error.
            if s.anticipated_satisfaction <= self.initial_satisfaction:
                raise ValidationError(
                    f"mismatch {self.requirement_id}: strategy {s.id} does not "
                    f"improve satisfaction"
                )

    def strategy(self, strategy_id: str) -> AdaptationStrategy:
        for s in self.strategies:
            if s.id == strategy_id:
                return s
        raise ValidationError(
            f"mismatch {self.requirement_id}: unknown strategy {strategy_id!r}"
        )


@dataclass(frozen=True)
class AdaptationInstance:
    """All mismatches of one candidate plus the adaptation budget."""

    candidate_id: str
    mismatches: tuple[Mismatch, ...]
    budget: float

    def __post_init__(self):
        if not (self.budget >= 0):
            raise ValidationError(f"candidate {self.candidate_id}: budget must be >= 0")
        ids = [m.requirement_id for m in self.mismatches]
        if len(set(ids)) != len(ids):
            raise ValidationError(
                f"candidate {self.candidate_id}: duplicate mismatch requirement ids"
            )


@dataclass(frozen=True)
class AdaptationPlan:
    """Chosen strategy per mismatch (None = leave unresolved) with totals."""

    candidate_id: str
    chosen: dict[str, str | None]
    objective: float
    total_cost: float

    def is_empty(self) -> bool:
        return all(k is None for k in self.chosen.values())


def _gain(weight: float, a: float, strategy: AdaptationStrategy) -> float:
    # Shared by objective_value and optimize_adaptation so both accumulate
    # bit-identical terms.
    return weight * (strategy.anticipated_satisfaction - a) * (1.0 - strategy.risk)


def objective_value(instance: AdaptationInstance, assignment: dict[str, str | None]) -> float:
    """Risk-discounted fitness gain of an assignment; empty assignment gives 0."""
    known = {m.requirement_id for m in instance.mismatches}
    unknown = set(assignment) - known
    if unknown:
        raise ValidationError(f"assignment references unknown mismatches: {sorted(unknown)}")
    total = 0.0
    for m in instance.mismatches:
        strategy_id = assignment.get(m.requirement_id)
        if strategy_id is not None:
            total += _gain(m.weight, m.initial_satisfaction, m.strategy(strategy_id))
    return total


def optimize_adaptation(instance: AdaptationInstance) -> AdaptationPlan:
    """Maximize the adaptation objective within budget, one strategy per mismatch.

    Exact; a budget too tight for any strategy yields the empty plan. Ties
    inherit the knapsack solver's deterministic preference for leaving
    earlier mismatches unresolved (lexicographically smallest choice).
    """
    classes = [
        [
            MckpItem(gain=_gain(m.weight, m.initial_satisfaction, s), cost=s.cost)
            for s in m.strategies
        ]
        for m in instance.mismatches
    ]
    selection = solve_mckp(MckpInstance(classes=classes, budget=instance.budget))
    chosen: dict[str, str | None] = {}
    for m, index in zip(instance.mismatches, selection.chosen):
        chosen[m.requirement_id] = None if index is None else m.strategies[index].id
    return AdaptationPlan(
        candidate_id=instance.candidate_id,
        chosen=chosen,
        objective=selection.total_gain,
        total_cost=selection.total_cost,
    )


@dataclass(frozen=True)
class QuantitativePerformance:
    """The four adaptation outcome measures of one candidate."""

    functional_coverage: float
    adaptation_risk: float
    adaptation_cost: float
    adaptation_degree: float

    def as_dict(self) -> dict[str, float]:
        return {
            "functional_coverage": self.functional_coverage,
            "adaptation_risk": self.adaptation_risk,
            "adaptation_cost": self.adaptation_cost,
            "adaptation_degree": self.adaptation_degree,
        }


def performance_profile(
    requirements: RequirementSet,
    satisfaction_row: dict[str, float],
    instance: AdaptationInstance,
    plan: AdaptationPlan,
) -> QuantitativePerformance:
    """Evaluate coverage, risk, cost, and adaptation degree for a plan.

    Coverage spans every requirement (unmodified ones contribute their
    initial satisfaction); the other three measures only involve mismatches
    whose strategy was chosen. Risk is the gain-weighted average of chosen
    strategy risks, 0 for an empty plan.
    """
    if plan.candidate_id != instance.candidate_id:
        raise ValidationError("plan and instance belong to different candidates")
    known = {m.requirement_id for m in instance.mismatches}
    if set(plan.chosen) - known:
        raise ValidationError("plan references mismatches not in the instance")
    missing = [r.id for r in requirements if r.id not in satisfaction_row]
    if missing:
        raise ValidationError(f"satisfaction row lacks requirements: {missing}")

    anticipated: dict[str, float] = {}
    weighted_delta = 0.0
    discounted_delta = 0.0
    cost = 0.0
    degree = 0.0
    for m in instance.mismatches:
        strategy_id = plan.chosen.get(m.requirement_id)
        if strategy_id is None:
            continue
        s = m.strategy(strategy_id)
        delta = s.anticipated_satisfaction - m.initial_satisfaction
        anticipated[m.requirement_id] = s.anticipated_satisfaction
        weighted_delta += m.weight * delta
        discounted_delta += m.weight * delta * (1.0 - s.risk)
        cost += s.cost
        degree += m.weight * delta * s.omega

    coverage = 0.0
    for r in requirements:
        a = satisfaction_row[r.id]
        coverage += r.weight * max(anticipated.get(r.id, 0.0), a)

    risk = 0.0 if weighted_delta == 0.0 else 1.0 - discounted_delta / weighted_delta
    return QuantitativePerformance(
        functional_coverage=coverage,
        adaptation_risk=risk,
        adaptation_cost=cost,
        adaptation_degree=degree,
    )
