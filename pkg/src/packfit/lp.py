"""Small dense linear programs and their outcomes.

Problems in this package are tiny (tens of variables), so everything is
solved numerically with a feasibility tolerance of ``FEASIBILITY_TOL``.
The solver is deterministic: identical programs yield identical outcomes.
"""

from dataclasses import dataclass, field
from enum import Enum

import numpy as np
from scipy.optimize import linprog

from .errors import PackfitError, ValidationError

FEASIBILITY_TOL = 1e-9

LESS_EQUAL = "<="
GREATER_EQUAL = ">="
EQUAL = "="

_RELATIONS = (LESS_EQUAL, GREATER_EQUAL, EQUAL)


@dataclass(frozen=True)
class Variable:
    """A decision variable, unbounded unless bounds are given."""

    id: str
    lower: float | None = None
    upper: float | None = None


@dataclass(frozen=True)
class Constraint:
    """A linear constraint ``sum(coeff * var) <relation> rhs``."""

    coefficients: dict[str, float]
    relation: str
    rhs: float


@dataclass(frozen=True)
class Objective:
    direction: str  # "min" or "max"
    coefficients: dict[str, float] = field(default_factory=dict)


@dataclass(frozen=True)
class LinearProgram:
    """A linear program; ``objective=None`` means a pure feasibility problem."""

    variables: list[Variable]
    constraints: list[Constraint]
    objective: Objective | None = None


class LpStatus(Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


@dataclass(frozen=True)
class LpOutcome:
    """Result of :func:`solve_lp`.

    For OPTIMAL outcomes, ``assignment`` satisfies every constraint within
    ``FEASIBILITY_TOL`` and ``value`` is the objective at that point (0.0 for
    feasibility-only programs).
    """

    status: LpStatus
    assignment: dict[str, float] | None = None
    value: float | None = None

    def is_optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


def _validate(lp: LinearProgram) -> dict[str, int]:
    index = {}
    for var in lp.variables:
        if var.id in index:
            raise ValidationError(f"duplicate variable {var.id!r}")
        if var.lower is not None and var.upper is not None and var.lower > var.upper:
            raise ValidationError(f"variable {var.id!r} has lower > upper bound")
        index[var.id] = len(index)
    for i, con in enumerate(lp.constraints):
        if con.relation not in _RELATIONS:
            raise ValidationError(f"constraint {i} has unknown relation {con.relation!r}")
        for name in con.coefficients:
            if name not in index:
                raise ValidationError(f"constraint {i} references unknown variable {name!r}")
    if lp.objective is not None:
        if lp.objective.direction not in ("min", "max"):
            raise ValidationError(f"unknown objective direction {lp.objective.direction!r}")
        for name in lp.objective.coefficients:
            if name not in index:
                raise ValidationError(f"objective references unknown variable {name!r}")
    return index


def solve_lp(lp: LinearProgram) -> LpOutcome:
    """Solve a small LP, returning OPTIMAL, INFEASIBLE, or UNBOUNDED.

    Raises ValidationError for malformed programs (unknown variable
    references, inverted bounds, unknown relations).
    """
    index = _validate(lp)
    n = len(lp.variables)

    c = np.zeros(n)
    sign = 1.0
    if lp.objective is not None:
        sign = -1.0 if lp.objective.direction == "max" else 1.0
        for name, coeff in lp.objective.coefficients.items():
            c[index[name]] = sign * coeff

    a_ub, b_ub, a_eq, b_eq = [], [], [], []
    for con in lp.constraints:
        row = np.zeros(n)
        for name, coeff in con.coefficients.items():
            row[index[name]] = coeff
        if con.relation == LESS_EQUAL:
            a_ub.append(row)
            b_ub.append(con.rhs)
        elif con.relation == GREATER_EQUAL:
            a_ub.append(-row)
            b_ub.append(-con.rhs)
        else:
            a_eq.append(row)
            b_eq.append(con.rhs)

    result = linprog(
        c,
        A_ub=np.array(a_ub) if a_ub else None,
        b_ub=np.array(b_ub) if b_ub else None,
        A_eq=np.array(a_eq) if a_eq else None,
        b_eq=np.array(b_eq) if b_eq else None,
        bounds=[(v.lower, v.upper) for v in lp.variables],
        method="highs",
        options={
            "primal_feasibility_tolerance": FEASIBILITY_TOL,
            "dual_feasibility_tolerance": FEASIBILITY_TOL,
        },
    )

    if result.status == 2:
        return LpOutcome(LpStatus.INFEASIBLE)
    if result.status == 3:
        return LpOutcome(LpStatus.UNBOUNDED)
    if result.status != 0:
        raise PackfitError(f"LP solver failed: {result.message}")

    assignment = {var.id: float(result.x[i]) for i, var in enumerate(lp.variables)}
    value = 0.0 if lp.objective is None else sign * float(result.fun)
    return LpOutcome(LpStatus.OPTIMAL, assignment=assignment, value=value)
