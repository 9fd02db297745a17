import pytest

from packfit.errors import ValidationError
from packfit.lp import (
    Constraint,
    LinearProgram,
    LpStatus,
    Objective,
    Variable,
    solve_lp,
)


def test_minimize_simple_bounded():
    # min x + y  s.t. x + y >= 2, x >= 0.5; optimum value 2.
    program = LinearProgram(
        variables=[Variable("x", lower=0.0), Variable("y", lower=0.0)],
        constraints=[
            Constraint({"x": 1.0, "y": 1.0}, ">=", 2.0),
            Constraint({"x": 1.0}, ">=", 0.5),
        ],
        objective=Objective("min", {"x": 1.0, "y": 1.0}),
    )
    outcome = solve_lp(program)
    assert outcome.status is LpStatus.OPTIMAL
    assert outcome.value == pytest.approx(2.0, abs=1e-9)
    assert outcome.assignment["x"] + outcome.assignment["y"] == pytest.approx(2.0, abs=1e-9)


def test_equality_constraint():
    program = LinearProgram(
        variables=[Variable("x"), Variable("y")],
        constraints=[
            Constraint({"x": 1.0, "y": -1.0}, "=", 0.0),
            Constraint({"x": 1.0}, ">=", 3.0),
        ],
        objective=Objective("min", {"x": 1.0, "y": 1.0}),
    )
    outcome = solve_lp(program)
    assert outcome.is_optimal()
    assert outcome.assignment["x"] == pytest.approx(outcome.assignment["y"], abs=1e-9)
    assert outcome.value == pytest.approx(6.0, abs=1e-9)


def test_feasibility_only_program():
    program = LinearProgram(
        variables=[Variable("x", lower=0.0, upper=1.0)],
        constraints=[Constraint({"x": 1.0}, ">=", 0.25)],
    )
    outcome = solve_lp(program)
    assert outcome.is_optimal()
    assert outcome.value == 0.0
    assert 0.25 - 1e-9 <= outcome.assignment["x"] <= 1.0 + 1e-9


def test_infeasible_detected():
    program = LinearProgram(
        variables=[Variable("x", lower=0.0, upper=1.0)],
        constraints=[Constraint({"x": 1.0}, ">=", 2.0)],
        objective=Objective("min", {"x": 1.0}),
    )
    outcome = solve_lp(program)
    assert outcome.status is LpStatus.INFEASIBLE
    assert not outcome.is_optimal()
    assert outcome.assignment is None


def test_unbounded_detected():
    program = LinearProgram(
        variables=[Variable("x")],
        constraints=[],
        objective=Objective("min", {"x": 1.0}),
    )
    outcome = solve_lp(program)
    assert outcome.status is LpStatus.UNBOUNDED


def test_upper_bound_pins_variable():
    program = LinearProgram(
        variables=[Variable("x", lower=0.0, upper=0.0), Variable("y", lower=0.0)],
        constraints=[Constraint({"y": 1.0, "x": -1.0}, ">=", 1.5)],
        objective=Objective("min", {"y": 1.0}),
    )
    outcome = solve_lp(program)
    assert outcome.is_optimal()
    assert outcome.assignment["x"] == pytest.approx(0.0, abs=1e-9)
    assert outcome.assignment["y"] == pytest.approx(1.5, abs=1e-9)


def test_maximize_direction():
    program = LinearProgram(
        variables=[Variable("x", lower=0.0, upper=4.0)],
        constraints=[],
        objective=Objective("max", {"x": 1.0}),
    )
    outcome = solve_lp(program)
    assert outcome.is_optimal()
    assert outcome.value == pytest.approx(4.0, abs=1e-9)


def test_malformed_programs_rejected():
    with pytest.raises(ValidationError):
        solve_lp(
            LinearProgram(
                variables=[Variable("x"), Variable("x")],
                constraints=[],
                objective=Objective("min", {"x": 1.0}),
            )
        )
    with pytest.raises(ValidationError):
        solve_lp(
            LinearProgram(
                variables=[Variable("x")],
                constraints=[Constraint({"ghost": 1.0}, ">=", 0.0)],
            )
        )
    with pytest.raises(ValidationError):
        solve_lp(
            LinearProgram(
                variables=[Variable("x", lower=2.0, upper=1.0)],
                constraints=[],
            )
        )
    with pytest.raises(ValidationError):
        solve_lp(
            LinearProgram(
                variables=[Variable("x")],
                constraints=[Constraint({"x": 1.0}, "~", 0.0)],
            )
        )


def test_repeat_solve_is_deterministic():
    program = LinearProgram(
        variables=[Variable("x", lower=0.0), Variable("y", lower=0.0)],
        constraints=[
            Constraint({"x": 2.0, "y": 1.0}, ">=", 7.0),
            Constraint({"x": 1.0, "y": 3.0}, ">=", 9.0),
        ],
        objective=Objective("min", {"x": 1.0, "y": 1.0}),
    )
    first = solve_lp(program)
    second = solve_lp(program)
    assert first.value == second.value
    assert first.assignment == second.assignment
