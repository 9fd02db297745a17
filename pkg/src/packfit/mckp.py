"""Exact multiple-choice knapsack solving.

An instance is a list of item classes; at most one item may be taken from
each class, and the total cost of taken items must stay within the budget.
:func:`solve_mckp` maximizes total gain by branch-and-bound, using the
fractional relaxation of the problem as an upper bound. :func:`brute_force_mckp`
is an independent exhaustive oracle for cross-checking on small instances.

Both solvers share one tie-break rule: among maximum-gain selections, the
lexicographically smallest chosen-index vector wins, in class order, with
"no item" ordered before any item index. Both accumulate gains and costs in
class order, so equal selections produce bit-identical totals.
"""

from dataclasses import dataclass

import numpy as np

from .errors import SizeLimitError, ValidationError

# Enumeration ceiling for the brute-force oracle: product over classes of
# (item count + 1) choices.
BRUTE_FORCE_COMBINATION_LIMIT = 1 << 24

# Slack applied when pruning by bound, so float rounding in the relaxation
# can never cut off a strictly better selection.
_PRUNE_SLACK = 1e-9


@dataclass(frozen=True)
class MckpItem:
    gain: float
    cost: float


@dataclass(frozen=True)
class MckpInstance:
    """Ordered item classes plus a shared budget."""

    classes: list[list[MckpItem]]
    budget: float


@dataclass(frozen=True)
class MckpSelection:
    """At most one chosen item index per class; None means no item."""

    chosen: tuple[int | None, ...]
    total_gain: float
    total_cost: float


def _validate(instance: MckpInstance) -> None:
    if not np.isfinite(instance.budget) or instance.budget < 0:
        raise ValidationError("budget must be finite and nonnegative")
    for ci, items in enumerate(instance.classes):
        for ii, item in enumerate(items):
            if not (np.isfinite(item.gain) and item.gain >= 0):
                raise ValidationError(f"class {ci} item {ii}: gain must be finite and nonnegative")
            if not (np.isfinite(item.cost) and item.cost >= 0):
                raise ValidationError(f"class {ci} item {ii}: cost must be finite and nonnegative")


def _frontier_increments(items: list[MckpItem]) -> list[tuple[float, float, float]]:
    """Incremental (ratio, dgain, dcost) steps along the class's convex frontier.

    The frontier starts at the implicit empty choice (0, 0) and keeps only
    undominated items on the upper convex hull, so the per-step gain/cost
    ratios strictly decrease and a globally ratio-sorted greedy walk is the
    exact fractional-relaxation optimum.
    """
    points = sorted([(it.cost, it.gain) for it in items])
    pareto = [(0.0, 0.0)]
    for cost, gain in points:
        if gain > pareto[-1][1]:
            # Never merge into the empty-choice origin: a free item with
            # positive gain must appear as its own (vertical) frontier step.
            if cost == pareto[-1][0] and len(pareto) > 1:
                pareto[-1] = (cost, gain)
            else:
                pareto.append((cost, gain))
    hull = [pareto[0]]
    for point in pareto[1:]:
        while len(hull) >= 2:
            c1, g1 = hull[-2]
            c2, g2 = hull[-1]
            # Keep hull ratios strictly decreasing.
            if (g2 - g1) * (point[0] - c2) <= (point[1] - g2) * (c2 - c1):
                hull.pop()
            else:
                break
        hull.append(point)
    increments = []
    for (c1, g1), (c2, g2) in zip(hull, hull[1:]):
        dcost = c2 - c1
        dgain = g2 - g1
        ratio = np.inf if dcost == 0 else dgain / dcost
        increments.append((ratio, dgain, dcost))
    return increments


def _suffix_bounds(classes: list[list[MckpItem]]) -> list[list[tuple[float, float, float]]]:
    """Per start class, all remaining frontier increments sorted by ratio."""
    per_class = [_frontier_increments(items) for items in classes]
    suffixes = []
    for start in range(len(classes) + 1):
        merged = [inc for incs in per_class[start:] for inc in incs]
        merged.sort(key=lambda inc: -inc[0])
        suffixes.append(merged)
    return suffixes


def _relaxation_bound(increments: list[tuple[float, float, float]], budget: float) -> float:
    bound = 0.0
    for ratio, dgain, dcost in increments:
        if dcost <= budget:
            bound += dgain
            budget -= dcost
        else:
            if budget > 0:
                bound += ratio * budget
            break
    return bound


def solve_mckp(instance: MckpInstance) -> MckpSelection:
    """Maximize total gain under the budget, at most one item per class.

    Exact branch-and-bound over per-class choices in lexicographic order
    (no item first, then ascending item index), pruned with the fractional
    relaxation bound. Deterministic: ties resolve to the lexicographically
    smallest chosen-index vector.
    """
    _validate(instance)
    classes = instance.classes
    n = len(classes)
    suffixes = _suffix_bounds(classes)

    best_chosen = [None] * n
    best_gain = 0.0
    path: list[int | None] = []

    def descend(depth: int, gain: float, cost: float) -> None:
        nonlocal best_gain, best_chosen
        if depth == n:
            if gain > best_gain:
                best_gain = gain
                best_chosen = list(path)
            return
        slack = _PRUNE_SLACK * (1.0 + abs(best_gain))
        if gain + _relaxation_bound(suffixes[depth], instance.budget - cost) <= best_gain - slack:
            return
        path.append(None)
        descend(depth + 1, gain, cost)
        path.pop()
        for index, item in enumerate(classes[depth]):
            new_cost = cost + item.cost
            if new_cost <= instance.budget:
                path.append(index)
                descend(depth + 1, gain + item.gain, new_cost)
                path.pop()

    descend(0, 0.0, 0.0)

    total_gain, total_cost = _totals(classes, best_chosen)
    return MckpSelection(tuple(best_chosen), total_gain, total_cost)


def _totals(classes, chosen) -> tuple[float, float]:
    gain = 0.0
    cost = 0.0
    for items, index in zip(classes, chosen):
        if index is not None:
            gain += items[index].gain
            cost += items[index].cost
    return gain, cost


def brute_force_mckp(instance: MckpInstance) -> MckpSelection:
    """Exhaustively enumerate every per-class choice (including "none").

    Test oracle for :func:`solve_mckp`; vectorized over the full cartesian
    product of choices, so the product of per-class choice counts must stay
    below BRUTE_FORCE_COMBINATION_LIMIT.
    """
    _validate(instance)
    classes = instance.classes

    combinations = 1
    for items in classes:
        combinations *= len(items) + 1
        if combinations > BRUTE_FORCE_COMBINATION_LIMIT:
            raise SizeLimitError(
                f"instance enumerates more than {BRUTE_FORCE_COMBINATION_LIMIT} combinations"
            )

    # Choice 0 is "no item"; choice k is item k-1. Accumulating class by
    # class keeps additions in class order, matching solve_mckp bit for bit,
    # and the ravel order is exactly the lexicographic order of choices.
    gains = np.zeros(1)
    costs = np.zeros(1)
    for items in classes:
        class_gains = np.array([0.0] + [it.gain for it in items])
        class_costs = np.array([0.0] + [it.cost for it in items])
        gains = (gains[:, None] + class_gains[None, :]).ravel()
        costs = (costs[:, None] + class_costs[None, :]).ravel()

    feasible_gains = np.where(costs <= instance.budget, gains, -np.inf)
    flat = int(np.argmax(feasible_gains))

    chosen: list[int | None] = []
    for items in reversed(classes):
        flat, choice = divmod(flat, len(items) + 1)
        chosen.append(None if choice == 0 else choice - 1)
    chosen.reverse()

    total_gain, total_cost = _totals(classes, chosen)
    return MckpSelection(tuple(chosen), total_gain, total_cost)
