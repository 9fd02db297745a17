"""Project-level computations: plans, scales, weights, ranking, caching.

Every derived artifact is cached in the project file together with a hash
of the inputs it was computed from. A cached entry whose hash no longer
matches the current inputs is stale; it stays in the file (so interfaces
can show outdated results as such) until a recomputation overwrites it.

Budget overrides are what-if queries: they bypass and never touch caches.
"""

from dataclasses import dataclass

from .adaptation import (
    AdaptationInstance,
    AdaptationPlan,
    Mismatch,
    QuantitativePerformance,
    optimize_adaptation,
    performance_profile,
)
from .errors import NotFoundError, PreconditionError
from .macbeth import CardinalScale, Weights, derive_scale, derive_weights
from .model import LeafKind, leaf_criteria, screen_candidates
from .project import (
    WEIGHTING_MATRIX_ID,
    Project,
    input_hash,
    matrix_to_doc,
    project_to_doc,
)
from .scoring import PerformanceVector, RankedResult, rank, to_elementary_value


def build_adaptation_instance(
    project: Project, candidate_id: str, budget: float | None = None
) -> AdaptationInstance:
    """Collect the candidate's mismatches and strategy menus into one instance.

    Mismatches are the requirements whose satisfaction level is below 1, in
    requirement order. ``budget`` overrides the stored budget when given.
    """
    project.candidate(candidate_id)
    try:
        row = project.satisfaction.row(candidate_id)
    except NotFoundError:
        raise PreconditionError(
            f"candidate {candidate_id!r} has no satisfaction assessment yet"
        ) from None
    missing = [r.id for r in project.requirements if r.id not in row]
    if missing:
        raise PreconditionError(
            f"candidate {candidate_id!r} lacks satisfaction levels for {missing}"
        )
    menus = project.strategies.get(candidate_id, {})
    mismatches = tuple(
        Mismatch(
            requirement_id=r.id,
            weight=r.weight,
            initial_satisfaction=row[r.id],
            strategies=menus.get(r.id, ()),
        )
        for r in project.requirements
        if row[r.id] < 1.0
    )
    if budget is None:
        budget = project.budgets.get(candidate_id, 0.0)
    return AdaptationInstance(
        candidate_id=candidate_id, mismatches=mismatches, budget=budget
    )


def plan_inputs(project: Project, candidate_id: str) -> dict:
    """Everything the stored plan of one candidate was computed from."""
    row = project.satisfaction.levels.get(candidate_id, {})
    strategies = project_to_doc(project)["adaptation"]["strategies"].get(candidate_id, {})
    return {
        "budget": float(project.budgets.get(candidate_id, 0.0)),
        "requirements": [[r.id, float(r.weight)] for r in project.requirements],
        "satisfaction": {rid: float(a) for rid, a in row.items()},
        "strategies": strategies,
    }


def compute_plan(
    project: Project, candidate_id: str, budget: float | None = None
) -> tuple[AdaptationPlan, QuantitativePerformance]:
    instance = build_adaptation_instance(project, candidate_id, budget)
    plan = optimize_adaptation(instance)
    performance = performance_profile(
        project.requirements, project.satisfaction.row(candidate_id), instance, plan
    )
    return plan, performance


def plan_cache_entry(
    project: Project,
    candidate_id: str,
    plan: AdaptationPlan,
    performance: QuantitativePerformance,
) -> dict:
    return {
        "input_hash": input_hash(plan_inputs(project, candidate_id)),
        "budget": float(project.budgets.get(candidate_id, 0.0)),
        "chosen": dict(plan.chosen),
        "objective": plan.objective,
        "total_cost": plan.total_cost,
        "performance": performance.as_dict(),
    }


def _plan_from_entry(candidate_id: str, entry: dict) -> tuple[AdaptationPlan, QuantitativePerformance]:
    plan = AdaptationPlan(
        candidate_id=candidate_id,
        chosen=dict(entry["chosen"]),
        objective=entry["objective"],
        total_cost=entry["total_cost"],
    )
    return plan, QuantitativePerformance(**entry["performance"])


def plan_for(
    project: Project, candidate_id: str, budget: float | None = None
) -> tuple[AdaptationPlan, QuantitativePerformance]:
    """Cached plan when fresh and no override is in play, else recomputed."""
    if budget is None:
        entry = project.cache.plans.get(candidate_id)
        if entry is not None and entry.get("input_hash") == input_hash(
            plan_inputs(project, candidate_id)
        ):
            return _plan_from_entry(candidate_id, entry)
    return compute_plan(project, candidate_id, budget)


def scale_inputs(project: Project, matrix_id: str) -> dict:
    if matrix_id not in project.matrices:
        raise NotFoundError(f"no judgment matrix {matrix_id!r}")
    return matrix_to_doc(project.matrices[matrix_id])


def compute_scale(project: Project, matrix_id: str) -> CardinalScale:
    if matrix_id not in project.matrices:
        raise NotFoundError(f"no judgment matrix {matrix_id!r}")
    return derive_scale(project.matrices[matrix_id])


def scale_cache_entry(project: Project, matrix_id: str, scale: CardinalScale) -> dict:
    return {
        "input_hash": input_hash(scale_inputs(project, matrix_id)),
        "value": dict(scale.value),
        "raw": dict(scale.raw),
    }


def scale_for(project: Project, matrix_id: str) -> CardinalScale:
    entry = project.cache.scales.get(matrix_id)
    if entry is not None and entry.get("input_hash") == input_hash(
        scale_inputs(project, matrix_id)
    ):
        matrix = project.matrices[matrix_id]
        return CardinalScale(
            context=matrix.context, value=dict(entry["value"]), raw=dict(entry["raw"])
        )
    return compute_scale(project, matrix_id)


def compute_weights(project: Project) -> Weights:
    matrix = project.matrices.get(WEIGHTING_MATRIX_ID)
    if matrix is None:
        raise PreconditionError(
            f"no {WEIGHTING_MATRIX_ID!r} judgment matrix; judge the reference "
            f"profiles first"
        )
    return derive_weights(matrix)


def weights_cache_entry(project: Project, weights: Weights) -> dict:
    return {
        "input_hash": input_hash(scale_inputs(project, WEIGHTING_MATRIX_ID)),
        "values": dict(weights.values),
    }


def weights_for(project: Project) -> Weights:
    entry = project.cache.weights
    if (
        entry is not None
        and WEIGHTING_MATRIX_ID in project.matrices
        and entry.get("input_hash") == input_hash(scale_inputs(project, WEIGHTING_MATRIX_ID))
    ):
        return Weights(dict(entry["values"]))
    return compute_weights(project)


@dataclass
class RankingComputation:
    """A ranking plus every intermediate artifact it relied on."""

    result: RankedResult
    weights: Weights
    scales: dict[str, CardinalScale]
    plans: dict[str, tuple[AdaptationPlan, QuantitativePerformance]]


def compute_ranking(project: Project, budget: float | None = None) -> RankingComputation:
    """Score and rank the screening survivors.

    Uses fresh caches where available; recomputes stale pieces. A budget
    override applies to every candidate and forces plan recomputation.
    """
    if project.criteria_tree is None:
        raise PreconditionError("no criteria tree; define the selection criteria first")
    leaves = leaf_criteria(project.criteria_tree)
    survivors = screen_candidates(
        list(project.candidates), list(project.screening_criteria)
    ).survivors
    if not survivors:
        raise PreconditionError("no candidates survive screening; nothing to rank")

    weights = weights_for(project)
    leaf_ids = {leaf.id for leaf in leaves}
    if set(weights.values) != leaf_ids:
        raise PreconditionError(
            f"weights cover {sorted(weights.values)} but the criteria tree has "
            f"leaves {sorted(leaf_ids)}"
        )

    scales: dict[str, CardinalScale] = {}
    plans: dict[str, tuple[AdaptationPlan, QuantitativePerformance]] = {}
    values: dict[str, dict[str, float]] = {c.id: {} for c in survivors}
    provenance: dict[str, LeafKind] = {}
    for leaf in leaves:
        provenance[leaf.id] = leaf.kind
        if leaf.kind is LeafKind.MACBETH_JUDGED:
            if leaf.id not in project.matrices:
                raise PreconditionError(
                    f"criterion {leaf.id!r} is judged but has no judgment matrix"
                )
            scale = scale_for(project, leaf.id)
            scales[leaf.id] = scale
            for c in survivors:
                if c.id not in scale.value:
                    raise PreconditionError(
                        f"matrix {leaf.id!r} does not judge candidate {c.id!r}"
                    )
                # Anchorless matrices may place elements beyond the 0/1 span.
                values[c.id][leaf.id] = min(1.0, max(0.0, scale.value[c.id]))
        else:
            binding = project.value_functions.get(leaf.id)
            if binding is None:
                raise PreconditionError(
                    f"criterion {leaf.id!r} is quantitative but has no value function"
                )
            for c in survivors:
                if c.id not in plans:
                    plans[c.id] = plan_for(project, c.id, budget)
                raw = plans[c.id][1].as_dict()[binding.measure]
                values[c.id][leaf.id] = to_elementary_value(raw, binding.value_function)

    vectors = [
        PerformanceVector(
            candidate_id=c.id, values=values[c.id], provenance=dict(provenance)
        )
        for c in survivors
    ]
    return RankingComputation(
        result=rank(vectors, weights), weights=weights, scales=scales, plans=plans
    )


def ranking_inputs(project: Project) -> dict:
    """Every part of the document that can influence the ranking."""
    doc = project_to_doc(project)
    for key in ("cache", "stage", "thresholds", "extensions"):
        doc.pop(key, None)
    return doc


def ranking_cache_entry(project: Project, computation: RankingComputation) -> dict:
    return {
        "input_hash": input_hash(ranking_inputs(project)),
        "weights": dict(computation.weights.values),
        "entries": [
            {
                "candidate_id": e.candidate_id,
                "overall": e.overall,
                "values": dict(e.vector.values),
                "provenance": {
                    cid: kind.value for cid, kind in e.vector.provenance.items()
                },
            }
            for e in computation.result.entries
        ],
    }


def store_ranking(project: Project, computation: RankingComputation) -> None:
    """Persist the ranking and every intermediate artifact into the cache."""
    for matrix_id, scale in computation.scales.items():
        project.cache.scales[matrix_id] = scale_cache_entry(project, matrix_id, scale)
    for candidate_id, (plan, performance) in computation.plans.items():
        project.cache.plans[candidate_id] = plan_cache_entry(
            project, candidate_id, plan, performance
        )
    project.cache.weights = weights_cache_entry(project, computation.weights)
    project.cache.ranking = ranking_cache_entry(project, computation)


def _status(entry: dict | None, current_hash: str | None) -> str:
    if entry is None:
        return "absent"
    if current_hash is not None and entry.get("input_hash") == current_hash:
        return "fresh"
    return "stale"


def cache_status(project: Project) -> dict:
    """Per-artifact freshness: fresh, stale, or absent."""
    plans = {
        c.id: _status(
            project.cache.plans.get(c.id), input_hash(plan_inputs(project, c.id))
        )
        for c in project.candidates
    }
    scales = {
        mid: _status(
            project.cache.scales.get(mid), input_hash(scale_inputs(project, mid))
        )
        for mid in project.matrices
    }
    weighting_hash = (
        input_hash(scale_inputs(project, WEIGHTING_MATRIX_ID))
        if WEIGHTING_MATRIX_ID in project.matrices
        else None
    )
    return {
        "plans": plans,
        "scales": scales,
        "weights": _status(project.cache.weights, weighting_hash),
        "ranking": _status(project.cache.ranking, input_hash(ranking_inputs(project))),
    }
