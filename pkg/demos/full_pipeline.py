"""
The whole funnel on one project file
====================================

Requirements -> screening -> gap analysis -> budgeted adaptation ->
judged scales and weights -> ranking, with every derived artifact cached
inside the project document and the file byte-stable across save/load.
"""

import tempfile
from pathlib import Path

from packfit.demo import demo_project
from packfit.model import screen_candidates
from packfit.pipeline import (
    cache_status,
    compute_plan,
    compute_ranking,
    plan_cache_entry,
    store_ranking,
)
from packfit.project import load, save

project = demo_project()
print(f"stage: {project.stage.value}")
print(f"requirements: {', '.join(f'{r.id}={r.weight:.2f}' for r in project.requirements)}")

# Hard screening first.
result = screen_candidates(list(project.candidates), list(project.screening_criteria))
survivors = [c.id for c in result.survivors]
print(f"survivors: {', '.join(survivors)}")

# Optimal adaptation plan per survivor, under each one's budget.
for cid in survivors:
    plan, perf = compute_plan(project, cid)
    project.cache.plans[cid] = plan_cache_entry(project, cid, plan, perf)
    chosen = sum(1 for sid in plan.chosen.values() if sid)
    print(
        f"  {cid}: {chosen} strategies, cost {plan.total_cost:.0f}, "
        f"coverage {perf.functional_coverage:.3f}, risk {perf.adaptation_risk:.2f}"
    )

# Judged scales, weights and the final ranking in one call; store_ranking
# freshens every cache the computation touched.
computation = compute_ranking(project)
store_ranking(project, computation)
print("\nranking:")
for entry in computation.result.entries:
    print(f"  {entry.candidate_id:10s} {entry.overall:.4f}")

status = cache_status(project)
print(f"\ncaches: weights {status['weights']}, ranking {status['ranking']}")

# The canonical file form is stable: saving a reloaded copy is a no-op.
with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "selection.json"
    path.write_bytes(save(project))
    again = save(load(path.read_bytes()))
    print(f"file size {path.stat().st_size} bytes, round-trip identical: "
          f"{again == path.read_bytes()}")
