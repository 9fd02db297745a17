#!/usr/bin/env python3
"""Record HTTP fixtures for the frontend contract tests.

Runs the real service in-process and captures request/response pairs that
the browser tests replay through a fake fetch. Every fixture is asserted
against the behavior the UI depends on at record time (anchored scales,
conflict listings, what-if purity), so a stale or hand-edited fixture
cannot quietly pass the frontend suite.

Usage: python3 frontend/tests/record_fixtures.py
"""

import json
import sys
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from packfit.demo import demo_project, quantitative_demo_project
from packfit.pipeline import compute_plan
from packfit.project import doc_to_project, project_to_doc
from packfit.service import create_app

FIXTURE_DIR = Path(__file__).resolve().parent / "fixtures"

# Ten pairwise judgments over a security criterion, transcribed from a
# published worked example; the derived scale rounds to
# 1.00 / 0.73 / 0.45 / 0.18 / 0.00.
SECURITY_JUDGMENTS = [
    {"better": "sup", "worse": "sap", "lo": 3, "hi": 3},
    {"better": "sup", "worse": "oracle", "lo": 4, "hi": 4},
    {"better": "sup", "worse": "microsoft", "lo": 5, "hi": 5},
    {"better": "sup", "worse": "inf", "lo": 5, "hi": 5},
    {"better": "sap", "worse": "oracle", "lo": 3, "hi": 3},
    {"better": "sap", "worse": "microsoft", "lo": 4, "hi": 4},
    {"better": "sap", "worse": "inf", "lo": 4, "hi": 4},
    {"better": "oracle", "worse": "microsoft", "lo": 3, "hi": 4},
    {"better": "oracle", "worse": "inf", "lo": 3, "hi": 3},
    {"better": "microsoft", "worse": "inf", "lo": 2, "hi": 2},
]
SECURITY_SCALE = {"sup": 1.0, "sap": 8 / 11, "oracle": 5 / 11, "microsoft": 2 / 11, "inf": 0.0}

# sup ~ sap and sap ~ oracle, yet sup beats oracle moderately.
CONTRADICTION = [
    {"better": "sup", "worse": "sap", "lo": 0, "hi": 0},
    {"better": "sap", "worse": "oracle", "lo": 0, "hi": 0},
    {"better": "sup", "worse": "oracle", "lo": 3, "hi": 3},
]


def grid_doc() -> dict:
    doc = project_to_doc(demo_project())
    doc["matrices"]["security"] = {
        "context": "security",
        "elements": ["sup", "sap", "oracle", "microsoft", "inf"],
        "good": "sup",
        "bad": "inf",
        "judgments": [],
    }
    return doc


def record(client: TestClient, name: str, method: str, path: str, body=None, expect=200):
    kwargs = {} if body is None else {"json": body}
    response = client.request(method, path, **kwargs)
    assert response.status_code == expect, (
        f"{name}: expected {expect}, got {response.status_code}: {response.text}"
    )
    fixture = {
        "request": {"method": method, "path": path},
        "response": {"status": response.status_code, "body": response.json()},
    }
    if body is not None:
        fixture["request"]["body"] = body
    out = FIXTURE_DIR / f"{name}.json"
    out.write_text(json.dumps(fixture, indent=2, sort_keys=True) + "\n", encoding="utf-8")
    print(f"recorded {out.relative_to(FIXTURE_DIR.parent)}")
    return fixture["response"]["body"]


def record_judgment_flows(client: TestClient) -> None:
    record(client, "create_grid", "POST", "/projects",
           {"id": "grid", "project": grid_doc()}, expect=201)
    got = record(client, "get_grid", "GET", "/projects/grid")
    assert got["version"] == 1
    assert got["project"]["matrices"]["security"]["judgments"] == []

    consistent = record(
        client, "security_consistent", "PUT",
        "/projects/grid/matrices/security/judgments",
        {"version": 1, "judgments": SECURITY_JUDGMENTS},
    )
    assert consistent["consistency"] == {"consistent": True, "conflicts": []}
    scale = consistent["scale"]["value"]
    assert scale["sup"] == 1.0 and scale["inf"] == 0.0
    for element, expected in SECURITY_SCALE.items():
        assert abs(scale[element] - expected) < 0.005, (element, scale[element])

    client.post("/projects", json={"id": "grid2", "project": grid_doc()})
    record(client, "get_grid2", "GET", "/projects/grid2")
    broken = record(
        client, "security_contradiction", "PUT",
        "/projects/grid2/matrices/security/judgments",
        {"version": 1, "judgments": CONTRADICTION},
    )
    assert broken["consistency"]["consistent"] is False
    assert broken["scale"] is None
    conflicts = broken["consistency"]["conflicts"]
    submitted = {(j["better"], j["worse"]) for j in CONTRADICTION}
    assert conflicts and all(tuple(pair) in submitted for pair in conflicts)


def record_ranking_flows(client: TestClient) -> None:
    quant_doc = project_to_doc(quantitative_demo_project())
    client.post("/projects", json={"id": "quant", "project": quant_doc})
    before = client.get("/projects/quant")
    got = record(client, "get_quant", "GET", "/projects/quant")
    assert got["version"] == 1

    default = record(client, "ranking_default", "GET", "/projects/quant/ranking")
    budget0 = record(client, "ranking_budget0", "GET", "/projects/quant/ranking?budget=0")
    overalls = [e["overall"] for e in default["ranking"]["entries"]]
    assert overalls == sorted(overalls, reverse=True)
    assert abs(sum(default["ranking"]["weights"].values()) - 1.0) < 1e-9
    assert budget0["budget_override"] == 0.0

    # Budget 0 must mean "no adaptation at all": the exact optimizer under a
    # zero budget picks nothing, so coverage is the raw weighted satisfaction.
    project = doc_to_project(got["project"])
    weights = {r.id: r.weight for r in project.requirements}
    for entry in budget0["ranking"]["entries"]:
        cid = entry["candidate_id"]
        plan, performance = compute_plan(project, cid, 0.0)
        assert plan.total_cost == 0.0
        assert all(sid is None for sid in plan.chosen.values())
        row = project.satisfaction.levels[cid]
        unadapted = sum(weights[rid] * a for rid, a in row.items())
        assert abs(performance.functional_coverage - unadapted) < 1e-12

    # What-if requests must not have touched the stored document.
    after = client.get("/projects/quant")
    assert before.text == after.text
    assert after.json()["version"] == 1

    applied_doc = json.loads(json.dumps(quant_doc))
    applied_doc["adaptation"]["budgets"] = {
        c["id"]: 0 for c in applied_doc["candidates"]
    }
    applied = record(client, "apply_budget", "PUT", "/projects/quant",
                     {"version": 1, "project": applied_doc})
    assert applied["version"] == 2
    record(client, "conflict_409", "PUT", "/projects/quant",
           {"version": 1, "project": applied_doc}, expect=409)


def record_errors(client: TestClient) -> None:
    body = record(client, "not_found", "GET", "/projects/ghost", expect=404)
    assert set(body) == {"code", "message", "path"}

    bad = grid_doc()
    bad["requirements"][0]["weight"] = -1.0
    invalid = record(client, "invalid_project", "POST", "/projects",
                     {"id": "bad", "project": bad}, expect=400)
    assert invalid["code"] == "validation-error"
    assert invalid["path"] == "$.requirements[0].weight"


def main() -> int:
    FIXTURE_DIR.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as data_dir:
        client = TestClient(create_app(data_dir))
        record_judgment_flows(client)
        record_ranking_flows(client)
        record_errors(client)
    print("all fixtures recorded")
    return 0


if __name__ == "__main__":
    sys.exit(main())
