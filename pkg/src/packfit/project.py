"""On-disk project documents: canonical JSON, validation, typed access.

One self-contained UTF-8 JSON file holds everything a selection project
needs: requirements, candidates, assessments, adaptation strategy menus,
the criteria tree, judgment matrices, value-function bindings, and cached
derived results. Serialization is canonical (sorted keys, two-space
indent, trailing newline, round-tripping float repr), so saving a loaded
canonical file reproduces it byte for byte.

Validation reports every problem as a (code, path, message) violation
rather than stopping at the first; loading raises only after collecting
them all.
"""

import hashlib
import json
import math
import os
import tempfile
from dataclasses import dataclass, field
from enum import Enum
from pathlib import Path

from .adaptation import AdaptationStrategy
from .errors import NotFoundError, SchemaVersionError, ValidationError
from .macbeth import (
    CATEGORY_MAX,
    CATEGORY_MIN,
    AttractivenessJudgment,
    JudgmentMatrix,
)
from .model import (
    Candidate,
    CriterionNode,
    ExtensionImpact,
    ExtensionNote,
    LeafKind,
    MatchThresholds,
    Requirement,
    RequirementSet,
    SatisfactionAssessment,
    ScreeningAttribute,
    ScreeningCriterion,
    TailoringType,
    WEIGHT_SUM_TOL,
)
from .scoring import ValueFunction

SCHEMA_VERSION = 1

# Matrix id reserved for the criteria-weighting judgments.
WEIGHTING_MATRIX_ID = "weighting"

# Raw quantitative measures a value function may bind to.
MEASURES = (
    "functional_coverage",
    "adaptation_risk",
    "adaptation_cost",
    "adaptation_degree",
)


class Stage(Enum):
    REQUIREMENTS = "requirements"
    SEARCHING = "searching"
    SCREENING = "screening"
    GAP_ANALYSIS = "gap-analysis"
    ADAPTATION = "adaptation"
    ELEMENTARY_EVALUATION = "elementary-evaluation"
    GLOBAL_EVALUATION = "global-evaluation"
    DONE = "done"


@dataclass(frozen=True)
class Violation:
    code: str
    path: str
    message: str

    def __str__(self):
        return f"{self.code} at {self.path}: {self.message}"


@dataclass(frozen=True)
class QuantitativeBinding:
    """Ties a quantitative leaf criterion to one adaptation outcome measure."""

    measure: str
    value_function: ValueFunction

    def __post_init__(self):
        if self.measure not in MEASURES:
            raise ValidationError(f"unknown measure {self.measure!r}")


@dataclass
class ProjectCache:
    """Derived artifacts keyed by an input hash; stale entries are kept."""

    plans: dict[str, dict] = field(default_factory=dict)
    scales: dict[str, dict] = field(default_factory=dict)
    weights: dict | None = None
    ranking: dict | None = None


@dataclass
class Project:
    schema_version: int
    stage: Stage
    requirements: RequirementSet
    thresholds: dict[str, MatchThresholds]
    candidates: tuple[Candidate, ...]
    screening_criteria: tuple[ScreeningCriterion, ...]
    satisfaction: SatisfactionAssessment
    extensions: tuple[ExtensionNote, ...]
    budgets: dict[str, float]
    strategies: dict[str, dict[str, tuple[AdaptationStrategy, ...]]]
    criteria_tree: CriterionNode | None
    matrices: dict[str, JudgmentMatrix]
    value_functions: dict[str, QuantitativeBinding]
    cache: ProjectCache

    def candidate(self, candidate_id: str) -> Candidate:
        for c in self.candidates:
            if c.id == candidate_id:
                return c
        raise NotFoundError(f"no candidate {candidate_id!r}")


def new_project() -> Project:
    return Project(
        schema_version=SCHEMA_VERSION,
        stage=Stage.REQUIREMENTS,
        requirements=RequirementSet(()),
        thresholds={},
        candidates=(),
        screening_criteria=(),
        satisfaction=SatisfactionAssessment({}),
        extensions=(),
        budgets={},
        strategies={},
        criteria_tree=None,
        matrices={},
        value_functions={},
        cache=ProjectCache(),
    )


def canonical_dumps(obj) -> str:
    return json.dumps(
        obj, sort_keys=True, indent=2, ensure_ascii=False, allow_nan=False
    )


def input_hash(obj) -> str:
    """Stable fingerprint of a JSON-able input fragment (for cache staleness)."""
    return hashlib.sha256(canonical_dumps(obj).encode("utf-8")).hexdigest()


# ---------------------------------------------------------------------------
# typed project -> document


def matrix_to_doc(matrix: JudgmentMatrix) -> dict:
    position = {e: i for i, e in enumerate(matrix.elements)}
    judgments = [
        {
            "better": x,
            "worse": y,
            "lo": matrix.judgments[(x, y)].lo,
            "hi": matrix.judgments[(x, y)].hi,
        }
        for x, y in sorted(matrix.judgments, key=lambda p: (position[p[0]], position[p[1]]))
    ]
    return {
        "context": matrix.context,
        "elements": list(matrix.elements),
        "good": matrix.good,
        "bad": matrix.bad,
        "judgments": judgments,
    }


def _tree_to_doc(node: CriterionNode | None):
    if node is None:
        return None
    return {
        "id": node.id,
        "label": node.label,
        "kind": None if node.kind is None else node.kind.value,
        "children": [_tree_to_doc(child) for child in node.children],
    }


def project_to_doc(project: Project) -> dict:
    return {
        "schema_version": project.schema_version,
        "stage": project.stage.value,
        "requirements": [
            {
                "id": r.id,
                "label": r.label,
                "weight": float(r.weight),
                "description": r.description,
                "functional_area": r.functional_area,
            }
            for r in project.requirements
        ],
        "thresholds": {
            rid: {
                "target_level": float(t.target_level),
                "worst_acceptable": float(t.worst_acceptable),
            }
            for rid, t in project.thresholds.items()
        },
        "candidates": [
            {
                "id": c.id,
                "name": c.name,
                "vendor": c.vendor,
                "industry_types": sorted(c.industry_types),
                "organization_sizes": sorted(c.organization_sizes),
                "platforms": sorted(c.platforms),
                "tco_estimate": float(c.tco_estimate),
            }
            for c in project.candidates
        ],
        "screening_criteria": [
            {
                "attribute": sc.attribute.value,
                "required": sorted(sc.required),
                "ceiling": None if sc.ceiling is None else float(sc.ceiling),
            }
            for sc in project.screening_criteria
        ],
        "satisfaction": {
            cid: {rid: float(a) for rid, a in row.items()}
            for cid, row in project.satisfaction.levels.items()
        },
        "extensions": [
            {"candidate_id": e.candidate_id, "feature": e.feature, "impact": e.impact.value}
            for e in project.extensions
        ],
        "adaptation": {
            "budgets": {cid: float(b) for cid, b in project.budgets.items()},
            "strategies": {
                cid: {
                    rid: [
                        {
                            "id": s.id,
                            "tailoring_type": s.tailoring_type.value,
                            "anticipated_satisfaction": float(s.anticipated_satisfaction),
                            "risk": float(s.risk),
                            "cost": float(s.cost),
                        }
                        for s in menu
                    ]
                    for rid, menu in by_req.items()
                }
                for cid, by_req in project.strategies.items()
            },
        },
        "criteria_tree": _tree_to_doc(project.criteria_tree),
        "matrices": {mid: matrix_to_doc(m) for mid, m in project.matrices.items()},
        "value_functions": {
            leaf_id: {
                "measure": b.measure,
                "direction": b.value_function.direction,
                "good_level": float(b.value_function.good_level),
                "bad_level": float(b.value_function.bad_level),
            }
            for leaf_id, b in project.value_functions.items()
        },
        "cache": {
            "plans": project.cache.plans,
            "scales": project.cache.scales,
            "weights": project.cache.weights,
            "ranking": project.cache.ranking,
        },
    }


def save(project: Project) -> bytes:
    """Canonical serialization; save(load(save(p))) == save(p)."""
    doc = project_to_doc(project)
    violations = validate_document(doc)
    if violations:
        raise ValidationError(
            f"refusing to save an invalid project: {violations[0]}",
            violations=violations,
        )
    return (canonical_dumps(doc) + "\n").encode("utf-8")


# ---------------------------------------------------------------------------
# document validation

_TOP_LEVEL_KEYS = {
    "schema_version",
    "stage",
    "requirements",
    "thresholds",
    "candidates",
    "screening_criteria",
    "satisfaction",
    "extensions",
    "adaptation",
    "criteria_tree",
    "matrices",
    "value_functions",
    "cache",
}


def _is_number(v) -> bool:
    return isinstance(v, (int, float)) and not isinstance(v, bool) and math.isfinite(v)


class _Checker:
    def __init__(self):
        self.violations: list[Violation] = []

    def bad(self, code: str, path: str, message: str) -> None:
        self.violations.append(Violation(code, path, message))

    def obj(self, v, path: str) -> bool:
        if not isinstance(v, dict):
            self.bad("wrong-type", path, f"expected object, got {type(v).__name__}")
            return False
        return True

    def arr(self, v, path: str) -> bool:
        if not isinstance(v, list):
            self.bad("wrong-type", path, f"expected array, got {type(v).__name__}")
            return False
        return True

    def text(self, v, path: str, nonempty: bool = False) -> bool:
        if not isinstance(v, str):
            self.bad("wrong-type", path, f"expected string, got {type(v).__name__}")
            return False
        if nonempty and not v:
            self.bad("empty-string", path, "must be nonempty")
            return False
        return True

    def num(self, v, path: str) -> bool:
        if not _is_number(v):
            self.bad("wrong-type", path, f"expected finite number, got {v!r}")
            return False
        return True

    def integer(self, v, path: str) -> bool:
        if isinstance(v, bool) or not isinstance(v, int):
            self.bad("wrong-type", path, f"expected integer, got {type(v).__name__}")
            return False
        return True


def _check_requirements(ck: _Checker, items, path: str) -> dict[str, float]:
    """Returns id -> weight for the well-formed entries."""
    weights: dict[str, float] = {}
    if not ck.arr(items, path):
        return weights
    total = 0.0
    any_weight = False
    for i, item in enumerate(items):
        p = f"{path}[{i}]"
        if not ck.obj(item, p):
            continue
        rid = item.get("id")
        if ck.text(rid, f"{p}.id", nonempty=True):
            if rid in weights:
                ck.bad("duplicate-id", f"{p}.id", f"requirement {rid!r} appears twice")
            else:
                weights[rid] = 0.0
        for key in ("label", "description", "functional_area"):
            if key in item:
                ck.text(item[key], f"{p}.{key}")
        w = item.get("weight")
        if w is None:
            ck.bad("missing-field", f"{p}.weight", "requirement needs a weight")
        elif ck.num(w, f"{p}.weight"):
            if w < 0:
                ck.bad("weight-negative", f"{p}.weight", f"weight {w!r} is negative")
            else:
                total += float(w)
                any_weight = True
                if isinstance(rid, str) and rid in weights:
                    weights[rid] = float(w)
    if any_weight and abs(total - 1.0) > WEIGHT_SUM_TOL:
        ck.bad(
            "weights-not-normalized",
            path,
            f"requirement weights sum to {total!r}, expected 1",
        )
    return weights


def _check_thresholds(ck: _Checker, doc, path: str, requirement_ids) -> None:
    if not ck.obj(doc, path):
        return
    for rid, t in doc.items():
        p = f"{path}.{rid}"
        if rid not in requirement_ids:
            ck.bad("dangling-reference", p, f"no requirement {rid!r}")
        if not ck.obj(t, p):
            continue
        target = t.get("target_level")
        worst = t.get("worst_acceptable", 0.0)
        ok_target = ck.num(target, f"{p}.target_level")
        ok_worst = ck.num(worst, f"{p}.worst_acceptable")
        if ok_target and not (0.0 < target <= 1.0):
            ck.bad("threshold-band-invalid", f"{p}.target_level", "must be in (0, 1]")
            ok_target = False
        if ok_worst and not (0.0 <= worst <= 1.0):
            ck.bad("threshold-band-invalid", f"{p}.worst_acceptable", "must be in [0, 1]")
            ok_worst = False
        if ok_target and ok_worst and worst > target:
            ck.bad(
                "threshold-band-invalid", p, "worst_acceptable exceeds target_level"
            )


def _check_candidates(ck: _Checker, items, path: str) -> set[str]:
    ids: set[str] = set()
    if not ck.arr(items, path):
        return ids
    for i, item in enumerate(items):
        p = f"{path}[{i}]"
        if not ck.obj(item, p):
            continue
        cid = item.get("id")
        if ck.text(cid, f"{p}.id", nonempty=True):
            if cid in ids:
                ck.bad("duplicate-id", f"{p}.id", f"candidate {cid!r} appears twice")
            ids.add(cid)
        for key in ("name", "vendor"):
            if key in item:
                ck.text(item[key], f"{p}.{key}")
        for key in ("industry_types", "organization_sizes", "platforms"):
            if key in item and ck.arr(item[key], f"{p}.{key}"):
                for k, v in enumerate(item[key]):
                    ck.text(v, f"{p}.{key}[{k}]")
        tco = item.get("tco_estimate", 0.0)
        if ck.num(tco, f"{p}.tco_estimate") and tco < 0:
            ck.bad("tco-negative", f"{p}.tco_estimate", f"tco {tco!r} is negative")
    return ids


def _check_screening(ck: _Checker, items, path: str) -> None:
    if not ck.arr(items, path):
        return
    attributes = {a.value for a in ScreeningAttribute}
    for i, item in enumerate(items):
        p = f"{path}[{i}]"
        if not ck.obj(item, p):
            continue
        attr = item.get("attribute")
        if not ck.text(attr, f"{p}.attribute", nonempty=True):
            continue
        if attr not in attributes:
            ck.bad("unknown-attribute", f"{p}.attribute", f"unknown attribute {attr!r}")
            continue
        required = item.get("required", [])
        ceiling = item.get("ceiling")
        if ck.arr(required, f"{p}.required"):
            for k, v in enumerate(required):
                ck.text(v, f"{p}.required[{k}]")
        if attr == ScreeningAttribute.TCO_CEILING.value:
            if ceiling is None:
                ck.bad("criterion-incomplete", p, "tco_ceiling needs a ceiling")
            elif ck.num(ceiling, f"{p}.ceiling") and ceiling < 0:
                ck.bad("criterion-incomplete", f"{p}.ceiling", "ceiling must be >= 0")
        else:
            if ceiling is not None:
                ck.bad("criterion-incomplete", f"{p}.ceiling", "only tco_ceiling takes a ceiling")
            if isinstance(required, list) and not required:
                ck.bad("criterion-incomplete", f"{p}.required", "needs required values")


def _check_satisfaction(
    ck: _Checker, doc, path: str, candidate_ids, requirement_ids
) -> dict[str, dict[str, float]]:
    rows: dict[str, dict[str, float]] = {}
    if not ck.obj(doc, path):
        return rows
    for cid, row in doc.items():
        p = f"{path}.{cid}"
        if cid not in candidate_ids:
            ck.bad("dangling-reference", p, f"no candidate {cid!r}")
        if not ck.obj(row, p):
            continue
        rows[cid] = {}
        for rid, a in row.items():
            q = f"{p}.{rid}"
            if rid not in requirement_ids:
                ck.bad("dangling-reference", q, f"no requirement {rid!r}")
            if ck.num(a, q):
                if not (0.0 <= a <= 1.0):
                    ck.bad(
                        "satisfaction-out-of-range", q, f"{a!r} is outside [0, 1]"
                    )
                else:
                    rows[cid][rid] = float(a)
        # A started row must cover every requirement, or downstream gap and
        # coverage math would silently skip entries.
        missing = sorted(set(requirement_ids) - set(row))
        if missing:
            ck.bad("satisfaction-missing", p, f"row lacks requirements {missing}")
    return rows


def _check_extensions(ck: _Checker, items, path: str, candidate_ids) -> None:
    if not ck.arr(items, path):
        return
    impacts = {i.value for i in ExtensionImpact}
    for i, item in enumerate(items):
        p = f"{path}[{i}]"
        if not ck.obj(item, p):
            continue
        cid = item.get("candidate_id")
        if ck.text(cid, f"{p}.candidate_id", nonempty=True) and cid not in candidate_ids:
            ck.bad("dangling-reference", f"{p}.candidate_id", f"no candidate {cid!r}")
        ck.text(item.get("feature", ""), f"{p}.feature")
        impact = item.get("impact", ExtensionImpact.NEUTRAL.value)
        if isinstance(impact, str) and impact not in impacts:
            ck.bad("unknown-impact", f"{p}.impact", f"unknown impact {impact!r}")


def _check_adaptation(
    ck: _Checker, doc, path: str, candidate_ids, requirement_ids, satisfaction
) -> None:
    if not ck.obj(doc, path):
        return
    budgets = doc.get("budgets", {})
    if ck.obj(budgets, f"{path}.budgets"):
        for cid, b in budgets.items():
            p = f"{path}.budgets.{cid}"
            if cid not in candidate_ids:
                ck.bad("dangling-reference", p, f"no candidate {cid!r}")
            if ck.num(b, p) and b < 0:
                ck.bad("budget-negative", p, f"budget {b!r} is negative")
    strategies = doc.get("strategies", {})
    if not ck.obj(strategies, f"{path}.strategies"):
        return
    types = {t.value for t in TailoringType}
    for cid, by_req in strategies.items():
        p = f"{path}.strategies.{cid}"
        if cid not in candidate_ids:
            ck.bad("dangling-reference", p, f"no candidate {cid!r}")
        if not ck.obj(by_req, p):
            continue
        for rid, menu in by_req.items():
            q = f"{p}.{rid}"
            if rid not in requirement_ids:
                ck.bad("dangling-reference", q, f"no requirement {rid!r}")
            if not ck.arr(menu, q):
                continue
            a = satisfaction.get(cid, {}).get(rid)
            if a == 1.0:
                ck.bad(
                    "strategy-for-met-requirement",
                    q,
                    "requirement is already fully satisfied",
                )
            seen = set()
            for k, s in enumerate(menu):
                sp = f"{q}[{k}]"
                if not ck.obj(s, sp):
                    continue
                sid = s.get("id")
                if ck.text(sid, f"{sp}.id", nonempty=True):
                    if sid in seen:
                        ck.bad("duplicate-id", f"{sp}.id", f"strategy {sid!r} appears twice")
                    seen.add(sid)
                tt = s.get("tailoring_type")
                if ck.text(tt, f"{sp}.tailoring_type", nonempty=True) and tt not in types:
                    ck.bad(
                        "unknown-tailoring-type", f"{sp}.tailoring_type", f"unknown {tt!r}"
                    )
                b = s.get("anticipated_satisfaction")
                if ck.num(b, f"{sp}.anticipated_satisfaction"):
                    if not (0.0 <= b <= 1.0):
                        ck.bad(
                            "strategy-out-of-range",
                            f"{sp}.anticipated_satisfaction",
                            f"{b!r} is outside [0, 1]",
                        )
                    elif a is not None and a != 1.0 and b <= a:
                        ck.bad(
                            "strategy-not-improving",
                            f"{sp}.anticipated_satisfaction",
                            f"{b!r} does not exceed the initial level {a!r}",
                        )
                r = s.get("risk")
                if ck.num(r, f"{sp}.risk") and not (0.0 <= r <= 1.0):
                    ck.bad("strategy-out-of-range", f"{sp}.risk", f"{r!r} is outside [0, 1]")
                c = s.get("cost")
                if ck.num(c, f"{sp}.cost") and c < 0:
                    ck.bad("cost-negative", f"{sp}.cost", f"cost {c!r} is negative")


def _check_tree(ck: _Checker, node, path: str, leaf_ids: set[str]) -> None:
    if not ck.obj(node, path):
        return
    ck.text(node.get("id"), f"{path}.id", nonempty=True)
    if "label" in node:
        ck.text(node["label"], f"{path}.label")
    kind = node.get("kind")
    children = node.get("children", [])
    if not ck.arr(children, f"{path}.children"):
        children = []
    kinds = {k.value for k in LeafKind}
    if children:
        if kind is not None:
            ck.bad("criterion-kind-on-internal", f"{path}.kind", "only leaves carry a kind")
        for i, child in enumerate(children):
            _check_tree(ck, child, f"{path}.children[{i}]", leaf_ids)
    else:
        if kind is None:
            ck.bad("criterion-kind-missing", f"{path}.kind", "leaf needs a kind")
        elif not isinstance(kind, str) or kind not in kinds:
            ck.bad("unknown-kind", f"{path}.kind", f"unknown kind {kind!r}")
        nid = node.get("id")
        if isinstance(nid, str):
            if nid in leaf_ids:
                ck.bad("duplicate-id", f"{path}.id", f"leaf {nid!r} appears twice")
            leaf_ids.add(nid)


def _check_matrix(ck: _Checker, doc, path: str) -> None:
    if not ck.obj(doc, path):
        return
    if "context" in doc:
        ck.text(doc["context"], f"{path}.context")
    elements = doc.get("elements")
    position: dict[str, int] = {}
    if ck.arr(elements, f"{path}.elements"):
        for i, e in enumerate(elements):
            if ck.text(e, f"{path}.elements[{i}]", nonempty=True):
                if e in position:
                    ck.bad("duplicate-id", f"{path}.elements[{i}]", f"element {e!r} repeats")
                position[e] = i
        if len(elements) < 2:
            ck.bad("matrix-too-small", f"{path}.elements", "need at least two elements")
    good = doc.get("good")
    bad_anchor = doc.get("bad")
    for name, anchor in (("good", good), ("bad", bad_anchor)):
        if anchor is not None and ck.text(anchor, f"{path}.{name}") and anchor not in position:
            ck.bad("dangling-reference", f"{path}.{name}", f"anchor {anchor!r} is not an element")
    if good is not None and bad_anchor is not None and position:
        last = max(position.values())
        if position.get(good) != 0 or position.get(bad_anchor) != last:
            ck.bad("anchor-misplaced", path, "anchors must be the first and last elements")
    judgments = doc.get("judgments", [])
    if not ck.arr(judgments, f"{path}.judgments"):
        return
    seen_pairs = set()
    for i, j in enumerate(judgments):
        p = f"{path}.judgments[{i}]"
        if not ck.obj(j, p):
            continue
        x, y = j.get("better"), j.get("worse")
        ok = ck.text(x, f"{p}.better", nonempty=True) and ck.text(y, f"{p}.worse", nonempty=True)
        if ok:
            if x not in position or y not in position:
                ck.bad("dangling-reference", p, f"pair ({x!r}, {y!r}) uses unknown elements")
            elif position[x] >= position[y]:
                ck.bad("judgment-pair-unordered", p, f"{x!r} does not precede {y!r}")
            elif (x, y) in seen_pairs:
                ck.bad("duplicate-judgment", p, f"pair ({x!r}, {y!r}) judged twice")
            else:
                seen_pairs.add((x, y))
        lo, hi = j.get("lo"), j.get("hi")
        if ck.integer(lo, f"{p}.lo") and ck.integer(hi, f"{p}.hi"):
            if not (CATEGORY_MIN <= lo <= hi <= CATEGORY_MAX):
                ck.bad("judgment-interval-invalid", p, f"[{lo}, {hi}] is not a valid interval")
            elif lo == 0 and hi != 0:
                ck.bad("judgment-interval-invalid", p, "category 0 cannot join a union")


def _check_value_functions(ck: _Checker, doc, path: str, leaf_kinds: dict[str, str]) -> None:
    if not ck.obj(doc, path):
        return
    for leaf_id, vf in doc.items():
        p = f"{path}.{leaf_id}"
        if leaf_id not in leaf_kinds:
            ck.bad("dangling-reference", p, f"no leaf criterion {leaf_id!r}")
        elif leaf_kinds[leaf_id] != LeafKind.QUANTITATIVE.value:
            ck.bad("binding-mismatch", p, f"leaf {leaf_id!r} is not quantitative")
        if not ck.obj(vf, p):
            continue
        measure = vf.get("measure")
        if ck.text(measure, f"{p}.measure", nonempty=True) and measure not in MEASURES:
            ck.bad("unknown-measure", f"{p}.measure", f"unknown measure {measure!r}")
        direction = vf.get("direction")
        good, bad_level = vf.get("good_level"), vf.get("bad_level")
        ok = ck.num(good, f"{p}.good_level") and ck.num(bad_level, f"{p}.bad_level")
        if not ck.text(direction, f"{p}.direction", nonempty=True):
            continue
        if direction not in ("increasing", "decreasing"):
            ck.bad("value-function-invalid", f"{p}.direction", f"unknown direction {direction!r}")
        elif ok:
            if direction == "increasing" and not (good > bad_level):
                ck.bad("value-function-invalid", p, "increasing needs good_level > bad_level")
            if direction == "decreasing" and not (good < bad_level):
                ck.bad("value-function-invalid", p, "decreasing needs good_level < bad_level")


def _check_cache(ck: _Checker, doc, path: str, candidate_ids, matrix_ids) -> None:
    if not ck.obj(doc, path):
        return
    plans = doc.get("plans", {})
    if ck.obj(plans, f"{path}.plans"):
        for cid, entry in plans.items():
            p = f"{path}.plans.{cid}"
            if cid not in candidate_ids:
                ck.bad("dangling-reference", p, f"no candidate {cid!r}")
            if ck.obj(entry, p):
                ck.text(entry.get("input_hash"), f"{p}.input_hash", nonempty=True)
    scales = doc.get("scales", {})
    if ck.obj(scales, f"{path}.scales"):
        for mid, entry in scales.items():
            p = f"{path}.scales.{mid}"
            if mid not in matrix_ids:
                ck.bad("dangling-reference", p, f"no matrix {mid!r}")
            if ck.obj(entry, p):
                ck.text(entry.get("input_hash"), f"{p}.input_hash", nonempty=True)
    for key in ("weights", "ranking"):
        entry = doc.get(key)
        if entry is not None and ck.obj(entry, f"{path}.{key}"):
            ck.text(entry.get("input_hash"), f"{path}.{key}.input_hash", nonempty=True)


def validate_document(doc) -> list[Violation]:
    """Every invariant violation in the document, with code and path."""
    ck = _Checker()
    if not ck.obj(doc, "$"):
        return ck.violations
    for key in doc:
        if key not in _TOP_LEVEL_KEYS:
            ck.bad("unknown-field", f"$.{key}", "unknown top-level field")
    version = doc.get("schema_version")
    if version is None:
        ck.bad("missing-field", "$.schema_version", "document needs a schema_version")
    else:
        ck.integer(version, "$.schema_version")
    stage = doc.get("stage", Stage.REQUIREMENTS.value)
    stages = {s.value for s in Stage}
    if ck.text(stage, "$.stage", nonempty=True) and stage not in stages:
        ck.bad("unknown-stage", "$.stage", f"unknown stage {stage!r}")

    weights = _check_requirements(ck, doc.get("requirements", []), "$.requirements")
    requirement_ids = set(weights)
    _check_thresholds(ck, doc.get("thresholds", {}), "$.thresholds", requirement_ids)
    candidate_ids = _check_candidates(ck, doc.get("candidates", []), "$.candidates")
    _check_screening(ck, doc.get("screening_criteria", []), "$.screening_criteria")
    satisfaction = _check_satisfaction(
        ck, doc.get("satisfaction", {}), "$.satisfaction", candidate_ids, requirement_ids
    )
    _check_extensions(ck, doc.get("extensions", []), "$.extensions", candidate_ids)
    _check_adaptation(
        ck,
        doc.get("adaptation", {"budgets": {}, "strategies": {}}),
        "$.adaptation",
        candidate_ids,
        requirement_ids,
        satisfaction,
    )
    leaf_ids: set[str] = set()
    tree = doc.get("criteria_tree")
    if tree is not None:
        _check_tree(ck, tree, "$.criteria_tree", leaf_ids)
    matrices = doc.get("matrices", {})
    if ck.obj(matrices, "$.matrices"):
        for mid, m in matrices.items():
            _check_matrix(ck, m, f"$.matrices.{mid}")
    leaf_kinds = _collect_leaf_kinds(tree) if tree is not None else {}
    _check_value_functions(ck, doc.get("value_functions", {}), "$.value_functions", leaf_kinds)
    matrix_ids = set(matrices) if isinstance(matrices, dict) else set()
    _check_cache(
        ck,
        doc.get("cache", {"plans": {}, "scales": {}, "weights": None, "ranking": None}),
        "$.cache",
        candidate_ids,
        matrix_ids,
    )
    return ck.violations


def _collect_leaf_kinds(tree) -> dict[str, str]:
    kinds: dict[str, str] = {}
    stack = [tree]
    while stack:
        node = stack.pop()
        if not isinstance(node, dict):
            continue
        children = node.get("children") or []
        if children and isinstance(children, list):
            stack.extend(children)
        else:
            nid, kind = node.get("id"), node.get("kind")
            if isinstance(nid, str) and isinstance(kind, str):
                kinds[nid] = kind
    return kinds


# ---------------------------------------------------------------------------
# document -> typed project


def _doc_to_matrix(mid: str, doc: dict) -> JudgmentMatrix:
    judgments = {
        (j["better"], j["worse"]): AttractivenessJudgment(int(j["lo"]), int(j["hi"]))
        for j in doc.get("judgments", [])
    }
    return JudgmentMatrix(
        context=doc.get("context", mid),
        elements=tuple(doc["elements"]),
        judgments=judgments,
        good=doc.get("good"),
        bad=doc.get("bad"),
    )


def _doc_to_tree(doc) -> CriterionNode | None:
    if doc is None:
        return None
    kind = doc.get("kind")
    return CriterionNode(
        id=doc["id"],
        label=doc.get("label", doc["id"]),
        children=tuple(_doc_to_tree(c) for c in doc.get("children", [])),
        kind=None if kind is None else LeafKind(kind),
    )


def doc_to_project(doc: dict) -> Project:
    """Builds the typed project; the document must already validate."""
    requirements = RequirementSet(
        tuple(
            Requirement(
                id=r["id"],
                label=r.get("label", r["id"]),
                weight=float(r["weight"]),
                description=r.get("description", ""),
                functional_area=r.get("functional_area", ""),
            )
            for r in doc.get("requirements", [])
        )
    )
    thresholds = {
        rid: MatchThresholds(
            target_level=float(t["target_level"]),
            worst_acceptable=float(t.get("worst_acceptable", 0.0)),
        )
        for rid, t in doc.get("thresholds", {}).items()
    }
    candidates = tuple(
        Candidate(
            id=c["id"],
            name=c.get("name", c["id"]),
            vendor=c.get("vendor", ""),
            industry_types=frozenset(c.get("industry_types", [])),
            organization_sizes=frozenset(c.get("organization_sizes", [])),
            platforms=frozenset(c.get("platforms", [])),
            tco_estimate=float(c.get("tco_estimate", 0.0)),
        )
        for c in doc.get("candidates", [])
    )
    screening = tuple(
        ScreeningCriterion(
            attribute=ScreeningAttribute(sc["attribute"]),
            required=frozenset(sc.get("required", [])),
            ceiling=None if sc.get("ceiling") is None else float(sc["ceiling"]),
        )
        for sc in doc.get("screening_criteria", [])
    )
    satisfaction = SatisfactionAssessment(
        {
            cid: {rid: float(a) for rid, a in row.items()}
            for cid, row in doc.get("satisfaction", {}).items()
        }
    )
    extensions = tuple(
        ExtensionNote(
            candidate_id=e["candidate_id"],
            feature=e.get("feature", ""),
            impact=ExtensionImpact(e.get("impact", ExtensionImpact.NEUTRAL.value)),
        )
        for e in doc.get("extensions", [])
    )
    adaptation = doc.get("adaptation", {})
    budgets = {cid: float(b) for cid, b in adaptation.get("budgets", {}).items()}
    strategies = {
        cid: {
            rid: tuple(
                AdaptationStrategy(
                    id=s["id"],
                    tailoring_type=TailoringType(s["tailoring_type"]),
                    anticipated_satisfaction=float(s["anticipated_satisfaction"]),
                    risk=float(s["risk"]),
                    cost=float(s["cost"]),
                )
                for s in menu
            )
            for rid, menu in by_req.items()
        }
        for cid, by_req in adaptation.get("strategies", {}).items()
    }
    matrices = {
        mid: _doc_to_matrix(mid, m) for mid, m in doc.get("matrices", {}).items()
    }
    value_functions = {
        leaf_id: QuantitativeBinding(
            measure=vf["measure"],
            value_function=ValueFunction(
                direction=vf["direction"],
                good_level=float(vf["good_level"]),
                bad_level=float(vf["bad_level"]),
            ),
        )
        for leaf_id, vf in doc.get("value_functions", {}).items()
    }
    cache_doc = doc.get("cache", {})
    cache = ProjectCache(
        plans=dict(cache_doc.get("plans", {})),
        scales=dict(cache_doc.get("scales", {})),
        weights=cache_doc.get("weights"),
        ranking=cache_doc.get("ranking"),
    )
    return Project(
        schema_version=int(doc["schema_version"]),
        stage=Stage(doc.get("stage", Stage.REQUIREMENTS.value)),
        requirements=requirements,
        thresholds=thresholds,
        candidates=candidates,
        screening_criteria=screening,
        satisfaction=satisfaction,
        extensions=extensions,
        budgets=budgets,
        strategies=strategies,
        criteria_tree=_doc_to_tree(doc.get("criteria_tree")),
        matrices=matrices,
        value_functions=value_functions,
        cache=cache,
    )


def load(data: bytes) -> Project:
    """Parse and validate a project document; collects all violations."""
    try:
        doc = json.loads(data.decode("utf-8"))
    except UnicodeDecodeError as exc:
        raise ValidationError(f"project file is not UTF-8: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValidationError(f"project file is not valid JSON: {exc}") from exc
    if isinstance(doc, dict):
        version = doc.get("schema_version")
        if isinstance(version, int) and not isinstance(version, bool):
            if version != SCHEMA_VERSION:
                raise SchemaVersionError(
                    f"unsupported schema_version {version}; this build reads {SCHEMA_VERSION}"
                )
    violations = validate_document(doc)
    if violations:
        raise ValidationError(
            f"invalid project: {violations[0]}", violations=violations
        )
    return doc_to_project(doc)


def read_project_file(path: str | Path) -> Project:
    return load(Path(path).read_bytes())


def write_project_file(path: str | Path, project: Project) -> None:
    """Atomic write: temp file in the same directory, then rename over."""
    path = Path(path)
    data = save(project)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
