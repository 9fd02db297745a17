"""HTTP/JSON facade over the selection pipeline.

One JSON file per project under the data directory, wrapped as
{"version": n, "project": <canonical document>}. The version counter
implements optimistic concurrency: every mutation must quote the current
version and bumps it by one. Mutations on one project are serialized by a
per-project lock; what-if queries (budget overrides) never touch the file.

Configuration comes from the environment: PACKFIT_DATA_DIR for storage,
PACKFIT_HOST and PACKFIT_PORT for the listener.
"""

import json
import os
import tempfile
import threading
import uuid
from pathlib import Path

from fastapi import Body, FastAPI, Request
from fastapi.responses import JSONResponse

from .errors import (
    ConsistencyError,
    DegenerateWeightsError,
    NotFoundError,
    PackfitError,
    PreconditionError,
    SchemaVersionError,
    StateError,
    ValidationError,
    VersionConflictError,
)
from .macbeth import AttractivenessJudgment, JudgmentMatrix, check_consistency
from .pipeline import (
    cache_status,
    compute_plan,
    compute_scale,
    plan_cache_entry,
    scale_cache_entry,
    compute_ranking,
)
from .project import (
    Project,
    doc_to_project,
    new_project,
    project_to_doc,
    validate_document,
)

_ERROR_STATUS = {
    "validation-error": 400,
    "schema-version": 400,
    "not-found": 404,
    "version-conflict": 409,
    "state-error": 409,
    "consistency-error": 422,
    "precondition-error": 422,
    "degenerate-weights": 422,
    "error": 400,
}


def _error_code(exc: PackfitError) -> str:
    return {
        ValidationError: "validation-error",
        SchemaVersionError: "schema-version",
        NotFoundError: "not-found",
        VersionConflictError: "version-conflict",
        StateError: "state-error",
        ConsistencyError: "consistency-error",
        PreconditionError: "precondition-error",
        DegenerateWeightsError: "degenerate-weights",
    }.get(type(exc), "error")


class ProjectStore:
    """Versioned project files with per-project write serialization."""

    def __init__(self, data_dir: Path):
        self.data_dir = Path(data_dir)
        self.data_dir.mkdir(parents=True, exist_ok=True)
        self._locks: dict[str, threading.Lock] = {}
        self._registry = threading.Lock()

    def lock(self, project_id: str) -> threading.Lock:
        with self._registry:
            return self._locks.setdefault(project_id, threading.Lock())

    def _path(self, project_id: str) -> Path:
        return self.data_dir / f"{project_id}.json"

    def exists(self, project_id: str) -> bool:
        return self._path(project_id).exists()

    def read(self, project_id: str) -> tuple[int, dict]:
        path = self._path(project_id)
        if not path.exists():
            raise NotFoundError(f"no project {project_id!r}")
        wrapper = json.loads(path.read_text("utf-8"))
        return wrapper["version"], wrapper["project"]

    def write(self, project_id: str, version: int, doc: dict) -> None:
        path = self._path(project_id)
        data = json.dumps(
            {"version": version, "project": doc},
            sort_keys=True,
            indent=2,
            ensure_ascii=False,
        )
        fd, tmp = tempfile.mkstemp(dir=self.data_dir, prefix=f".{project_id}.")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(data + "\n")
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise


def _validated(doc) -> Project:
    if not isinstance(doc, dict):
        raise ValidationError("project must be a JSON object")
    version = doc.get("schema_version")
    if isinstance(version, int) and not isinstance(version, bool) and version != 1:
        raise SchemaVersionError(f"unsupported schema_version {version}")
    violations = validate_document(doc)
    if violations:
        raise ValidationError(
            f"invalid project: {violations[0]}", violations=violations
        )
    return doc_to_project(doc)


def _require_version(payload: dict, current: int) -> None:
    supplied = payload.get("version")
    if not isinstance(supplied, int) or isinstance(supplied, bool):
        raise ValidationError("request needs the current integer version")
    if supplied != current:
        raise VersionConflictError(
            f"version {supplied} is stale; current version is {current}"
        )


def _scale_payload(scale) -> dict:
    return {"context": scale.context, "value": scale.value, "raw": scale.raw}


def _plan_payload(plan) -> dict:
    return {
        "candidate_id": plan.candidate_id,
        "chosen": plan.chosen,
        "objective": plan.objective,
        "total_cost": plan.total_cost,
    }


def _ranking_payload(computation) -> dict:
    return {
        "weights": computation.weights.values,
        "entries": [
            {
                "candidate_id": e.candidate_id,
                "overall": e.overall,
                "values": e.vector.values,
                "provenance": {k: v.value for k, v in e.vector.provenance.items()},
            }
            for e in computation.result.entries
        ],
    }


def create_app(data_dir: str | Path | None = None) -> FastAPI:
    if data_dir is None:
        data_dir = os.environ.get("PACKFIT_DATA_DIR", "packfit-data")
    store = ProjectStore(Path(data_dir))
    app = FastAPI(title="packfit", version="0.1.0")

    def packfit_error(request: Request, exc: PackfitError) -> JSONResponse:
        code = _error_code(exc)
        body = {"code": code, "message": str(exc), "path": None}
        if isinstance(exc, ValidationError) and exc.violations:
            body["path"] = exc.violations[0].path
            body["violations"] = [
                {"code": v.code, "path": v.path, "message": v.message}
                for v in exc.violations
            ]
        return JSONResponse(status_code=_ERROR_STATUS[code], content=body)

    app.add_exception_handler(PackfitError, packfit_error)

    @app.post("/projects", status_code=201)
    def create_project(payload: dict = Body(default={})):
        doc = payload.get("project")
        if doc is None:
            doc = project_to_doc(new_project())
        project = _validated(doc)
        project_id = payload.get("id")
        if project_id is None:
            project_id = uuid.uuid4().hex[:12]
        elif not isinstance(project_id, str) or not project_id.replace("-", "").isalnum():
            raise ValidationError("project id must be alphanumeric (dashes allowed)")
        with store.lock(project_id):
            if store.exists(project_id):
                raise ValidationError(f"project {project_id!r} already exists")
            store.write(project_id, 1, project_to_doc(project))
        return {
            "id": project_id,
            "version": 1,
            "stage": project.stage.value,
            "project": project_to_doc(project),
        }

    @app.get("/projects/{project_id}")
    def get_project(project_id: str):
        version, doc = store.read(project_id)
        project = doc_to_project(doc)
        return {
            "id": project_id,
            "version": version,
            "stage": project.stage.value,
            "project": doc,
            "cache_status": cache_status(project),
        }

    @app.put("/projects/{project_id}")
    def replace_project(project_id: str, payload: dict = Body(...)):
        with store.lock(project_id):
            version, _ = store.read(project_id)
            _require_version(payload, version)
            project = _validated(payload.get("project"))
            store.write(project_id, version + 1, project_to_doc(project))
            return {
                "id": project_id,
                "version": version + 1,
                "stage": project.stage.value,
            }

    @app.put("/projects/{project_id}/matrices/{matrix_id}/judgments")
    def put_judgments(project_id: str, matrix_id: str, payload: dict = Body(...)):
        with store.lock(project_id):
            version, doc = store.read(project_id)
            _require_version(payload, version)
            project = doc_to_project(doc)
            if matrix_id not in project.matrices:
                raise NotFoundError(f"no judgment matrix {matrix_id!r}")
            entries = payload.get("judgments")
            if not isinstance(entries, list):
                raise ValidationError("judgments must be an array")
            judgments = {}
            for i, entry in enumerate(entries):
                if not isinstance(entry, dict):
                    raise ValidationError(f"judgments[{i}] must be an object")
                try:
                    pair = (entry["better"], entry["worse"])
                    judgment = AttractivenessJudgment(int(entry["lo"]), int(entry["hi"]))
                except (KeyError, TypeError, ValueError) as exc:
                    raise ValidationError(f"judgments[{i}] is malformed: {exc}") from None
                if pair in judgments:
                    raise ValidationError(f"judgments[{i}] repeats pair {pair!r}")
                judgments[pair] = judgment
            old = project.matrices[matrix_id]
            matrix = JudgmentMatrix(
                context=old.context,
                elements=old.elements,
                judgments=judgments,
                good=old.good,
                bad=old.bad,
            )
            project.matrices[matrix_id] = matrix
            report = check_consistency(matrix)
            scale_payload = None
            if report.consistent:
                try:
                    scale = compute_scale(project, matrix_id)
                except ValidationError:
                    # Consistent but degenerate: nothing separates the
                    # anchors yet, so there is no scale to show.
                    scale = None
                if scale is not None:
                    project.cache.scales[matrix_id] = scale_cache_entry(
                        project, matrix_id, scale
                    )
                    scale_payload = _scale_payload(scale)
            store.write(project_id, version + 1, project_to_doc(project))
            return {
                "id": project_id,
                "version": version + 1,
                "consistency": {
                    "consistent": report.consistent,
                    "conflicts": [list(pair) for pair in report.conflicts],
                },
                "scale": scale_payload,
            }

    @app.post("/projects/{project_id}/candidates/{candidate_id}/optimize")
    def optimize(project_id: str, candidate_id: str, payload: dict = Body(default={})):
        budget = payload.get("budget")
        if budget is not None and (isinstance(budget, bool) or not isinstance(budget, (int, float))):
            raise ValidationError("budget override must be a number")
        with store.lock(project_id):
            version, doc = store.read(project_id)
            project = doc_to_project(doc)
            plan, performance = compute_plan(project, candidate_id, budget)
            persisted = budget is None
            if persisted:
                project.cache.plans[candidate_id] = plan_cache_entry(
                    project, candidate_id, plan, performance
                )
                version += 1
                store.write(project_id, version, project_to_doc(project))
            return {
                "id": project_id,
                "version": version,
                "plan": _plan_payload(plan),
                "performance": performance.as_dict(),
                "persisted": persisted,
            }

    @app.get("/projects/{project_id}/ranking")
    def ranking(project_id: str, budget: float | None = None):
        version, doc = store.read(project_id)
        project = doc_to_project(doc)
        computation = compute_ranking(project, budget)
        return {
            "id": project_id,
            "version": version,
            "budget_override": budget,
            "ranking": _ranking_payload(computation),
        }

    return app


def main() -> None:
    import uvicorn

    host = os.environ.get("PACKFIT_HOST", "127.0.0.1")
    port = int(os.environ.get("PACKFIT_PORT", "8000"))
    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
