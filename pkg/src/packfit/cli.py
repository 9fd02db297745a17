"""Batch command-line interface over project files.

Every command reads the project given by --project; commands that derive
artifacts (optimize, scale, weights, rank) write refreshed caches back.
Exit codes: 0 success, 1 validation failure, 2 consistency failure.
"""

import argparse
import sys
from pathlib import Path

from .errors import (
    ConsistencyError,
    DegenerateWeightsError,
    NotFoundError,
    PackfitError,
    PreconditionError,
    SchemaVersionError,
    StateError,
    ValidationError,
)
from .macbeth import check_consistency
from .model import MatchThresholds, classify_match, leaf_criteria, screen_candidates
from .pipeline import (
    compute_plan,
    compute_ranking,
    compute_scale,
    compute_weights,
    plan_cache_entry,
    scale_cache_entry,
    store_ranking,
    weights_cache_entry,
)
from .project import (
    WEIGHTING_MATRIX_ID,
    load,
    new_project,
    read_project_file,
    write_project_file,
)

_DEFAULT_THRESHOLDS = "target 1.0, worst 0.0"


def _fmt(x: float) -> str:
    return f"{x:.4f}"


def _money(x: float) -> str:
    return f"{x:.2f}"


def _table(rows: list[list[str]]) -> str:
    widths = [max(len(row[i]) for row in rows) for i in range(len(rows[0]))]
    return "\n".join(
        "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip()
        for row in rows
    )


def cmd_new(args) -> int:
    path = Path(args.project)
    if path.exists():
        print(f"error: {path} already exists", file=sys.stderr)
        return 1
    write_project_file(path, new_project())
    print(f"created {path}")
    return 0


def cmd_validate(args) -> int:
    try:
        load(Path(args.project).read_bytes())
    except SchemaVersionError as exc:
        print(str(exc))
        return 1
    except ValidationError as exc:
        for v in exc.violations or []:
            print(str(v))
        if not exc.violations:
            print(str(exc))
        return 1
    print("ok")
    return 0


def cmd_screen(args) -> int:
    project = read_project_file(args.project)
    result = screen_candidates(list(project.candidates), list(project.screening_criteria))
    kept = {c.id for c in result.survivors}
    for c in project.candidates:
        if c.id in kept:
            print(f"kept {c.id} ({c.name})")
        else:
            reasons = ", ".join(sc.attribute.value for sc in result.exclusions[c.id])
            print(f"dropped {c.id} ({c.name}): {reasons}")
    return 0


def cmd_gap(args) -> int:
    project = read_project_file(args.project)
    default = MatchThresholds(target_level=1.0, worst_acceptable=0.0)
    rows = [["candidate"] + [r.id for r in project.requirements]]
    for c in project.candidates:
        if c.id not in project.satisfaction.levels:
            rows.append([c.id] + ["unassessed"] * len(project.requirements))
            continue
        row = [c.id]
        for r in project.requirements:
            a = project.satisfaction.level(c.id, r.id)
            pattern = classify_match(a, project.thresholds.get(r.id, default))
            row.append(pattern.value)
        rows.append(row)
    print(_table(rows))
    return 0


def cmd_optimize(args) -> int:
    path = Path(args.project)
    project = read_project_file(path)
    plan, performance = compute_plan(project, args.candidate, args.budget)
    budget = args.budget if args.budget is not None else project.budgets.get(args.candidate, 0.0)
    print(f"candidate {args.candidate}  budget {_money(budget)}")
    menus = project.strategies.get(args.candidate, {})
    for rid in sorted(plan.chosen):
        sid = plan.chosen[rid]
        if sid is None:
            print(f"{rid} unresolved")
        else:
            strategy = next(s for s in menus[rid] if s.id == sid)
            print(f"{rid} <- {sid} ({strategy.tailoring_type.value})  cost {_money(strategy.cost)}")
    print(f"objective {_fmt(plan.objective)}")
    print(f"total cost {_money(plan.total_cost)}")
    for key, value in performance.as_dict().items():
        text = _money(value) if key == "adaptation_cost" else _fmt(value)
        print(f"{key} {text}")
    if args.budget is None:
        project.cache.plans[args.candidate] = plan_cache_entry(
            project, args.candidate, plan, performance
        )
        write_project_file(path, project)
    return 0


def cmd_consistency(args) -> int:
    project = read_project_file(args.project)
    if args.matrix not in project.matrices:
        print(f"error: no judgment matrix {args.matrix!r}", file=sys.stderr)
        return 1
    report = check_consistency(project.matrices[args.matrix])
    if report.consistent:
        print("consistent")
        return 0
    print("inconsistent")
    for x, y in report.conflicts:
        print(f"conflict {x} vs {y}")
    return 2


def cmd_scale(args) -> int:
    path = Path(args.project)
    project = read_project_file(path)
    scale = compute_scale(project, args.matrix)
    matrix = project.matrices[args.matrix]
    rows = [["element", "value", "raw"]]
    for e in matrix.elements:
        rows.append([e, _fmt(scale.value[e]), _fmt(scale.raw[e])])
    print(_table(rows))
    project.cache.scales[args.matrix] = scale_cache_entry(project, args.matrix, scale)
    write_project_file(path, project)
    return 0


def cmd_weights(args) -> int:
    path = Path(args.project)
    project = read_project_file(path)
    weights = compute_weights(project)
    matrix = project.matrices[WEIGHTING_MATRIX_ID]
    rows = [["criterion", "weight"]]
    for e in matrix.elements:
        if e in weights.values:
            rows.append([e, _fmt(weights.values[e])])
    print(_table(rows))
    project.cache.weights = weights_cache_entry(project, weights)
    write_project_file(path, project)
    return 0


def _ranking_table(project, computation) -> str:
    leaves = [leaf.id for leaf in leaf_criteria(project.criteria_tree)]
    rows = [["candidate", "overall"] + leaves]
    for entry in computation.result.entries:
        rows.append(
            [entry.candidate_id, _fmt(entry.overall)]
            + [_fmt(entry.vector.values[leaf]) for leaf in leaves]
        )
    rows.append(
        ["weights", ""] + [_fmt(computation.weights.values[leaf]) for leaf in leaves]
    )
    return _table(rows)


def cmd_rank(args) -> int:
    path = Path(args.project)
    project = read_project_file(path)
    computation = compute_ranking(project)
    print(_ranking_table(project, computation))
    store_ranking(project, computation)
    write_project_file(path, project)
    return 0


def cmd_whatif(args) -> int:
    project = read_project_file(args.project)
    computation = compute_ranking(project, budget=args.budget)
    print(f"budget override {_money(args.budget)} (not persisted)")
    print(_ranking_table(project, computation))
    return 0


def _report_md(project) -> list[str]:
    lines = ["# Selection report", ""]
    lines += ["## Requirements", "", "| id | label | weight |", "| --- | --- | --- |"]
    for r in project.requirements:
        lines.append(f"| {r.id} | {r.label} | {_fmt(r.weight)} |")
    lines.append("")

    result = screen_candidates(list(project.candidates), list(project.screening_criteria))
    kept = {c.id for c in result.survivors}
    lines += ["## Screening", "", "| candidate | outcome |", "| --- | --- |"]
    for c in project.candidates:
        if c.id in kept:
            lines.append(f"| {c.id} | kept |")
        else:
            reasons = ", ".join(sc.attribute.value for sc in result.exclusions[c.id])
            lines.append(f"| {c.id} | dropped ({reasons}) |")
    lines.append("")

    default = MatchThresholds(target_level=1.0, worst_acceptable=0.0)
    lines += ["## Gap analysis", ""]
    header = "| candidate | " + " | ".join(r.id for r in project.requirements) + " |"
    lines += [header, "| --- |" + " --- |" * len(project.requirements)]
    for c in project.candidates:
        if c.id not in project.satisfaction.levels:
            cells = ["unassessed"] * len(project.requirements)
        else:
            cells = [
                classify_match(
                    project.satisfaction.level(c.id, r.id),
                    project.thresholds.get(r.id, default),
                ).value
                for r in project.requirements
            ]
        lines.append(f"| {c.id} | " + " | ".join(cells) + " |")
    lines.append("")

    if project.extensions:
        lines += ["## Unrequested features", "", "| candidate | feature | impact |", "| --- | --- | --- |"]
        for e in project.extensions:
            lines.append(f"| {e.candidate_id} | {e.feature} | {e.impact.value} |")
        lines.append("")

    computation = compute_ranking(project)
    leaves = [leaf.id for leaf in leaf_criteria(project.criteria_tree)]
    lines += ["## Ranking", ""]
    lines += ["| candidate | overall | " + " | ".join(leaves) + " |"]
    lines += ["| --- | --- |" + " --- |" * len(leaves)]
    for entry in computation.result.entries:
        values = " | ".join(_fmt(entry.vector.values[leaf]) for leaf in leaves)
        lines.append(f"| {entry.candidate_id} | {_fmt(entry.overall)} | {values} |")
    weight_cells = " | ".join(_fmt(computation.weights.values[leaf]) for leaf in leaves)
    lines.append(f"| weights | | {weight_cells} |")
    lines.append("")
    return lines


def _report_csv(project) -> list[str]:
    computation = compute_ranking(project)
    leaves = [leaf.id for leaf in leaf_criteria(project.criteria_tree)]
    lines = ["candidate,overall," + ",".join(leaves)]
    for entry in computation.result.entries:
        values = ",".join(repr(entry.vector.values[leaf]) for leaf in leaves)
        lines.append(f"{entry.candidate_id},{entry.overall!r},{values}")
    lines.append("weights,," + ",".join(repr(computation.weights.values[l]) for l in leaves))
    return lines


def cmd_report(args) -> int:
    project = read_project_file(args.project)
    lines = _report_md(project) if args.format == "md" else _report_csv(project)
    print("\n".join(lines))
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="packfit", description="package selection decision support"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--project", required=True, help="project file path")
        p.set_defaults(func=func)
        return p

    add("new", cmd_new, "create an empty project file")
    add("validate", cmd_validate, "list every invariant violation")
    add("screen", cmd_screen, "apply the must-pass screening criteria")
    add("gap", cmd_gap, f"matching-pattern table (defaults: {_DEFAULT_THRESHOLDS})")
    p = add("optimize", cmd_optimize, "solve one candidate's adaptation plan")
    p.add_argument("--candidate", required=True)
    p.add_argument("--budget", type=float, default=None, help="what-if override, not persisted")
    p = add("consistency", cmd_consistency, "check one judgment matrix")
    p.add_argument("--matrix", required=True)
    p = add("scale", cmd_scale, "derive the cardinal scale of one matrix")
    p.add_argument("--matrix", required=True)
    add("weights", cmd_weights, "derive criteria weights from the weighting matrix")
    add("rank", cmd_rank, "score and rank the screening survivors")
    p = add("whatif", cmd_whatif, "re-rank under a transient budget override")
    p.add_argument("--budget", type=float, required=True)
    p = add("report", cmd_report, "full report on stdout")
    p.add_argument("--format", choices=("md", "csv"), default="md")
    return parser


def main(argv=None) -> int:
    args = _parser().parse_args(argv)
    try:
        return args.func(args)
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        if exc.report is not None:
            for x, y in exc.report.conflicts:
                print(f"conflict {x} vs {y}", file=sys.stderr)
        return 2
    except ValidationError as exc:
        print(f"error: {exc}", file=sys.stderr)
        for v in exc.violations or []:
            print(str(v), file=sys.stderr)
        return 1
    except (
        NotFoundError,
        SchemaVersionError,
        PreconditionError,
        DegenerateWeightsError,
        StateError,
        FileNotFoundError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except PackfitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
