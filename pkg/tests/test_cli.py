import json

import pytest

from packfit.cli import main
from packfit.demo import demo_project, quantitative_demo_project
from packfit.macbeth import AttractivenessJudgment, JudgmentMatrix
from packfit.project import read_project_file, write_project_file


@pytest.fixture
def project_file(tmp_path):
    path = tmp_path / "project.json"
    write_project_file(path, demo_project())
    return path


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestNewAndValidate:
    def test_new_creates_a_loadable_file(self, tmp_path, capsys):
        path = tmp_path / "fresh.json"
        code, out, _ = run(capsys, "new", "--project", path)
        assert code == 0
        assert "created" in out
        code, out, _ = run(capsys, "validate", "--project", path)
        assert code == 0
        assert out.strip() == "ok"

    def test_new_refuses_to_clobber(self, project_file, capsys):
        code, _, err = run(capsys, "new", "--project", project_file)
        assert code == 1
        assert "already exists" in err

    def test_validate_lists_violations(self, tmp_path, capsys):
        path = tmp_path / "broken.json"
        doc = json.loads(write_demo_bytes())
        doc["requirements"][0]["weight"] = -0.5
        path.write_text(json.dumps(doc))
        code, out, _ = run(capsys, "validate", "--project", path)
        assert code == 1
        assert "requirements[0]" in out

    def test_missing_file(self, tmp_path, capsys):
        code, _, err = run(capsys, "validate", "--project", tmp_path / "nope.json")
        assert code == 1
        assert "error" in err


def write_demo_bytes() -> bytes:
    from packfit.project import save

    return save(demo_project())


class TestScreenAndGap:
    def test_screen_reports_reasons(self, project_file, capsys):
        code, out, _ = run(capsys, "screen", "--project", project_file)
        assert code == 0
        assert "kept sap" in out
        assert "dropped local-suite" in out
        assert "industry" in out

    def test_gap_table(self, project_file, capsys):
        code, out, _ = run(capsys, "gap", "--project", project_file)
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["candidate", "fin", "inv", "crm", "rpt", "hr"]
        local = next(l for l in lines if l.startswith("local-suite"))
        assert "unassessed" in local


class TestOptimize:
    def test_persists_plan_cache(self, project_file, capsys):
        before = project_file.read_bytes()
        code, out, _ = run(capsys, "optimize", "--project", project_file, "--candidate", "sap")
        assert code == 0
        assert "objective" in out
        assert "total cost" in out
        after = project_file.read_bytes()
        assert after != before
        assert read_project_file(project_file).cache.plans["sap"]

    def test_budget_override_is_transient(self, project_file, capsys):
        before = project_file.read_bytes()
        code, out, _ = run(
            capsys,
            "optimize", "--project", project_file,
            "--candidate", "sap", "--budget", "0",
        )
        assert code == 0
        assert "budget 0.00" in out
        assert project_file.read_bytes() == before

    def test_unassessed_candidate_fails_cleanly(self, project_file, capsys):
        code, _, err = run(
            capsys, "optimize", "--project", project_file, "--candidate", "local-suite"
        )
        assert code == 1
        assert "error" in err


def corrupt_matrix(path):
    """Swap the fc matrix for one carrying an equality-chain contradiction."""
    project = read_project_file(path)
    old = project.matrices["fc"]
    judgments = {
        ("good", "sap"): AttractivenessJudgment(0, 0),
        ("sap", "oracle"): AttractivenessJudgment(0, 0),
        ("good", "oracle"): AttractivenessJudgment(3, 3),
    }
    project.matrices["fc"] = JudgmentMatrix(
        context=old.context,
        elements=("good", "sap", "oracle"),
        judgments=judgments,
        good="good",
    )
    write_project_file(path, project)


class TestConsistencyAndScale:
    def test_consistent_matrix(self, project_file, capsys):
        code, out, _ = run(
            capsys, "consistency", "--project", project_file, "--matrix", "fc"
        )
        assert code == 0
        assert out.strip() == "consistent"

    def test_inconsistent_matrix_exits_2(self, project_file, capsys):
        corrupt_matrix(project_file)
        code, out, _ = run(
            capsys, "consistency", "--project", project_file, "--matrix", "fc"
        )
        assert code == 2
        assert "inconsistent" in out
        assert "conflict" in out

    def test_unknown_matrix(self, project_file, capsys):
        code, _, err = run(
            capsys, "consistency", "--project", project_file, "--matrix", "zz"
        )
        assert code == 1
        assert "zz" in err

    def test_scale_prints_and_caches(self, project_file, capsys):
        code, out, _ = run(capsys, "scale", "--project", project_file, "--matrix", "fc")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].split() == ["element", "value", "raw"]
        assert lines[1].startswith("good")
        assert "1.0000" in lines[1]
        assert read_project_file(project_file).cache.scales["fc"]

    def test_scale_on_inconsistent_matrix_exits_2(self, project_file, capsys):
        corrupt_matrix(project_file)
        before = project_file.read_bytes()
        code, _, err = run(capsys, "scale", "--project", project_file, "--matrix", "fc")
        assert code == 2
        assert "conflict" in err
        assert project_file.read_bytes() == before


class TestWeightsRankReport:
    def test_weights(self, project_file, capsys):
        code, out, _ = run(capsys, "weights", "--project", project_file)
        assert code == 0
        assert out.splitlines()[0].split() == ["criterion", "weight"]
        cached = read_project_file(project_file).cache.weights
        assert abs(sum(cached["values"].values()) - 1.0) < 1e-9

    def test_rank_table_and_fixed_point(self, project_file, capsys):
        code, first, _ = run(capsys, "rank", "--project", project_file)
        assert code == 0
        header = first.splitlines()[0].split()
        assert header[:2] == ["candidate", "overall"]
        assert first.splitlines()[-1].startswith("weights")
        snapshot = project_file.read_bytes()

        # A second run recomputes identical artifacts: same stdout, same file.
        code, second, _ = run(capsys, "rank", "--project", project_file)
        assert code == 0
        assert second == first
        assert project_file.read_bytes() == snapshot

    def test_whatif_is_pure(self, project_file, capsys):
        before = project_file.read_bytes()
        code, out, _ = run(capsys, "whatif", "--project", project_file, "--budget", "0")
        assert code == 0
        assert "not persisted" in out
        assert project_file.read_bytes() == before

    def test_report_md(self, project_file, capsys):
        before = project_file.read_bytes()
        code, out, _ = run(capsys, "report", "--project", project_file)
        assert code == 0
        for heading in ("# Selection report", "## Screening", "## Gap analysis", "## Ranking"):
            assert heading in out
        assert project_file.read_bytes() == before

    def test_report_csv(self, tmp_path, capsys):
        path = tmp_path / "quant.json"
        write_project_file(path, quantitative_demo_project())
        code, out, _ = run(capsys, "report", "--project", path, "--format", "csv")
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("candidate,overall,")
        assert lines[-1].startswith("weights,,")
        # Full-precision floats so the csv is machine-usable.
        cells = lines[1].split(",")
        assert float(cells[1]) <= 1.0

    def test_rank_without_tree_fails_cleanly(self, tmp_path, capsys):
        project = demo_project()
        project.criteria_tree = None
        path = tmp_path / "treeless.json"
        write_project_file(path, project)
        code, _, err = run(capsys, "rank", "--project", path)
        assert code == 1
        assert "error" in err


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("screen",),
            ("gap",),
            ("optimize", "--candidate", "sap"),
            ("consistency", "--matrix", "fc"),
            ("scale", "--matrix", "tco"),
            ("weights",),
            ("rank",),
            ("whatif", "--budget", "25"),
            ("report",),
            ("report", "--format", "csv"),
        ],
    )
    def test_second_run_is_byte_identical(self, project_file, capsys, argv):
        code1, out1, _ = run(capsys, *argv, "--project", project_file)
        code2, out2, _ = run(capsys, *argv, "--project", project_file)
        assert (code1, out1) == (code2, out2)
