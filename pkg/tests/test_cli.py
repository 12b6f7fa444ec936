"""CLI behaviour: exit codes, report files, determinism."""

import json

import pytest
from click.testing import CliRunner

from planealg.cli import main
from hallplane import non_translation_plane

TRIANGLE = {"num_points": 3, "lines": [[0, 1], [1, 2], [0, 2]]}


@pytest.fixture()
def runner():
    return CliRunner()


def invoke(runner, *args):
    return runner.invoke(main, list(args), catch_exceptions=False)


def test_build_plane_roundtrips(runner, tmp_path):
    out = tmp_path / "p3.json"
    result = invoke(runner, "build-plane", "--q", "3", "--out", str(out))
    assert result.exit_code == 0
    doc = json.loads(out.read_text())
    assert doc["num_points"] == 9
    assert len(doc["lines"]) == 12
    assert doc["lines"] == sorted(doc["lines"])

    report = tmp_path / "r.json"
    result = invoke(runner, "check-axioms", "--plane", str(out), "--report", str(report))
    assert result.exit_code == 0
    assert json.loads(report.read_text())["totals"] == {"passed": 3, "failed": 0}


def test_build_plane_usage_errors(runner, tmp_path):
    assert invoke(runner, "build-plane", "--q", "6", "--out", str(tmp_path / "x")).exit_code == 2
    assert invoke(runner, "build-plane", "--q", "4", "--poly", "1,0,1", "--out", str(tmp_path / "x")).exit_code == 2
    assert invoke(runner, "build-plane", "--q", "4", "--poly", "one,two", "--out", str(tmp_path / "x")).exit_code == 2


def test_check_axioms_triangle_exits_1_with_witness(runner, tmp_path):
    plane_file = tmp_path / "triangle.json"
    plane_file.write_text(json.dumps(TRIANGLE))
    report = tmp_path / "report.json"
    result = invoke(runner, "check-axioms", "--plane", str(plane_file), "--report", str(report))
    assert result.exit_code == 1
    body = json.loads(report.read_text())
    assert body["totals"]["failed"] == 1
    fails = [c for c in body["checks"] if c["status"] == "fail"]
    assert fails[0]["name"] == "playfair_parallels"
    assert fails[0]["witness"]["point"] == 0


def test_missing_plane_file_is_usage_error(runner):
    result = invoke(runner, "check-axioms", "--plane", "/nonexistent/p.json")
    assert result.exit_code == 2


def test_plane_and_q_are_mutually_exclusive(runner):
    assert invoke(runner, "check-axioms", "--plane", "x.json", "--q", "2").exit_code == 2
    assert invoke(runner, "check-axioms").exit_code == 2


def test_enumerate(runner, tmp_path):
    out = tmp_path / "ts.json"
    result = invoke(runner, "enumerate", "--q", "2", "--what", "translations", "--out", str(out))
    assert result.exit_code == 0
    body = json.loads(out.read_text())
    assert body["count"] == 4
    assert {"perm", "fixed_points", "direction"} <= set(body["elements"][0])

    result = invoke(runner, "enumerate", "--q", "2", "--what", "dilations", "--out", str(out))
    assert json.loads(out.read_text())["count"] == 4


def test_enumerate_on_bad_plane_exits_1(runner, tmp_path):
    plane_file = tmp_path / "triangle.json"
    plane_file.write_text(json.dumps(TRIANGLE))
    out = tmp_path / "out.json"
    result = invoke(runner, "enumerate", "--plane", str(plane_file), "--what", "translations", "--out", str(out))
    assert result.exit_code == 1
    assert json.loads(out.read_text())["totals"]["failed"] == 1


def test_verify_group(runner, tmp_path):
    report = tmp_path / "g.json"
    result = invoke(runner, "verify-group", "--q", "3", "--report", str(report))
    assert result.exit_code == 0
    body = json.loads(report.read_text())
    assert body["summary"]["group_order"] == 9
    assert body["summary"]["num_dilations"] == 18
    assert body["totals"]["failed"] == 0


def test_verify_skewfield_with_oracle(runner, tmp_path):
    report = tmp_path / "sf.json"
    result = invoke(
        runner, "verify-skewfield", "--q", "3", "--oracle", "--report", str(report)
    )
    assert result.exit_code == 0
    body = json.loads(report.read_text())
    assert body["summary"]["num_elements"] == 3
    assert body["config"] == {
        "command": "verify-skewfield",
        "plane": None,
        "q": 3,
        "poly": None,
        "base_point": 0,
        "oracle": True,
    }
    assert any(c["name"] == "oracle_equivalence" for c in body["checks"])
    assert body["tables"]["mul"][1] == [0, 1, 2]


def test_verify_skewfield_non_transitive_plane_exits_1(runner, tmp_path):
    plane_file = tmp_path / "nt.json"
    plane_file.write_text(json.dumps(non_translation_plane().to_dict()))
    report = tmp_path / "nt_report.json"
    result = invoke(runner, "verify-skewfield", "--plane", str(plane_file), "--report", str(report))
    assert result.exit_code == 1
    body = json.loads(report.read_text())
    fail = next(c for c in body["checks"] if c["status"] == "fail")
    assert fail["name"] == "translation_transitivity"
    assert "from" in fail["witness"] and "to" in fail["witness"]


def test_exit_1_reports_always_carry_a_witness(runner, tmp_path):
    plane_file = tmp_path / "triangle.json"
    plane_file.write_text(json.dumps(TRIANGLE))
    report = tmp_path / "report.json"
    for cmd in (["check-axioms"], ["verify-group"], ["verify-skewfield"]):
        result = invoke(runner, *cmd, "--plane", str(plane_file), "--report", str(report))
        assert result.exit_code == 1
        body = json.loads(report.read_text())
        assert any("witness" in c for c in body["checks"] if c["status"] == "fail")


def test_reports_are_deterministic(runner, tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    for path in (a, b):
        result = invoke(runner, "verify-skewfield", "--q", "3", "--oracle", "--report", str(path))
        assert result.exit_code == 0
    assert a.read_bytes() == b.read_bytes()


def test_stdout_output(runner):
    result = invoke(runner, "enumerate", "--q", "2", "--what", "translations")
    assert json.loads(result.stdout)["count"] == 4
