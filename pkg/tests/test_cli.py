import json
import os

import pytest

from silt.cli import run


def _capture(capsys, argv):
    code = run(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_enumerate_json_five_objects(capsys):
    code, out, _ = _capture(
        capsys, ["enumerate", "--quiver", "A2", "--m", "1", "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    assert doc["count"] == 5
    assert len(doc["objects"]) == 5


def test_enumerate_text(capsys):
    code, out, _ = _capture(capsys, ["enumerate", "--quiver", "A2", "--m", "1"])
    assert code == 0
    assert out.splitlines()[0] == "5 silting objects for A2:> m=1"
    assert "{P1, S1}" in out


def test_mutate_frozen_example(capsys):
    code, out, _ = _capture(
        capsys, ["mutate", "--quiver", "A2", "--m", "1",
                 "--object", "P1,P2", "--at", "1", "--dir", "left"])
    assert code == 0
    assert out.splitlines()[0] == "{P1, S1}"
    assert "triangle: P2 -> (P1) -> S1 -> P2[1]" in out


def test_mutate_rejects_non_silting(capsys):
    code, _, err = _capture(
        capsys, ["mutate", "--quiver", "A2", "--m", "1",
                 "--object", "P1,S1[1]", "--at", "0", "--dir", "left"])
    assert code == 2
    assert "not silting" in err


def test_chain_text_and_window(capsys):
    code, out, _ = _capture(
        capsys, ["chain", "--quiver", "A2", "--m", "1", "--core", "P1"])
    assert code == 0
    assert "X0" in out and "t = 2" in out
    code, out, _ = _capture(
        capsys, ["chain", "--quiver", "A2", "--m", "1", "--core", "P1",
                 "--window=-3:5", "--format", "json"])
    assert code == 0
    assert json.loads(out)["t"] == 2


def test_check_pass_and_fail_exit_codes(capsys):
    code, out, _ = _capture(
        capsys, ["check", "thm34", "--quiver", "A2", "--m", "1",
                 "--core", "P1"])
    assert code == 0
    assert "checks passed" in out
    # the full-core sweep hits the known cross-block failure at the window top
    code, out, _ = _capture(
        capsys, ["check", "thm34", "--quiver", "A2", "--m", "1"])
    assert code == 1
    assert "[FAIL] split.blocks" in out


def test_check_all_aggregates(capsys):
    code, out, _ = _capture(
        capsys, ["check", "all", "--quiver", "A2", "--m", "1",
                 "--format", "json"])
    assert code == 1  # includes the failing cross-block entry
    doc = json.loads(out)
    names = {e["check"] for e in doc["entries"]}
    assert {"indec.count", "silting.count", "equivalence.hom.all",
            "endo.gldim.finite", "arrows.left", "model.t_bound"} <= names


def test_usage_errors(capsys):
    code, _, err = _capture(capsys, ["enumerate", "--quiver", "Z9", "--m", "1"])
    assert code == 2
    code, _, err = _capture(capsys, ["enumerate", "--quiver", "A2", "--m", "0"])
    assert code == 2
    code, _, _ = _capture(capsys, ["bogus"])
    assert code == 2
    code, _, _ = _capture(
        capsys, ["chain", "--quiver", "A2", "--m", "1", "--core", "P1",
                 "--window", "5"])
    assert code == 2


def test_export_byte_identical(capsys):
    argv = ["export", "--quiver", "A2", "--m", "1", "--format", "dot"]
    _, out1, _ = _capture(capsys, argv)
    _, out2, _ = _capture(capsys, argv)
    assert out1 == out2
    assert out1.count("->") == 5
    argv = ["export", "--quiver", "A2", "--m", "1", "--format", "json"]
    _, j1, _ = _capture(capsys, argv)
    _, j2, _ = _capture(capsys, argv)
    assert j1 == j2
    doc = json.loads(j1)
    assert len(doc["vertices"]) == 5


def test_export_out_file(tmp_path, capsys):
    target = tmp_path / "graph.dot"
    code, out, _ = _capture(
        capsys, ["export", "--quiver", "A2", "--m", "1",
                 "--format", "dot", "--out", str(target)])
    assert code == 0
    assert out == ""
    assert target.read_text().startswith("digraph")


def test_report_dir_artifacts(tmp_path, capsys):
    rd = tmp_path / "artifacts"
    code, _, _ = _capture(
        capsys, ["check", "prop33", "--quiver", "A2", "--m", "1",
                 "--report-dir", str(rd)])
    assert code == 0
    names = sorted(p.name for p in rd.iterdir())
    assert "check_prop33_A2_m1.csv" in names
    assert any(n.endswith(".png") for n in names)
    code, _, _ = _capture(
        capsys, ["chain", "--quiver", "A2", "--m", "1", "--core", "P1",
                 "--report-dir", str(rd)])
    assert code == 0
    assert any(n.startswith("chain_") for n in
               (p.name for p in rd.iterdir()))


def test_cutoff_env(capsys, monkeypatch):
    monkeypatch.setenv("SILT_CUTOFF", "3")
    code, out, _ = _capture(
        capsys, ["check", "prop35", "--quiver", "A2", "--m", "1",
                 "--format", "json"])
    assert code == 0
    doc = json.loads(out)
    entries = [e for e in doc["entries"] if e["check"] == "endo.gldim.finite"]
    assert entries and all(e["data"]["cutoff"] == 3 for e in entries)
