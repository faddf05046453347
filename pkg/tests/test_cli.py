from __future__ import annotations

import json
import shutil
import subprocess
import sys

import pytest

from hatlab import covers
from hatlab.cli import main
from hatlab.graphcore import Graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_construct_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "construct", "Xo(3,9;2)")
    assert code == 0
    g = Graph.from_hatg(out)
    assert g.order == 27 and g.is_regular(4)
    path = tmp_path / "holt.hatg"
    assert run(capsys, "construct", "Xo(3,9;2)", "-o", str(path))[0] == 0
    assert Graph.read(path) == g


def test_analyze(capsys, tmp_path):
    code, out, _ = run(capsys, "analyze", "Y(4,48;13,44)")
    assert code == 0
    rep = json.loads(out)
    assert rep["aut_order"] == 384 and rep["stabilizer_order"] == 2
    assert (rep["radius"], rep["attachment_number"], rep["attachment_class"]) == (12, 3, "other")
    assert rep["transitivity_profile"]["half_arc"] is True
    assert rep["eight_cycle_types"]["I"] == 192
    path = tmp_path / "g.hatg"
    run(capsys, "construct", "Z(20,5;9,2)", "-o", str(path))
    code, out, _ = run(capsys, "analyze", str(path))
    assert code == 0 and json.loads(out)["attachment_class"] == "loose"


def test_analyze_non_hat(capsys):
    code, out, _ = run(capsys, "analyze", "Y(4,16;5,12)")
    rep = json.loads(out)
    assert code == 0 and rep["radius"] is None and rep["transitivity_profile"]["arc"] is True


def test_aut_and_iso(capsys):
    code, out, _ = run(capsys, "aut", "Xo(3,9;2)")
    rep = json.loads(out)
    assert code == 0 and rep["aut_order"] == 54 and rep["stabilizer_order"] == 2
    code, out, _ = run(capsys, "iso", "Xo(3,9;2)", "Y(3,9;7,3)")
    rep = json.loads(out)
    assert code == 0 and rep["isomorphic"] is True and len(rep["witness"]) == 27
    code, out, _ = run(capsys, "iso", "Xo(3,9;2)", "Y(3,9;1,3)")
    assert json.loads(out) == {"isomorphic": False, "witness": None}


def test_classes(capsys):
    code, out, _ = run(capsys, "classes", "Xo(3,9;2)")
    rep = json.loads(out)
    assert code == 0 and rep["classes"] == ["I", "II"] and rep["exhaustive"]
    code, out, _ = run(capsys, "classes", "Xo(3,9;2)", "--double-cover")
    assert json.loads(out)["classes"] == ["I", "II", "III"]
    code, out, _ = run(capsys, "classes", "Y(4,48;13,44)", "--budget", "10")
    rep = json.loads(out)
    assert code == 0 and rep["budget_exceeded"] is True


def test_census(capsys, tmp_path):
    code, out, err = run(capsys, "census", "--max-order", "192", "--jobs", "1")
    assert code == 0
    assert out.splitlines() == ["order,family,m,n,r,t,radius,attachment_number", "192,Y,4,48,13,44,12,3"]
    path = tmp_path / "c.csv"
    code, _, _ = run(capsys, "census", "--max-order", "200", "--out", str(path), "--no-prefilter")
    assert code == 0 and path.read_text().count("\n") == 2


def test_cover(capsys, tmp_path):
    code, out, _ = run(capsys, "cover", "--base", "Y(4,48;13,44)", "--p", "7", "--verify", "structural")
    rep = json.loads(out)
    assert code == 0 and rep["target"] == "Y(4,336;253,284)" and rep["order"] == 1344
    path = tmp_path / "base.hatg"
    run(capsys, "construct", "Xo(3,9;2)", "-o", str(path))
    out_graph = tmp_path / "cover.hatg"
    code, out, _ = run(capsys, "cover", "--base", str(path), "--p", "2", "--graph-out", str(out_graph))
    assert code == 0 and json.loads(out)["order"] == 54
    assert Graph.read(out_graph).order == 54


@pytest.mark.parametrize("argv", [
    ["construct", "Xo(3,10;3)"],
    ["construct", "nonsense"],
    ["analyze", "/no/such/file.hatg"],
    ["census", "--max-order", "100", "--jobs", "0"],
    ["cover", "--base", "Y(4,48;13,44)", "--p", "4"],
    ["census"],
    ["frobnicate"],
    [],
])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 1


def test_bad_hatg_file(capsys, tmp_path):
    path = tmp_path / "bad.hatg"
    path.write_text("hatg 1\nn 3\n2 1\n")
    assert run(capsys, "aut", str(path))[0] == 1


def test_verification_failure_exit_2(capsys, monkeypatch):
    monkeypatch.setattr(covers, "_check_map", lambda *a: False)
    code, out, err = run(capsys, "cover", "--base", "Y(4,48;13,44)", "--p", "5", "--verify", "structural")
    assert code == 2
    assert json.loads(out)["checks"]["isomorphism_phi"] is False
    assert "isomorphism_phi" in err


@pytest.mark.skipif(shutil.which("hatlab") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["hatlab", "aut", "Xo(3,9;2)"], capture_output=True, text=True, check=True)
    assert json.loads(res.stdout)["aut_order"] == 54
