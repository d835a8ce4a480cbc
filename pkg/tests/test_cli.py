import json
import os
import shutil
import subprocess
import sys

import pytest

from quadric_sheaves.cli import main
from quadric_sheaves.points import PointSet, general_points
from quadric_sheaves.sheaf import Presentation

WITNESSES = os.path.join(os.path.dirname(__file__), "..", "witnesses")


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, (json.loads(out) if out.strip() else None), err


def wpath(name):
    return os.path.join(WITNESSES, name + ".json")


@pytest.fixture
def files(tmp_path):
    def write(name, obj):
        p = tmp_path / name
        p.write_text(json.dumps(obj))
        return str(p)
    return write


def test_cohomology_line_bundle(capsys):
    assert run(capsys, "cohomology", "--bundle", "(0,-2)", "--i", "1")[:2] == (0, {"h": 1})
    assert run(capsys, "cohomology", "--bundle", "(1,1)", "--twist", "(-3,1)")[1] == {"h": [0, 3, 0]}


def test_cohomology_presentation_and_field(capsys):
    q = run(capsys, "cohomology", "--presentation", wpath("max22_r2"))[1]
    p = run(capsys, "cohomology", "--presentation", wpath("max22_r2"), "--field", "Fp:10007")[1]
    assert q == p == {"h": [3, 1, 0]}


def test_chern_and_dual(capsys):
    assert run(capsys, "chern", "--presentation", wpath("max22_r2"))[1] == {"r": 2, "c1": [2, 2], "c2": 8}
    out = run(capsys, "dual", "--presentation", wpath("max11_r2"))[1]
    assert out["chern"]["c1"] == [-1, -1] and out["h"][1] == 1


def test_gg_check_and_index(capsys):
    code, out, _ = run(capsys, "gg-check", "--presentation", wpath("max22_r2"), "--locally-free")
    assert code == 0 and out["globally_generated"] and out["locally_free"]
    assert out["bm"] is False
    # E(2,-1) picks up sections from H^1(O(0,-3)), so the index is not unique
    idx = run(capsys, "index", "--presentation", wpath("max22_r2"))[1]["index"]
    assert idx == [[-2, 1], [0, 0], [1, -2]]


def test_hom_cohomology(capsys):
    T, A = wpath("max11_r3"), wpath("max11_r2")
    assert run(capsys, "hom-cohomology", "--source", T, "--target", T)[1] == {"h": [1, 0, 0]}
    assert run(capsys, "hom-cohomology", "--source", A, "--target", T)[1]["h"][0] == 0


def test_point_verbs(capsys, files):
    Z = files("z.json", general_points(6, seed=2).to_json())
    out = run(capsys, "ideal", "--points", Z, "--degree", "(1,2)", "--gg")[1]
    assert out["h"][:2] == [0, 0] and out["gg"]["verdict"] in {"gg_certified", "not_gg", "undetermined"}
    assert run(capsys, "cb-check", "--points", Z, "--degree", "(0,0)")[0] == 0
    one = files("one.json", general_points(1, seed=2).to_json())
    assert run(capsys, "cb-check", "--points", one, "--degree", "(0,0)")[:2] == (1, {"cayley_bacharach": False})
    D = files("d.json", {"components": [["first", [1, 2]]]})
    assert run(capsys, "residual", "--points", Z, "--divisor", D, "--degree", "(2,2)")[0] == 0


def test_length7_search_small(capsys):
    code, out, _ = run(capsys, "length7-search", "--trials", "20", "--structured", "1", "--primes", "10007")
    assert code == 0 and out["counterexamples"] == []


def test_witness_lookup(capsys):
    out = run(capsys, "witness", "--c1", "(1,1)", "--c2", "2", "--rank", "3")[1]
    assert out["name"] == "max11_r3"
    assert Presentation.from_json(out["data"]).target == [(0, 0)] * 4
    out = run(capsys, "witness", "--c1", "(2,2)", "--c2", "5", "--rank", "2")[1]
    assert out["kind"] == "point-scheme" and len(PointSet.from_json(out["data"])) == 5


def test_classify_exit_zero(capsys, tmp_path):
    rep = tmp_path / "rep.json"
    code, out, _ = run(capsys, "classify", "--seed", "7", "--report", str(rep))
    assert code == 0 and out["ok"]
    assert json.loads(rep.read_text())["records"]


# exit codes and errors

def test_usage_errors(capsys, files):
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
    assert "usage" in capsys.readouterr().err
    bad = files("bad.json", None)
    with open(bad, "w") as fh:
        fh.write("{not json")
    code, out, err = run(capsys, "chern", "--presentation", bad)
    assert code == 2 and out is None and "malformed" in err
    code, _, _ = run(capsys, "chern", "--presentation", files("x.json", {"source": []}))
    assert code == 2
    assert run(capsys, "cohomology")[0] == 2
    assert run(capsys, "cohomology", "--bundle", "(0,0)", "--i", "5")[0] == 2
    assert run(capsys, "witness", "--c1", "(2,2)", "--c2", "7", "--rank", "2")[0] == 2


def test_gg_failure_exit_one(capsys, files):
    # O(-1,-1) -> O(-1,0) + O(0,-1) has no sections, so no certificate applies
    P = Presentation.generic([(-1, -1)], [(-1, 0), (0, -1), (0, 0)], seed=1)
    code, out, _ = run(capsys, "gg-check", "--presentation", files("p.json", P.to_json()))
    assert code == 1 and not out["globally_generated"]


# determinism and round trips

def test_byte_identical_output(capsys):
    argv = ["length7-search", "--trials", "15", "--structured", "1", "--seed", "4", "--records"]
    main(argv)
    a = capsys.readouterr().out
    main(argv + ["--jobs", "2"])
    b = capsys.readouterr().out
    assert a == b


def test_json_round_trip(capsys):
    for name in ("max22_r2", "c22_4_i02_r2", "m6_points"):
        with open(wpath(name)) as fh:
            obj = json.load(fh)
        cls = PointSet if name.endswith("points") else Presentation
        assert cls.from_json(obj).to_json() == obj
    out = run(capsys, "witness", "--c1", "(2,2)", "--c2", "8", "--rank", "3")[1]
    assert Presentation.from_json(out["data"]).to_json() == out["data"]


@pytest.mark.skipif(shutil.which("quadric-sheaves") is None, reason="console script not installed")
def test_console_script():
    res = subprocess.run(["quadric-sheaves", "cohomology", "--bundle", "(0,-2)", "--i", "1"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and json.loads(res.stdout) == {"h": 1}
    res = subprocess.run([sys.executable, "-m", "quadric_sheaves.cli", "chern",
                          "--presentation", wpath("max22_r2")], capture_output=True, text=True)
    assert res.stdout == '{"c1": [2, 2], "c2": 8, "r": 2}\n'
