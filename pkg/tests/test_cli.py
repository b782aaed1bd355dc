from __future__ import annotations

import json
import subprocess
import sys
from fractions import Fraction

import pytest

from hilbertsos import catalog
from hilbertsos.cli import main, parse_params, substitute_params
from hilbertsos.pointideal import DualWitness
from hilbertsos.polycore import dehomogenize, from_json_obj, parse_rational, to_json_obj, variables

ROBINSON_AFFINE = [[a, b] for a in (-1, 0, 1) for b in (-1, 0, 1) if (a, b) != (0, 0)]


def _run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def _write(path, obj):
    path.write_text(json.dumps(obj))
    return str(path)


@pytest.fixture
def robinson_files(tmp_path):
    pts = _write(tmp_path / "robinson.json", ROBINSON_AFFINE)
    R = _write(tmp_path / "R.json", to_json_obj(dehomogenize(catalog.form("R")), ["x", "y"]))
    return pts, R


def test_certify_not_sos_for_R(capsys, robinson_files):
    pts, R = robinson_files
    code, out = _run(capsys, "certify", "not-sos", "--poly", R, "--points", pts, "--degree", "3")
    assert code == 0
    report = json.loads(out)
    assert report["result"]["verified"] and report["result"]["kind"] == "exact"
    w = DualWitness.from_json_obj(report["result"])
    assert w.verify(dehomogenize(catalog.form("R")))


def test_certify_in_span_exits_nonzero(capsys, tmp_path, robinson_files):
    pts, _ = robinson_files
    X, Y = variables(2)
    f = _write(tmp_path / "f.json", to_json_obj((X**3 - X) ** 2 + (Y**3 - Y) ** 2, ["x", "y"]))
    code, out = _run(capsys, "certify", "not-sos", "--poly", f, "--points", pts, "--degree", "3")
    assert code == 1
    assert json.loads(out)["result"]["result"] == "in_span"


def test_catalog_verify_all(capsys):
    code, out = _run(capsys, "catalog", "verify", "--all")
    assert code == 0
    report = json.loads(out)
    assert report["passed"] and all(c["passed"] for c in report["identities"])


def test_audit_negative_witness_exits_one(capsys, tmp_path):
    Mt = _emit_symbolic(capsys, tmp_path, "M_t")
    code, out = _run(capsys, "audit", "--poly", Mt, "--param", "t2=3/5", "--samples", "200000")
    assert code == 1
    result = json.loads(out)["result"]
    assert result["kind"] == "audit" and "negative_witness" in result
    assert parse_rational(result["negative_witness"]["value"]) < 0


def _emit_symbolic(capsys, tmp_path, name):
    target = tmp_path / f"{name}_symbolic.json"
    code, _ = _run(capsys, "catalog", "show", "--name", name, "--symbolic", "--emit", str(target))
    assert code == 0
    return str(target)


def test_audit_by_name_passes_for_R(capsys):
    code, out = _run(capsys, "audit", "--name", "R", "--samples", "20000", "--format", "text")
    assert code == 0
    assert "non-rigorous" in out


def test_construct_robinson(capsys, robinson_files):
    pts, _ = robinson_files
    code, out = _run(capsys, "construct", "--points", pts, "--degree", "3", "--c", "1", "--samples", "20000")
    assert code == 0
    res = json.loads(out)["result"]
    assert res["c"] == "1/1"
    assert res["audit"]["advisory"] is True


def test_same_seed_same_report(capsys):
    a = _run(capsys, "audit", "--name", "S", "--samples", "10000", "--seed", "4")[1]
    b = _run(capsys, "audit", "--name", "S", "--samples", "10000", "--seed", "4")[1]
    assert a == b


def test_exact_certificate_is_seed_independent(capsys, robinson_files):
    pts, R = robinson_files
    a = _run(capsys, "certify", "not-sos", "--poly", R, "--points", pts, "--degree", "3", "--seed", "1")[1]
    b = _run(capsys, "certify", "not-sos", "--poly", R, "--points", pts, "--degree", "3", "--seed", "99")[1]
    assert a == b


def test_default_seed_is_zero(capsys):
    code, out = _run(capsys, "audit", "--name", "R", "--samples", "5000")
    assert json.loads(out)["result"]["seed"] == 0


def test_catalog_show_round_trip(capsys, tmp_path):
    target = tmp_path / "S.json"
    code, out = _run(capsys, "catalog", "show", "--name", "S", "--emit", str(target))
    assert code == 0
    p, _ = from_json_obj(json.loads(target.read_text()))
    assert p == catalog.form("S")
    q, _ = from_json_obj(json.loads(out)["result"])
    assert q == p


def test_catalog_zeros_and_list(capsys):
    code, out = _run(capsys, "catalog", "zeros", "--name", "R_t", "--param", "t=2")
    assert code == 0
    assert len(json.loads(out)["result"]["zeros"]) == 10
    code, out = _run(capsys, "catalog", "list")
    assert code == 0 and any(i["name"] == "motzkin" for i in json.loads(out)["result"])


def test_analysis_verbs(capsys):
    code, out = _run(capsys, "analysis", "sigma", "--c1", "1", "--c3", "0", "--digits", "6")
    assert code == 0
    lo, hi = (parse_rational(v) for v in json.loads(out)["result"]["sigma_interval"])
    assert Fraction(40696, 100000) < lo <= hi < Fraction(40697, 100000)
    code, out = _run(capsys, "analysis", "region", "--r", "1", "--s", "9/10")
    assert json.loads(out)["result"]["in_K"] is False
    code, out = _run(capsys, "analysis", "newton", "--name", "M")
    assert json.loads(out)["result"]["conclusive"] is True
    code, out = _run(capsys, "analysis", "triangle", "--r", "3", "--s", "1", "--t", "1")
    assert json.loads(out)["result"]["feasible"] is False
    code, out = _run(capsys, "analysis", "classify", "--c1", "0", "--c2", "0", "--c3", "0", "--c4", "1")
    assert json.loads(out)["result"]["label"] == "psd_not_sos"


def test_interp_verbs(capsys, tmp_path):
    code, out = _run(capsys, "interp", "biermann", "--r", "1", "--s", "1", "--d", "3")
    assert code == 0
    target = tmp_path / "g4.json"
    code, out = _run(capsys, "interp", "gondola", "--d", "4", "--c", "1/2", "--emit", str(target))
    assert code == 0
    assert json.loads(out)["result"]["c"] == "1/2"
    assert from_json_obj(json.loads(target.read_text()))[0].degree() == 8


def test_ideal_verbs(capsys, tmp_path):
    pts = _write(tmp_path / "r.json", ROBINSON_AFFINE)
    code, out = _run(capsys, "ideal", "basis", "--points", pts, "--degree", "3")
    assert json.loads(out)["result"]["basis"] and code == 0
    code, out = _run(capsys, "ideal", "geometry", "--points", pts)
    assert json.loads(out)["result"]["max_collinear"] == 3
    code, out = _run(capsys, "ideal", "forced", "--points", pts, "--degree", "3")
    assert json.loads(out)["result"]["affine"] == [["0/1", "0/1"]]


def test_bad_input_exits_two(capsys, tmp_path):
    code = main(["audit", "--poly", str(tmp_path / "missing.json")])
    assert code == 2
    code = main(["catalog", "show", "--name", "no_such_form"])
    assert code == 2


def test_parse_params():
    assert parse_params(["t=3/2", "c = 1"]) == {"t": Fraction(3, 2), "c": Fraction(1)}
    with pytest.raises(ValueError):
        parse_params(["t"])


def test_substitute_even_parameter():
    x, y, t = variables(3)
    p, names = substitute_params(x**2 * t**2 + y * t**4, ["x", "y", "t"], {"t2": Fraction(3)})
    X, Y = variables(2)
    assert p == 3 * X**2 + 9 * Y and names == ["x", "y"]
    with pytest.raises(ValueError):
        substitute_params(x * t, ["x", "y", "t"], {"t2": Fraction(3)})


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "hilbertsos", "analysis", "region", "--r", "1", "--s", "1",
                          "--format", "text"], capture_output=True, text=True, check=True)
    assert "is in K" in out.stdout
