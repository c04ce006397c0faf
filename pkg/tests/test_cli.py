import io
import json
import math
import subprocess
import sys

import pytest

from trigpow import families
from trigpow.cli import main, parse_point
from trigpow.exactpoly import NPoly
from trigpow.families import PolySequenceCache


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def run_usage(*argv):
    """argparse errors raise SystemExit; return the exit status."""
    with pytest.raises(SystemExit) as info:
        main(list(argv), out=io.StringIO(), err=io.StringIO())
    return info.value.code


def test_poly_sin_k4():
    code, out, err = run("poly", "--family", "sin", "--k", "4", "--form", "final", "--format", "text")
    assert code == 0 and err == ""
    assert out.strip() == "sin^(n-4)(x) [n^4 sin^4(x) + (-2 n^4 + 6 n^3 - 8 n^2 + 4 n) sin^2(x) + (n^4 - 6 n^3 + 11 n^2 - 6 n)]"


def test_poly_cos_k0():
    code, out, _ = run("poly", "--family", "cos", "--k", "0", "--form", "intermediate")
    assert code == 0
    assert out.strip().endswith("[1]")


def test_poly_cosh_json():
    code, out, _ = run("poly", "--family", "cosh", "--k", "3", "--form", "final", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert [t["power"] for t in obj["terms"]] == [2, 0]
    assert obj["terms"][1]["coeff_n"] == ["0", "-2", "3", "-1"]
    assert obj["cofactor"] is True


def test_poly_no_factor_and_latex():
    _, out, _ = run("poly", "--family", "sin", "--k", "2", "--no-factor")
    assert out.strip() == "sin^(n-2)(x) [-n^2 sin^2(x) + (n^2 - n)]"
    _, out, _ = run("poly", "--family", "sin", "--k", "2", "--format", "latex")
    assert out.startswith(r"-\sin^{n-2}(x) \bigl[")


def test_eval_all_paths():
    code, out, err = run("eval", "--family", "sin", "--n", "1", "--k", "2", "--x", "0.7", "--method", "all")
    assert code == 0 and err == ""
    obj = json.loads(out)
    assert set(obj["values"]) == {"final", "intermediate", "binomial", "fd"}
    for re_, _im in obj["values"].values():
        assert re_ == pytest.approx(-math.sin(0.7), rel=1e-5)
    assert obj["max_deviation"] < 1e-9
    assert obj["fd_deviation"] < 1e-5


def test_eval_pole_exit_1():
    code, out, err = run("eval", "--family", "sin", "--n", "-1", "--k", "1", "--x", "0", "--method", "final")
    assert code == 1
    assert out == ""
    assert "PoleAtEvaluationPoint" in err


def test_eval_real_exponent():
    code, out, _ = run("eval", "--family", "cosh", "--n", "2.5", "--k", "1", "--x", "0.4", "--method", "final")
    assert code == 0
    want = 2.5 * math.cosh(0.4) ** 1.5 * math.sinh(0.4)
    assert json.loads(out)["values"]["final"][0] == pytest.approx(want, rel=1e-14)


def test_eval_all_skips_inapplicable_paths():
    code, out, _ = run("eval", "--family", "cosh", "--n", "2.5", "--k", "1", "--x", "0.4")
    assert code == 0
    obj = json.loads(out)
    assert "binomial" in obj["skipped"]
    code, out, _ = run("eval", "--family", "sin", "--n", "3", "--k", "2", "--x", "0.3,0.4")
    assert code == 0
    assert "fd" in json.loads(out)["skipped"]


def test_eval_explicit_method_errors():
    code, _, err = run("eval", "--family", "sin", "--n", "-1", "--k", "1", "--x", "0.3", "--method", "binomial")
    assert code == 1 and "NegativeExponentUnsupported" in err
    code, _, err = run("eval", "--family", "sin", "--n", "2", "--k", "7", "--x", "0.3", "--method", "fd")
    assert code == 1


def test_parse_point():
    assert parse_point("0.5") == 0.5
    assert parse_point("1,-2") == complex(1, -2)
    assert parse_point("1,0") == 1.0


def test_usage_errors_exit_2():
    assert run_usage("poly", "--family", "tan", "--k", "1") == 2
    assert run_usage("poly", "--family", "sin", "--k", "-1") == 2
    assert run_usage("poly", "--family", "sin", "--k", "65") == 2
    assert run_usage("eval", "--family", "sin", "--n", "x", "--k", "1", "--x", "0") == 2
    assert run_usage("eval", "--family", "sin", "--n", "1", "--k", "1", "--x", "a,b,c") == 2
    assert run_usage("triangle", "--rows", "0") == 2
    assert run_usage("triangle", "--rows", "3", "--format", "xml") == 2
    assert run_usage() == 2


def test_large_k_override():
    code, out, _ = run("poly", "--family", "sinh", "--k", "66", "--allow-large-k")
    assert code == 0 and out.startswith("sinh^(n-66)(x)")


def test_triangle_rows():
    code, out, _ = run("triangle", "--rows", "6")
    assert code == 0
    assert out.splitlines()[-1].split()[:2] == ["6", "[6,"]
    assert "[6, 15, 40, 60, 48, 16]" in out.splitlines()[-1]
    code, out, _ = run("triangle", "--rows", "1", "--format", "json")
    assert code == 0
    assert json.loads(out)[0]["product"] == [1]


def test_triangle_row4_note():
    code, out, _ = run("triangle", "--rows", "4")
    assert code == 0
    last = out.splitlines()[-1]
    assert "[4, 6, 8, 4]" in last
    assert "reference table shows [4, 6, 8, 2]" in last
    _, out, _ = run("triangle", "--rows", "4", "--format", "json")
    row4 = json.loads(out)[3]
    assert row4["reference_match"] is False and row4["match"] is True


def test_check_small_and_default():
    code, out, err = run("check", "--max-k", "2", "--max-n", "1")
    assert code == 0 and err == ""
    assert out.strip().endswith("all checks passed")
    code, out, _ = run("check", "--max-k", "12", "--max-n", "8")
    assert code == 0
    assert all(line.startswith(("PASS", "NOTE", "all")) for line in out.splitlines())


def test_check_is_deterministic():
    a = run("check", "--max-k", "5", "--max-n", "4")
    b = run("check", "--max-k", "5", "--max-n", "4")
    assert a == b
    c = run("check", "--max-k", "5", "--max-n", "4", "--seed", "11")
    d = run("check", "--max-k", "5", "--max-n", "4", "--seed", "11")
    assert c == d


def test_check_detects_corrupted_cache(monkeypatch):
    bad = PolySequenceCache()
    bad.get("f", 6)
    # perturb one coefficient of f_3
    poly = bad._seqs["f"][3]
    terms = dict(poly.terms)
    terms[1] = terms[1] + NPoly.constant(1)
    bad._seqs["f"][3] = type(poly)(terms)
    monkeypatch.setattr(families, "default_cache", bad)
    code, out, err = run("check", "--max-k", "6", "--max-n", "4")
    assert code == 1
    assert "checks FAILED" in out
    assert err.startswith("FAIL ")


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "trigpow", "poly", "--family", "sin", "--k", "1"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.strip() == "sin^(n-1)(x) cos(x) [n]"
