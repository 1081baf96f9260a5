import csv
import io
import json
from fractions import Fraction

import pytest

from magicpos import cli
from magicpos import families as fam
from magicpos.parse import PolynomialSyntaxError, parse_polynomial, parse_rational
from magicpos.poly import Polynomial, binomial_poly

P = Polynomial
F = Fraction


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    return code, json.loads(out)


def frac(obj):
    return F(int(obj["num"]), int(obj["den"]))


# -- parsing -------------------------------------------------------------------


@pytest.mark.parametrize(
    "text, want",
    [
        ("binom(x+2,2)", binomial_poly(2, 2)),
        ("x^2 + x + 5/4", P([F(5, 4), 1, 1])),
        ("2*x**3 - (x+1)^2", P([-1, -2, -1, 2])),
        ("binom(2*x+1, 3)", binomial_poly(0, 3).shift(1).scale_arg(2)),
        ("-x/3", P([0, F(-1, 3)])),
        ("binom(5, 2)", P([10])),
        ("1", P([1])),
    ],
)
def test_parse_polynomial(text, want):
    assert parse_polynomial(text) == want


@pytest.mark.parametrize(
    "text", ["", "x^-1", "1/x", "binom(x^2, 2)", "y", "x^(1/2)", "import os", "2 +", "binom(x, 1/2)", "x/0"]
)
def test_parse_errors(text):
    with pytest.raises(PolynomialSyntaxError):
        parse_polynomial(text)


def test_parse_rational():
    assert parse_rational(" 3/4 ") == F(3, 4)
    with pytest.raises(PolynomialSyntaxError):
        parse_rational("abc")


# -- commands -----------------------------------------------------------------


def test_expand_binomial(capsys):
    code, doc = run_json(capsys, "expand", "--poly", "binom(x+2,2)", "--k", "2")
    assert code == 0
    assert [frac(c) for c in doc["result"]["coeffs"]] == [1, 1, 0]
    assert doc["result"]["positive"] is True


def test_expand_cross_not_positive(capsys):
    code, doc = run_json(capsys, "expand", "--family", "cross", "--d", "3", "--k", "1")
    assert code == 0 and doc["result"]["positive"] is False


def test_expand_constant(capsys):
    code, doc = run_json(capsys, "expand", "--poly", "1")
    assert [frac(c) for c in doc["result"]["coeffs"]] == [1]
    assert doc["result"]["positive"] is True


@pytest.mark.parametrize(
    "argv, want",
    [
        (("--family", "simplex", "--d", "7"), 7),
        (("--family", "reflexive-simplex", "--d", "5"), 20),
        (("--family", "multipartite", "--q", "1,2,5"), 5),
        (("--family", "minimal-matroid", "--k", "2", "--n", "6"), 4),
    ],
)
def test_mindex(capsys, argv, want):
    code, doc = run_json(capsys, "mindex", *argv)
    assert code == 0 and doc["result"]["m_index"] == want


def test_mindex_not_found_exit_three(capsys, monkeypatch):
    monkeypatch.setenv("EHRHART_SCAN_CAP", "20")
    code, doc = run_json(capsys, "mindex", "--poly", "x^2 + 1")
    assert code == 3
    assert doc["result"]["m_index"] == "NOT_FOUND"
    assert doc["warnings"]


def test_table_cross_csv(capsys):
    code, out, _ = run(capsys, "table", "--family", "cross", "--d", "1..16", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert code == 0
    assert [int(r["m_index"]) for r in rows] == [1, 1, 2, 4, 6, 10, 13, 18, 23, 29, 35, 42, 50, 59, 68, 78]


def test_table_multipartite(capsys):
    code, doc = run_json(capsys, "table", "--family", "multipartite")
    assert [r["m_index"] for r in doc["result"]["rows"]] == [2, 2, 4, 3, 4, 5, 5, 5]


def test_hstar_spiked(capsys):
    code, doc = run_json(capsys, "hstar", "--family", "spiked", "--q", "3", "--d", "4")
    assert code == 0
    assert [frac(h) for h in doc["result"]["hstar"]] == [1, 3, 3, 3, 3]
    assert doc["warnings"] == []


def test_hstar_warns_for_non_lattice_input(capsys):
    code, doc = run_json(capsys, "hstar", "--poly", "x + 1/2")
    assert code == 0 and doc["warnings"]


def test_realrooted(capsys):
    _, doc = run_json(capsys, "realrooted", "--poly", "x^2 + 1")
    assert doc["result"]["real_rooted"] is False
    _, doc = run_json(capsys, "realrooted", "--family", "cross", "--d", "4", "--numerator")
    assert doc["result"]["real_rooted"] is True


def test_cl_cross(capsys):
    code, doc = run_json(capsys, "cl", "--family", "cross", "--d", "5")
    assert code == 0
    assert doc["result"]["is_cl"] is True
    assert doc["result"]["m_index_bound"] >= 6


def test_cl_rejects_simplex(capsys):
    _, doc = run_json(capsys, "cl", "--family", "simplex", "--d", "2")
    assert doc["result"]["is_cl"] is False and doc["result"]["reason"]


def test_verify_pass(capsys):
    code, out, _ = run(
        capsys, "verify", "--family", "hypersimplex", "--k", "2", "--n", "4",
        "--dilation", "1", "--points", "2",
    )
    assert code == 0
    assert "| 1 | 2 | 19 | 19 | PASS |" in out


def test_verify_failure_exit_one(capsys, monkeypatch):
    real = fam.lattice_count

    def off_by_one(spec, dilation, n):
        r = real(spec, dilation, n)
        return fam.LatticePointCount(r.spec, r.dilation, r.n, r.count + 1)

    monkeypatch.setattr(fam, "lattice_count", off_by_one)
    code, out, _ = run(capsys, "verify", "--family", "simplex", "--d", "2", "--points", "1..2")
    assert code == 1 and "FAIL" in out


def test_conjecture(capsys):
    code, doc = run_json(capsys, "conjecture", "--which", "minimal-matroid", "--n", "5..6")
    rows = {(r["k"], r["n"]): r for r in doc["result"]["rows"]}
    assert rows[1, 5]["computed"] == 4 and rows[1, 5]["status"] == "match"
    assert rows[2, 6]["computed"] == 4


# -- errors and output ---------------------------------------------------------


def test_parse_error_exit_two(capsys):
    code, _, err = run(capsys, "expand", "--poly", "x^")
    assert code == 2 and "error" in err


def test_usage_error_exit_two(capsys):
    code, _, _ = run(capsys, "table", "--family", "cross")
    assert code == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["nonsense"])
    assert exc.value.code == 2


def test_domain_error_exit_three(capsys):
    code, _, err = run(capsys, "expand", "--poly", "0")
    assert code == 3 and err
    code, _, _ = run(capsys, "mindex", "--family", "minimal-matroid", "--k", "4", "--n", "4")
    assert code == 3


def test_json_is_deterministic(capsys):
    argv = ("cl", "--family", "reflexive-simplex", "--d", "4", "--format", "json")
    _, a, _ = run(capsys, *argv)
    _, b, _ = run(capsys, *argv)
    assert a == b
    assert a.rstrip("\n") == json.dumps(json.loads(a), sort_keys=True, indent=2)


def test_approx_adds_floats(capsys):
    _, doc = run_json(capsys, "expand", "--poly", "binom(x+2,2)", "--approx")
    c = doc["result"]["coeffs"][1]
    assert frac(c) == F(-1, 2) and c["approx"] == -0.5
    _, doc = run_json(capsys, "expand", "--poly", "binom(x+2,2)")
    assert "approx" not in doc["result"]["coeffs"][1]


def test_out_file(tmp_path, capsys):
    target = tmp_path / "r.json"
    code, out, _ = run(capsys, "mindex", "--family", "simplex", "--d", "3", "--format", "json", "--out", str(target))
    assert code == 0 and out == ""
    assert json.loads(target.read_text())["result"]["m_index"] == 3


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run(
        [sys.executable, "-m", "magicpos", "mindex", "--family", "simplex", "--d", "4"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and "m_index: 4" in proc.stdout
