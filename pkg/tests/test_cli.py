import json

import pytest

from ASAI_MODL.cli.main import EXIT_INVALID, EXIT_OK, EXIT_ORACLE, EXIT_USAGE, main
from ASAI_MODL.cli.params import parse_int_list
from ASAI_MODL.cli.render import render_json, render_table, to_jsonable
from ASAI_MODL.cli.scan import ROW_COLUMNS

DATUM = ["--qo", "3", "--n", "3", "--e-ffo", "1", "--e", "1", "--f", "1", "--e-sigma", "1"]


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


def test_parse_int_list():
    assert parse_int_list("3..9") == [3, 4, 5, 6, 7, 8, 9]
    assert parse_int_list("7,3,5,3") == [3, 5, 7]
    assert parse_int_list("1..2,5") == [1, 2, 5]
    assert parse_int_list("") == []


def test_json_rendering_is_canonical():
    payload = {"b": 2 ** 60, "a": [True, None, 3], "c": {"z": 1, "y": 2}}
    text = render_json(payload)
    assert json.loads(text)["b"] == str(2 ** 60)
    assert text.index('"a"') < text.index('"b"') < text.index('"c"')
    assert render_json(json.loads(text)) == text
    assert to_jsonable(2 ** 53) == 2 ** 53


def test_table_rendering():
    rows = [{"x": 1, "y": True, "z": None}, {"x": 2, "y": False, "z": [1, 2]}]
    assert render_table(rows, ["x", "y", "z"], "csv") == 'x,y,z\n1,true,\n2,false,"[1,2]"\n'
    md = render_table(rows, ["x", "y"], "md")
    assert md.splitlines()[:3] == ["| x | y |", "|---|---|", "| 1 | true |"]


def test_invariants_relatively_banal(capsys):
    code, out = run_json(capsys, "invariants", *DATUM, "--ell", "7", "--distinguished")
    assert code == EXIT_OK
    assert out["rel_banal"] is True
    assert out["xo_char0"] == 3
    assert sorted(out) == sorted(["e_o", "N", "q_pow", "q_Eo", "banal", "rel_banal",
                                  "xo_char0", "xo_modell", "xo_kernel"])


def test_invariants_not_relatively_banal(capsys):
    code, out = run_json(capsys, "invariants", *DATUM, "--ell", "13", "--distinguished")
    assert code == EXIT_OK
    assert out["rel_banal"] is False


def test_invariants_default_not_distinguished(capsys):
    code, out = run_json(capsys, "invariants", *DATUM, "--ell", "7")
    assert code == EXIT_OK
    assert out["rel_banal"] is None


def test_invariants_violation(capsys):
    argv = ["--qo", "3", "--n", "3", "--e-ffo", "1", "--e", "1", "--f", "1", "--e-sigma", "2"]
    code, out = run_json(capsys, "invariants", *argv, "--ell", "7", "--distinguished")
    assert code == EXIT_INVALID
    assert "ramified-base" in [v["tag"] for v in out["violations"]]


def test_malformed_flags(capsys):
    assert main(["invariants", "--qo", "three", "--n", "3", "--ell", "7"]) == EXIT_USAGE
    assert main(["invariants", "--n", "3", "--ell", "7"]) == EXIT_USAGE
    assert main(["nonsense"]) == EXIT_USAGE
    assert main(["invariants", *DATUM, "--ell", "7", "--distinguished", "--twist", "2", "1"]) == EXIT_USAGE


@pytest.mark.parametrize("order", ["0", "-3"])
def test_twist_order_must_be_positive(capsys, order):
    assert main(["lfactor", *DATUM, "--twist", order, "1", "--char", "0"]) == EXIT_USAGE
    captured = capsys.readouterr()
    assert "--twist ORDER must be >= 1" in captured.err
    assert "Traceback" not in captured.err


def test_lfactor(capsys):
    code, out = run_json(capsys, "lfactor", *DATUM, "--distinguished", "--char", "7")
    assert code == EXIT_OK
    assert out["factor"] == "1/(1 - X^3)"
    assert out["pole_order"] == 1
    assert out["rel_banal"] is True
    assert out["period_vanishing_primes"] == [2, 13]

    code, out = run_json(capsys, "lfactor", *DATUM, "--distinguished", "--char", "13")
    assert out["factor"] == "1"
    assert out["pole_order"] == 0

    code, out = run_json(capsys, "lfactor", *DATUM, "--distinguished", "--char", "0")
    assert out["factor"] == "1/(1 - X^3)"
    assert out["characteristic"] == 0


def test_lfactor_pole_order_ell_power(capsys):
    argv = ["--qo", "5", "--n", "6", "--e-ffo", "2", "--e", "1", "--f", "2", "--e-sigma", "1"]
    code, out = run_json(capsys, "lfactor", *argv, "--distinguished", "--char", "3")
    assert code == EXIT_OK
    assert out["pole_order"] == 3


def test_lfactor_twist(capsys):
    code, out = run_json(capsys, "lfactor", *DATUM, "--twist", "2", "1", "--char", "0")
    assert code == EXIT_OK
    assert out["factor"] == "1/(1 - zeta(2,1) X^3)"
    assert out["pole_order"] == 0


def test_lifts_minus_case(capsys):
    code, out = run_json(capsys, "lifts", "--qo", "3", "--n", "3", "--ell", "7", "--theta", "26", "--dual", "sigma")
    assert code == EXIT_OK
    assert (out["total"], out["dual_count"], out["case_tag"]) == (2, 2, "MinusCase")
    assert out["representatives"] == [26, 130]
    assert (out["a_r"], out["a_s"]) == (546, 208)
    assert out["supercuspidal_reduction"] is False
    assert out["closed_form_dual"] == 2


def test_lifts_supercuspidal_minus_case(capsys):
    code, out = run_json(capsys, "lifts", "--qo", "5", "--n", "3", "--ell", "7", "--theta", "868", "--dual", "sigma")
    assert code == EXIT_OK
    assert (out["total"], out["dual_count"], out["case_tag"]) == (7, 7, "MinusCase")


def test_lifts_plus_case(capsys):
    code, out = run_json(capsys, "lifts", "--qo", "3", "--n", "3", "--ell", "13", "--theta", "26", "--dual", "sigma")
    assert code == EXIT_OK
    assert (out["total"], out["dual_count"], out["case_tag"]) == (13, 1, "PlusCase")


def test_lifts_self_dual(capsys):
    code, out = run_json(capsys, "lifts", "--q", "3", "--n", "1", "--ell", "2", "--theta", "0", "--dual", "self")
    assert code == EXIT_OK
    assert (out["total"], out["dual_count"], out["case_tag"]) == (2, 2, "EllTwo")


def test_lifts_errors(capsys):
    argv = ["lifts", "--qo", "3", "--n", "3", "--ell", "7", "--dual", "sigma"]
    assert main(argv + ["--theta", "0"]) == EXIT_INVALID
    assert main(["lifts", "--q", "3", "--n", "3", "--ell", "7", "--theta", "1", "--dual", "sigma"]) == EXIT_USAGE
    assert main(argv + ["--theta", "26", "--max-modulus", "100"]) == EXIT_INVALID


def test_scan_rows_and_rejects(capsys):
    code, out = run_json(capsys, "scan", "--qo-range", "3", "--n-range", "1..4", "--ell-set", "3,7,13",
                         "--format", "json", "--no-progress")
    assert code == EXIT_OK
    unramified = {r["ell"]: r for r in out["rows"]
                  if (r["q_o"], r["n"], r["e_ffo"], r["e_ef"], r["f_ef"], r["e_sigma"]) == (3, 3, 1, 1, 1, 1)}
    assert unramified[7]["rel_banal"] is True and unramified[7]["xo_char0"] == 3
    assert unramified[13]["rel_banal"] is False
    assert 3 not in unramified

    rows = [tuple(r[c] for c in ROW_COLUMNS[:8]) for r in out["rows"]]
    assert rows == sorted(rows, key=lambda r: (r[:6], not r[6], r[7]))
    odd_m = [r for r in out["rejects"] if r["e_sigma"] == 2 and r["n"] == 3 and r["e_ef"] * r["f_ef"] == 1]
    assert odd_m and all("odd-m-never-distinguished" in r["tags"].split(";") for r in odd_m)
    assert not any(r["e_sigma"] == 2 and r["n"] == 3 and r["e_ef"] * r["f_ef"] == 1 for r in out["rows"])


def test_scan_csv_default(capsys):
    code, out = run(capsys, "scan", "--qo-range", "3,5", "--n-range", "1..2", "--ell-set", "7", "--no-progress")
    assert code == EXIT_OK
    assert out.splitlines()[1] == ",".join(ROW_COLUMNS)
    assert "# rejects" in out


def test_scan_markdown(capsys):
    code, out = run(capsys, "scan", "--qo-range", "3", "--n-range", "1", "--ell-set", "7", "--format", "md",
                    "--no-progress")
    assert code == EXIT_OK
    assert "| q_o | n |" in out


@pytest.mark.parametrize("flags", [
    ["--qo-range", "3", "--n-range", "1..4", "--ell-set", ""],
    ["--qo-range", "3", "--n-range", "1..4", "--ell-set", "4,6"],
    ["--qo-range", "4,6", "--n-range", "1..4", "--ell-set", "7"],
    ["--qo-range", "3", "--n-range", "1..4", "--ell-set", "x"],
])
def test_scan_empty_ranges(capsys, flags):
    assert main(["scan", *flags, "--no-progress"]) == EXIT_USAGE


def test_output_file(capsys, tmp_path):
    target = tmp_path / "inv.json"
    code = main(["invariants", *DATUM, "--ell", "7", "--distinguished", "--output", str(target)])
    assert code == EXIT_OK
    assert capsys.readouterr().out == ""
    assert json.loads(target.read_text())["N"] == 3


def test_text_format(capsys):
    code, out = run(capsys, "invariants", *DATUM, "--ell", "7", "--distinguished", "--format", "text")
    assert code == EXIT_OK
    assert "rel_banal: true" in out.splitlines()


def test_verify_skips_small_modulus(capsys):
    code, out = run_json(capsys, "verify", "--suite", "quick", "--max-modulus", "100", "--no-progress")
    assert code == EXIT_OK
    assert out["passed"] is True
    assert out["skipped"] > 0


def test_verify_self_test_fails(capsys):
    code, out = run_json(capsys, "verify", "--suite", "quick", "--self-test", "--no-progress")
    assert code == EXIT_ORACLE
    assert out["failure_count"] > 0
    tags = {f["tag"] for r in out["reports"] for f in r["failures"]}
    assert "closed-form-dual" in tags
