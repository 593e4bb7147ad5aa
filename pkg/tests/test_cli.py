import json
import subprocess
import sys

import pytest

from zpmcyclic.cli import TABLE_COLUMNS, compute_table, main, paper_diff


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


# ---- factor ---------------------------------------------------------------


def test_factor_shifted(capsys):
    code, out, _ = run(capsys, "factor", "--p", "2", "--m", "3", "--n", "7", "--modulus", "shifted")
    assert code == 0
    first, second = out.splitlines()
    assert first == "x+1; x^3+5x^2+2x+1; x^3+2x^2+5x+1; gamma=1 delta=1"
    assert second == "pairing=0,2,1"


def test_factor_standard_mod_2(capsys):
    code, out, _ = run(capsys, "factor", "--p", "2", "--m", "1", "--n", "7", "--modulus", "standard")
    assert code == 0
    assert out.startswith("x+1; x^3+x^2+1; x^3+x+1;")


def test_factor_json(capsys):
    code, out, _ = run(capsys, "factor", "--p", "2", "--m", "3", "--n", "7", "--format", "json")
    doc = json.loads(out)
    assert code == 0
    assert doc["factors"] == [[1, 1], [1, 2, 5, 1], [1, 5, 2, 1]]
    assert doc["modulus_kind"] == "shifted"


@pytest.mark.parametrize(
    "argv,message",
    [
        (["factor", "--p", "4", "--m", "1", "--n", "3"], "p must be prime"),
        (["factor", "--p", "2", "--m", "1", "--n", "8"], "odd"),
        (["factor", "--p", "3", "--m", "1", "--n", "9"], "gcd"),
    ],
)
def test_factor_invalid(capsys, argv, message):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert out == ""
    assert message in err


# ---- counts and table -----------------------------------------------------


@pytest.mark.parametrize(
    "p,m,n,row",
    [
        (2, 3, 7, "7,1,1,8,12,4,0"),
        (2, 3, 31, "31,1,3,128,1872,64,0"),
        (2, 2, 7, "7,1,1,8,4,3,3"),
    ],
)
def test_counts_rows(capsys, p, m, n, row):
    code, out, _ = run(capsys, "counts", "--p", str(p), "--m", str(m), "--n", str(n))
    assert code == 0
    assert out.splitlines() == [",".join(TABLE_COLUMNS), row]


def test_counts_json(capsys):
    _, out, _ = run(capsys, "counts", "--p", "2", "--m", "3", "--n", "7", "--format", "json")
    assert json.loads(out) == {
        "n": 7,
        "gamma": 1,
        "delta": 1,
        "N_t": 8,
        "N_n": 12,
        "N_sd_formula": 4,
        "N_sd_actual": 0,
    }


def test_table_first_rows(capsys):
    code, out, _ = run(capsys, "table", "--p", "2", "--m", "3", "--n-max", "9")
    lines = out.splitlines()
    assert code == 0
    assert [int(r.split(",")[0]) for r in lines[1:]] == [1, 3, 5, 7, 9]
    assert lines[4] == "7,1,1,8,12,4,0"


def test_table_empty(capsys):
    assert run(capsys, "table", "--p", "2", "--m", "3", "--n-max", "0") == (0, "", "")


def test_table_parallel_output_identical(capsys):
    _, serial, _ = run(capsys, "table", "--p", "2", "--m", "3", "--n-max", "45", "--diff-paper")
    _, parallel, _ = run(capsys, "table", "--p", "2", "--m", "3", "--n-max", "45", "--diff-paper", "--jobs", "3")
    assert serial == parallel
    assert compute_table(3, 2, 25) == compute_table(3, 2, 25, jobs=2)


def test_table_skips_lengths_sharing_p(capsys):
    _, out, _ = run(capsys, "table", "--p", "3", "--m", "2", "--n-max", "15")
    assert [int(r.split(",")[0]) for r in out.splitlines()[1:]] == [1, 5, 7, 11, 13]


def test_diff_paper_requires_z8(capsys):
    code, _, err = run(capsys, "table", "--p", "3", "--m", "2", "--n-max", "9", "--diff-paper")
    assert code == 2 and "--diff-paper" in err


def test_paper_diff_helper():
    assert paper_diff((7, 1, 1, 8, 12, 4, 0)) == []
    assert paper_diff((27, 4, 0, 16, 0, 1, 0)) == ["gamma"]


def test_table_json_diff(capsys):
    _, out, _ = run(capsys, "table", "--p", "2", "--m", "3", "--n-max", "27", "--diff-paper", "--format", "json")
    docs = json.loads(out)
    flagged = {d["n"]: d["paper_diff"] for d in docs if d["paper_diff"]}
    assert flagged == {27: ["gamma"]}


# ---- enumerate and code ---------------------------------------------------


def test_enumerate_so(capsys):
    code, out, _ = run(capsys, "enumerate", "--p", "2", "--m", "3", "--n", "7", "--filter", "so")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 20
    assert "(2,2,2) 4" in lines and "(3,2,2) 4x+4" in lines
    assert lines == sorted(lines)


@pytest.mark.parametrize("m,count", [(2, 3), (3, 0)])
def test_enumerate_self_dual(capsys, m, count):
    code, out, _ = run(capsys, "enumerate", "--p", "2", "--m", str(m), "--n", "7", "--filter", "sd")
    assert code == 0
    assert len(out.splitlines()) == count


def test_enumerate_reduced_and_limit(capsys):
    _, out, _ = run(capsys, "enumerate", "--p", "2", "--m", "3", "--n", "7", "--filter", "so", "--reduced", "--limit", "5")
    lines = out.splitlines()
    assert len(lines) == 5
    assert all("x^7" not in line for line in lines)


def test_enumerate_json(capsys):
    _, out, _ = run(capsys, "enumerate", "--p", "2", "--m", "2", "--n", "7", "--filter", "sd", "--format", "json")
    docs = json.loads(out)
    assert [d["exponents"] for d in docs] == [[1, 0, 2], [1, 1, 1], [1, 2, 0]]


def test_enumerate_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("ZPMCYCLIC_BUDGET", "10")
    code, _, err = run(capsys, "enumerate", "--p", "2", "--m", "3", "--n", "7")
    assert code == 3 and "budget" in err


def test_code_command(capsys):
    code, out, _ = run(capsys, "code", "--p", "2", "--m", "2", "--n", "7", "--profile", "1,0,2", "--type")
    assert code == 0
    assert "self_dual: True" in out and "type: type_I" in out


def test_code_command_bad_profile(capsys):
    assert run(capsys, "code", "--p", "2", "--m", "3", "--n", "7", "--profile", "1,x")[0] == 2
    assert run(capsys, "code", "--p", "2", "--m", "3", "--n", "7", "--profile", "1,1")[0] == 2


# ---- verify ---------------------------------------------------------------


@pytest.mark.parametrize("m,n", [(3, 7), (2, 15)])
def test_verify_ok(capsys, m, n):
    code, out, _ = run(capsys, "verify", "--p", "2", "--m", str(m), "--n", str(n))
    assert code == 0 and out.startswith("ok ")


def test_verify_even_length(capsys):
    assert run(capsys, "verify", "--p", "2", "--m", "3", "--n", "2")[0] == 2


def test_verify_budget(capsys, monkeypatch):
    monkeypatch.setenv("ZPMCYCLIC_BUDGET", "5")
    assert run(capsys, "verify", "--p", "2", "--m", "3", "--n", "7")[0] == 3


def test_verify_failure_report(capsys, monkeypatch):
    from zpmcyclic import codes

    monkeypatch.setattr(codes, "is_self_orthogonal", lambda profile: False)
    code, out, _ = run(capsys, "verify", "--p", "2", "--m", "2", "--n", "7")
    doc = json.loads(out)
    assert code == 1
    assert doc["first_failure"]["check"] == "self_orthogonality"


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "zpmcyclic", "counts", "--p", "2", "--m", "3", "--n", "7"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert proc.stdout.splitlines()[1] == "7,1,1,8,12,4,0"
