import csv
import io
import json
import shutil

import pytest

from x0gonality.cli import TABLE_COLUMNS, run_command
from x0gonality.curve import fixture_dir


def run(*argv):
    out = io.StringIO()
    code = run_command(list(argv), out)
    return code, out.getvalue()


def test_invariants_json():
    code, out = run("invariants", "38", "--format", "json")
    assert code == 0
    assert json.loads(out)["genus"] == 4


def test_ogg_filter_tail():
    code, out = run("ogg-filter", "--d", "6", "--from", "336", "--to", "400")
    assert code == 0
    assert out.strip() == ", ".join(str(n) for n in range(336, 401))


def test_ogg_filter_bad_range():
    assert run("ogg-filter", "--d", "6", "--from", "10", "--to", "5")[0] == 1


def test_fp_gonality_x0_38():
    code, out = run("fp-gonality", "--curve", "X0(38)", "--p", "5", "--target", "4")
    assert code == 0
    assert out.splitlines()[0] == "proven_lower_bound 4"


def test_fp_gonality_budget_is_inconclusive():
    code, out = run("fp-gonality", "--curve", "X0(109)", "--p", "3", "--target", "5", "--max-divisors", "3")
    assert code == 2 and out.startswith("inconclusive")


def test_function_found_is_conclusive():
    code, out = run("find-function", "--curve", "X0(23)", "--p", "3", "--degree", "2", "--format", "json")
    assert code == 0 and json.loads(out)["claim"] == "function_found"


@pytest.mark.parametrize("argv", [
    ["fp-gonality", "--curve", "X0(999)", "--p", "5", "--target", "4"],
    ["fp-gonality", "--curve", "X0(38)", "--p", "4", "--target", "4"],
    ["fp-gonality", "--curve", "X0(38)", "--p", "2", "--target", "4"],
    ["fp-gonality", "--curve", "X0(38)", "--p", "5", "--target", "4", "--max-seconds", "-1"],
    ["sieve", "--curve", "X0(38)", "--d", "3", "--primes", "5"],
    ["frobnicate"],
])
def test_errors_exit_1(argv, capsys):
    assert run(*argv)[0] == 1


def test_deterministic_json_is_byte_identical():
    argv = ["find-function", "--curve", "X0(53)", "--p", "3", "--degree", "3", "--format", "json", "--deterministic"]
    a, b = run(*argv), run(*argv)
    assert a == b
    assert "elapsed" not in a[1]


def test_sieve_text():
    code, out = run("sieve", "--curve", "X0(97)", "--d", "5", "--primes", "3", "--deterministic")
    assert code == 0
    assert out.splitlines()[0] == "nonempty_with_witnesses"
    assert "images (0,)" in out


def test_sieve_workers_merge_in_prime_order():
    base = ["sieve", "--curve", "X0(97)", "--d", "5", "--primes", "5,3", "--format", "json", "--deterministic"]
    one = run(*base)
    two = run(*base, "--workers", "2")
    assert one == two
    rep = json.loads(one[1])
    assert sorted(rep["per_prime"]) == ["3", "5"] and rep["conclusion"] == "empty"


def test_bounds_table_layout():
    code, out = run("bounds", "--max-N", "40")
    assert code == 0
    header = out.splitlines()[0].split()
    assert tuple(header) == TABLE_COLUMNS
    row38 = next(line.split() for line in out.splitlines() if line.startswith("38 "))
    assert row38[:3] == ["38", "4", "4"]


def test_bounds_csv_and_json():
    code, out = run("bounds", "--max-N", "40", "--format", "csv")
    rows = list(csv.reader(io.StringIO(out)))
    assert tuple(rows[0]) == TABLE_COLUMNS and len(rows) == 41
    code, out = run("bounds", "--max-N", "40", "--format", "json", "--deterministic")
    rep = json.loads(out)
    r38 = next(r for r in rep["rows"] if r["N"] == 38)
    assert r38["Q"]["lb_provenance"]["source"] == "R3"
    assert r38["Q"]["lb_provenance"]["premises"]


def test_check_tables_exit_codes(tmp_path):
    code, out = run("check-tables", "--max-N", "120")
    assert code == 0 and "mismatch': 0" in out
    # N = 130 still has an open complex lower bound
    assert run("check-tables", "--max-N", "144")[0] == 2
    bad = tmp_path / "t.csv"
    bad.write_text("N,genus,gonQ_lb,gonQ_ub,gonC_lb,gonC_ub\n38,4,5,5,3,3\n")
    assert run("check-tables", "--expected", str(bad))[0] == 1


def test_fixture_env_override(tmp_path, monkeypatch):
    shutil.copy(fixture_dir() / "X0_23.json", tmp_path / "X0_23.json")
    monkeypatch.setenv("X0GONALITY_FIXTURES", str(tmp_path))
    assert run("find-function", "--curve", "X0(23)", "--p", "3", "--degree", "2")[0] == 0
    assert run("find-function", "--curve", "X0(38)", "--p", "3", "--degree", "2")[0] == 1
