import io
import json
from pathlib import Path

import pytest

from semiconj.cli import run
from semiconj.core import EqPartition, parse_table

GOLDEN = Path(__file__).parent / "golden"

CASES = {
    "conjugacy_F7_542155": ["conjugacy", "--fixture", "F7_542155"],
    "conjugacy_F7_542155_c": ["conjugacy", "--fixture", "F7_542155", "--relation", "c"],
    "conjugacy_F6_E2A": ["conjugacy", "--fixture", "F6_E2A"],
    "green_F4_22": ["green", "--fixture", "F4_22"],
    "epigroup_F6_STRONGC": ["epigroup", "--fixture", "F6_STRONGC"],
    "validate_F5_110": ["validate", "--fixture", "F5_110"],
    "variant_F6_414_S": ["variant", "--fixture", "F6_414_S", "--at", "1"],
    "suite_F4_56": ["suite", "--fixture", "F4_56"],
    "enumerate_3_monoid_zero": ["enumerate", "--order", "3", "--monoid", "--zero-divisors"],
    "pinj_decompose": ["pinj", "decompose", "9; 2 5 - 4 8 7 - 1 -"],
    "symbolic_gamma": ["symbolic", "gamma", "cycles{} chains{} omega=w upsilon=1 lambda=0",
                       "cycles{} chains{} omega=w upsilon=0 lambda=0"],
}


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("name", sorted(CASES))
def test_golden(name):
    code, out, _ = call(CASES[name])
    assert code == 0
    assert out == (GOLDEN / f"{name}.txt").read_text()


def test_json_round_trips():
    code, out, _ = call(["--json", "conjugacy", "--fixture", "F7_542155"])
    doc = json.loads(out)
    assert code == 0
    assert str(EqPartition(7, doc["c"])) == "{0,1,2,3,6} {4} {5}"
    code, out, _ = call(["--json", "construct", "rectangular", "--size", "2", "--size2", "3"])
    S = parse_table(out)
    assert S.n == 6


def test_file_input(tmp_path):
    good = tmp_path / "good.tbl"
    good.write_text("# left zero\n2\n0 0\n1 1\n")
    assert call(["validate", "--file", str(good)])[0] == 0
    bad = tmp_path / "bad.tbl"
    bad.write_text("2\n0 0\n1 0\n")
    code, _, err = call(["validate", "--file", str(bad)])
    assert code == 1 and "(1,0,1)" in err


def test_exit_codes():
    assert call(["conjugacy"])[0] == 2
    assert call(["nonsense"])[0] == 2
    assert call(["conjugacy", "--fixture", "F4_22", "--file", "x"])[0] == 2
    assert call(["conjugacy", "--fixture", "NOPE"])[0] == 2
    assert call(["validate", "--file", "/nonexistent/table"])[0] == 1
    assert call(["symbolic", "gamma", "cycles{} chains{1:1} omega=0 upsilon=0 lambda=0",
                 "cycles{} chains{} omega=0 upsilon=0 lambda=0"])[0] == 1
    assert call(["variant", "--fixture", "F4_22", "--at", "9"])[0] == 1


def test_table1_command_smallest_row():
    code, out, _ = call(["table1", "--max", "3", "--dedupe", "equivalence"])
    assert code == 0
    assert out.splitlines()[1] == "3 1 1 0 equivalence"
