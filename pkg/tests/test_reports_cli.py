import csv
import io
import json
from fractions import Fraction

import pytest

from hankel_lab.checks import Check
from hankel_lab.cli import main
from hankel_lab.exact_core import CapExceeded
from hankel_lab.reports import (CSV_HEADER, VerificationReport, exit_code, render, report_from_checks, run_target,
                                serialize)
from hankel_lab.series import build_series
from hankel_lab.targets import VERIFY_TARGETS, Options


def run(*argv):
    out = io.StringIO()
    code = main(list(argv), out)
    return code, out.getvalue()


def test_serialize_values():
    assert serialize(Fraction(-7, 2)) == "-7/2"
    assert serialize(True) == "true"
    assert serialize(build_series("g", (), 3)) == "1 1 3 12"
    assert serialize([Fraction(1, 3), 2]) == "1/3 2"


def test_report_status():
    ok = report_from_checks("t", {}, [Check("a", 1, 1)], 0.0)
    bad = report_from_checks("t", {}, [Check("a", 1, 1), Check("b", 1, 2)], 0.0)
    empty = report_from_checks("t", {}, [], 0.0)
    assert (ok.status, bad.status, empty.status) == ("pass", "fail", "skipped")
    assert (bad.lhs, bad.rhs) == ("1", "2")
    assert exit_code([ok, empty]) == 0
    assert exit_code([ok, bad]) == 1


def test_cap_becomes_skipped():
    def boom():
        raise CapExceeded("too big")
    assert run_target("t", {}, boom).status == "skipped"


def test_formats_carry_the_same_rows():
    reports = [VerificationReport("b", {"n": 2}, "pass", "1", "1", 1.5),
               VerificationReport("a", {"u": Fraction(1, 2)}, "fail", "1/3", "2", 0.5)]
    rows = [json.loads(line) for line in render(reports, "json").splitlines()]
    parsed = list(csv.DictReader(io.StringIO(render(reports, "csv"))))
    assert [r["target"] for r in rows] == ["a", "b"]
    assert tuple(parsed[0]) == CSV_HEADER
    for j, c in zip(rows, parsed):
        assert {k: str(v) for k, v in j.items()} == c
    with pytest.raises(ValueError):
        render(reports, "xml")


def test_table_u():
    assert run("table", "U", "--n", "7") == (0, "1 2 11 170 7429 920460 323801820\n")


def test_table_json_and_csv():
    code, out = run("table", "V", "--n", "3", "--format", "json")
    assert code == 0 and json.loads(out)["values"] == ["1", "3", "26"]
    code, out = run("table", "asm", "--n", "4", "--format", "csv")
    assert out.splitlines() == ["index,value", "0,1", "1,2", "2,7", "3,42"]


def test_verify_examples():
    code, out = run("verify", "unt", "--n", "4")
    assert code == 0 and out.startswith("PASS")
    code, out = run("verify", "err", "--u", "7/2", "--n", "4", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "pass"


def test_verify_over_cap_is_skipped():
    code, out = run("verify", "un", "--n", "9")
    assert code == 0 and out.startswith("SKIPPED")
    code, out = run("verify", "un", "--n", "9", "--max-n", "9", "--format", "csv")
    assert code == 0 and ",pass," in out


def test_usage_errors_exit_2():
    assert run("verify", "nope")[0] == 2
    assert run("table", "nope")[0] == 2
    assert run("paths", "count", "K")[0] == 2
    assert run("verify", "err", "--u", "abc")[0] == 2
    assert run()[0] == 2


def test_cfrac():
    assert run("cfrac", "catalan", "--depth", "4") == (0, "1 1 1 1\n")


def test_paths_commands():
    assert run("paths", "count", "K", "--params", "1,1,2") == (0, "3\n")
    assert run("paths", "count", "normal", "--start", "0,0", "--end", "2,2") == (0, "6\n")
    assert run("paths", "tuples", "UK", "--n", "2") == (0, "2\n")
    code, out = run("paths", "count", "N_slide", "--params", "1,1", "--format", "json")
    assert json.loads(out)["lhs"] == "7"


def test_all_exits_1_when_a_criterion_fails():
    code, out = run("all", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert [r["target"] for r in rows] == [f"criterion_{k:02d}" for k in range(1, 13)]
    assert code == (1 if any(r["status"] == "fail" for r in rows) else 0)


@pytest.mark.parametrize("name", sorted(VERIFY_TARGETS))
def test_every_verify_target_passes_by_default(name):
    report = run_target(name, {}, lambda: VERIFY_TARGETS[name](Options()))
    assert report.status == "pass", report.detail
