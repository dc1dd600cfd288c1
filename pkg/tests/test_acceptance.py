"""One printed PASS/FAIL line per acceptance criterion, quick profile, exact equality."""

import pytest

from hankel_lab.acceptance import CRITERIA, run_criterion
from hankel_lab.checks import first_failure


@pytest.mark.parametrize("k", sorted(CRITERIA))
def test_criterion(k, capsys):
    checks = run_criterion(k, "quick")
    bad = first_failure(checks)
    status = "PASS" if checks and bad is None else "FAIL"
    line = f"criterion {k:2d} {status}: {CRITERIA[k]} ({len(checks)} checks)"
    if bad is not None:
        line += f"; first mismatch {bad.label}: {bad.lhs} != {bad.rhs}"
    with capsys.disabled():
        print("\n" + line)
    assert checks
    assert bad is None, line
