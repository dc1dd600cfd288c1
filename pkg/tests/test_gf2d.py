from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hankel_lab.checks import all_ok, first_failure
from hankel_lab.gf2d import (IDENTITY_NAMES, CoeffGrid, binomial_grid, grid_det, sample_series, theorem_checks,
                             verify_identity)
from hankel_lab.series import TruncatedSeries

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
unit_series = st.lists(rationals, min_size=10, max_size=10).map(lambda cs: TruncatedSeries([1, *cs]))
nonzero_c = rationals.filter(lambda c: c not in (0, 1))


@pytest.mark.parametrize("name", IDENTITY_NAMES)
def test_identity_holds(name):
    checks = verify_identity(name, 5)
    assert checks
    assert first_failure(checks) is None


@pytest.mark.parametrize("u", [Fraction(1), Fraction(3), Fraction(1, 2), Fraction(-2), Fraction(7, 2)])
def test_err_and_sdet_for_several_u(u):
    assert all_ok(verify_identity("err", 6, (u,)))
    assert all_ok(verify_identity("sdet", 6, (u,)))


@pytest.mark.parametrize("r", range(5))
def test_general_r_kernel(r):
    assert all_ok(verify_identity("gen_det", 6, (r,)))


def test_binomial_grid_entries():
    grid = binomial_grid(0, 4)
    assert grid[0, 0] == 1
    assert grid.nx == grid.ny == 4


def test_grid_det_of_identity():
    eye = CoeffGrid.from_function(lambda i, j: int(i == j), 4)
    assert grid_det(eye, 4) == 1


def test_hn1a_rejects_c_equal_one():
    with pytest.raises(ValueError):
        theorem_checks("hn1a", sample_series(1, 8)[0], 1, 3)


def test_transforms_need_unit_constant():
    with pytest.raises(ValueError):
        theorem_checks("tsame", TruncatedSeries([2, 1, 1, 1, 1, 1, 1, 1]), 2, 2)


def test_samples_are_deterministic():
    assert sample_series(3, 6, seed=5) == sample_series(3, 6, seed=5)


def test_unknown_identity():
    with pytest.raises(ValueError):
        verify_identity("nope", 3)


@given(unit_series, nonzero_c)
def test_tsame_property(a, c):
    assert all_ok(theorem_checks("tsame", a, c, 4))


@given(unit_series, nonzero_c)
def test_tsame1_property(a, c):
    assert all_ok(theorem_checks("tsame1", a, c, 4))


@given(unit_series, nonzero_c)
def test_hn1a_property(a, c):
    assert all_ok(theorem_checks("hn1a", a, c, 4))


@given(st.lists(rationals, min_size=9, max_size=9))
def test_transpose_keeps_det(vals):
    grid = CoeffGrid([vals[0:3], vals[3:6], vals[6:9]])
    assert grid.det(3) == grid.transpose().det(3)
