from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hankel_lab.checks import all_ok
from hankel_lab.exact_core import CapExceeded
from hankel_lab.reference import SEQUENCE_TABLE
from hankel_lab.series import (GAUSS_CASES, SERIES_FAMILIES, TruncatedSeries, build_series, gauss_case_check,
                               r_ary_coefficient, verify_series_identities)

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)


def series_strategy(order=6, unit=True):
    head = st.just(Fraction(1)) if unit else rationals
    return st.tuples(head, st.lists(rationals, min_size=order, max_size=order)).map(
        lambda p: TruncatedSeries([p[0], *p[1]]))


@pytest.mark.parametrize("letter", "abcde")
def test_sequences_match_printed(letter):
    got = build_series(f"seq_{letter}", (), 7)
    assert list(got.coeffs) == [Fraction(v) for v in SEQUENCE_TABLE[letter]]


def test_g_is_ternary_tree_numbers():
    assert list(build_series("g", (), 6).coeffs) == [1, 1, 3, 12, 55, 273, 1428]


def test_r_ary_coefficients():
    assert [r_ary_coefficient(1, n) for n in range(6)] == [1, 1, 2, 5, 14, 42]
    assert [r_ary_coefficient(2, n) for n in range(5)] == [1, 1, 3, 12, 55]


@pytest.mark.parametrize("family", SERIES_FAMILIES)
def test_series_families(family):
    assert all_ok(verify_series_identities(family, 20))


@pytest.mark.parametrize("tag", sorted(GAUSS_CASES))
def test_gauss_cases_to_order_24(tag):
    assert gauss_case_check(tag, 24).ok


def test_order_cap(monkeypatch):
    monkeypatch.setenv("HANKEL_LAB_MAX_ORDER", "10")
    with pytest.raises(CapExceeded):
        build_series("g", (), 11)


def test_unknown_series():
    with pytest.raises(ValueError):
        build_series("nope", (), 4)


def test_coefficient_past_order_raises():
    with pytest.raises(IndexError):
        build_series("g", (), 3)[4]


@given(series_strategy())
def test_inverse(a):
    assert a * a.inverse() == TruncatedSeries.constant(1, a.order)


@given(series_strategy(), series_strategy(unit=False), series_strategy(unit=False))
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(series_strategy(unit=False))
def test_mul_x_then_div_x(a):
    assert a.mul_x().div_x() == a.truncate(a.order - 1)
