from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hankel_lab.exact_core import (CapExceeded, as_rational, asm_count, binom, binom_det_rhs, closed_form, fmt,
                                   gbinom, m_value, max_order, pochhammer)
from hankel_lab.reference import ASM_VALUES, U_VALUES, V_VALUES
from hankel_lab.targets import binom_det_lhs


def test_typea_typeb_match_printed_values():
    assert [closed_form("typea", (n,)) for n in range(1, 8)] == [Fraction(v) for v in U_VALUES]
    assert [closed_form("typeb", (n,)) for n in range(1, 8)] == [Fraction(v) for v in V_VALUES]


def test_asm_counts():
    assert [asm_count(n) for n in range(1, 7)] == [Fraction(v) for v in ASM_VALUES]


def test_fmt_is_exact():
    assert fmt(Fraction(7, 2)) == "7/2"
    assert fmt(Fraction(-4, 2)) == "-2"
    assert fmt(3) == "3"


def test_as_rational_rejects_floats():
    with pytest.raises((TypeError, ValueError)):
        as_rational(0.5)


def test_binom_outside_range_is_zero():
    assert binom(3, 5) == 0
    assert binom(3, -1) == 0
    assert binom(6, 3) == 20


def test_gbinom_negative_top():
    # (-1 choose k) = (-1)^k
    assert [gbinom(-1, k) for k in range(5)] == [1, -1, 1, -1, 1]
    assert gbinom(Fraction(1, 2), 2) == Fraction(-1, 8)


def test_id1_id2_and_m_symmetry():
    assert closed_form("id1", (20,)) == 1
    assert closed_form("id2", (20,)) == 1
    assert all(closed_form("m_symm", (a, b)) == 1 for a in range(8) for b in range(8) if a + b >= 2)


def test_closed_form_errors():
    with pytest.raises(ValueError):
        closed_form("typea", (0,))
    with pytest.raises(ValueError):
        closed_form("nope", (1,))


def test_binom_det_small_instances():
    for a in range(2, 6):
        for ls in [(0,), (3,), (2, 0), (4, 1), (3, 2, 0)]:
            assert binom_det_lhs(a, ls) == binom_det_rhs(a, ls)
    with pytest.raises(ValueError):
        binom_det_rhs(0, (2, 1))


def test_max_order_env(monkeypatch):
    monkeypatch.setenv("HANKEL_LAB_MAX_ORDER", "12")
    assert max_order() == 12
    monkeypatch.setenv("HANKEL_LAB_MAX_ORDER", "x")
    with pytest.raises(ValueError):
        max_order()


def test_cap_exceeded_is_a_value_error():
    assert issubclass(CapExceeded, ValueError)


@given(st.integers(0, 30), st.integers(0, 30))
def test_pascal_rule(n, k):
    assert binom(n + 1, k + 1) == binom(n, k) + binom(n, k + 1)


@given(st.fractions(max_denominator=20), st.integers(0, 8))
def test_pochhammer_recurrence(u, n):
    assert pochhammer(u, n + 1) == pochhammer(u, n) * (u + n)


@given(st.integers(0, 6), st.integers(0, 6))
def test_m_value_symmetric(a, b):
    if a + b >= 2:
        assert m_value(a, b) == m_value(b, a)
