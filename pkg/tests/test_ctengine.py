from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hankel_lab.checks import all_ok
from hankel_lab.ctengine import (CT_NAMES, LaurentPoly, alpha, beta, ct, trinomial_ct, trinomial_r, trinomial_sum,
                                 verify_ct_identity)
from hankel_lab.exact_core import binom

laurent = st.builds(lambda cs, low: LaurentPoly(cs, low),
                    st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=4), max_size=5),
                    st.integers(-3, 3))


@pytest.mark.parametrize("name", CT_NAMES)
def test_ct_identities(name):
    caps = (5,) if name in ("trexpand", "s9") else (5, 5)
    checks = verify_ct_identity(name, caps)
    assert checks and all_ok(checks)


def test_central_trinomials():
    # coefficients of (x^2 + xy + y^2)^m at x^m y^m: 1, 1, 3, 7, 19, 51
    assert [trinomial_r(m, m, 2) for m in range(6)] == [1, 1, 3, 7, 19, 51]


def test_r1_is_binomial():
    assert all(trinomial_r(a, b, 1) == binom(a + b, a) for a in range(6) for b in range(6))


def test_r0_is_delta():
    assert trinomial_r(0, 0, 0) == 1
    assert trinomial_r(1, 0, 0) == 0


def test_parity_and_negative_indices():
    assert trinomial_r(1, 2, 2) == 0
    assert trinomial_r(-1, 3, 2) == 0
    assert trinomial_sum(1, 2) == 0


def test_constant_term_form():
    for r in (1, 2, 3):
        for i in range(4):
            for j in range(4):
                for s in range(-2, 3):
                    assert trinomial_ct(i, j, s, r) == trinomial_r(r * i + s, r * j - s, r)


def test_alpha_beta_product_is_symmetric():
    p = alpha(2) * beta(2)
    assert all(p.coeff(k) == p.coeff(-k) for k in range(3))
    assert ct(p) == 3


def test_negative_power_rejected():
    with pytest.raises(ValueError):
        alpha(1) ** -1


def test_unknown_ct_identity():
    with pytest.raises(ValueError):
        verify_ct_identity("nope")


@given(laurent, laurent, laurent)
def test_laurent_ring_laws(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a - a == LaurentPoly([])


@given(laurent, st.integers(-4, 4))
def test_shift_moves_constant_term(p, k):
    assert ct(p.shift(k)) == p.coeff(-k)


@given(st.integers(1, 4), st.integers(0, 8), st.integers(0, 8))
def test_trinomial_symmetry(r, a, b):
    assert trinomial_r(a, b, r) == trinomial_r(b, a, r)


@given(st.integers(1, 4), st.integers(0, 6))
def test_row_sum(r, m):
    assert sum((trinomial_r(a, r * m - a, r) for a in range(r * m + 1)), Fraction(0)) == (r + 1) ** m
