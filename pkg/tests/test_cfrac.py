from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hankel_lab.cfrac import (SFraction, extract_sfraction, gauss_lambdas, h2_ratio, hankel_closed_form,
                              hankel_from_lambdas, lambdas_agree, sfraction_to_series, verify_contiguous)
from hankel_lab.hankel import hankel_det
from hankel_lab.reference import U_VALUES, V_VALUES, W_VALUES
from hankel_lab.series import GAUSS_CASES, build_series

TAMM = (Fraction(2, 3), Fraction(1, 3), Fraction(1, 2), Fraction(27, 4))


def test_catalan_lambdas_are_all_one():
    frac = extract_sfraction(build_series("catalan", (), 10), 10)
    assert frac.lambdas == (Fraction(1),) * 10


def test_g_tables_from_lambdas():
    frac = extract_sfraction(build_series("g", (), 16), 14)
    assert [hankel_from_lambdas(frac, n, "H") for n in range(1, 8)] == [Fraction(v) for v in U_VALUES]
    assert [hankel_from_lambdas(frac, n, "H1") for n in range(1, 8)] == [Fraction(v) for v in V_VALUES]
    assert [hankel_from_lambdas(frac, n, "Hhat") for n in range(1, 8)] == [Fraction(v) for v in W_VALUES]


def test_gauss_products_at_ternary_point():
    assert [hankel_closed_form(*TAMM, n, "H") for n in range(1, 8)] == [Fraction(v) for v in U_VALUES]
    assert [hankel_closed_form(*TAMM, n, "H1") for n in range(1, 8)] == [Fraction(v) for v in V_VALUES]


def test_h2_ratio_against_direct_determinant():
    g = build_series("g", (), 16)
    assert all(h2_ratio(*TAMM, n) == hankel_det(g, n, 2) for n in range(6))


@pytest.mark.parametrize("tag", sorted(GAUSS_CASES))
def test_gauss_lambdas_and_swap_relation(tag):
    (a, b, c), _ = GAUSS_CASES[tag]
    assert lambdas_agree((a, b, c, TAMM[3]), 12)
    assert verify_contiguous(a, b, c, 16)


def test_extraction_needs_unit_constant():
    with pytest.raises(ValueError):
        extract_sfraction(build_series("seq_c", (), 6), 4)


def test_depth_beyond_order():
    with pytest.raises(ValueError):
        extract_sfraction(build_series("g", (), 4), 6)


def test_too_shallow_for_mu():
    with pytest.raises(ValueError):
        SFraction((Fraction(1),)).mu(3)


def test_gauss_lambdas_depth():
    assert gauss_lambdas(*TAMM, 5).depth == 5


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5).filter(bool), min_size=1, max_size=6))
def test_series_round_trip(lams):
    frac = SFraction(tuple(lams))
    series = sfraction_to_series(frac, len(lams))
    assert extract_sfraction(series, len(lams)).lambdas == frac.lambdas


@given(st.lists(st.fractions(min_value=-4, max_value=4, max_denominator=5).filter(bool), min_size=6, max_size=6))
def test_hankel_from_lambdas_matches_determinant(lams):
    frac = SFraction(tuple(lams))
    series = sfraction_to_series(frac, 6)
    for n in (1, 2, 3):
        assert hankel_from_lambdas(frac, n, "H") == hankel_det(series, n)
    for n in (1, 2):
        assert hankel_from_lambdas(frac, n, "H1") == hankel_det(series, n, 1)
