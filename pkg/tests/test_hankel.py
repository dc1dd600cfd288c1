from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hankel_lab.hankel import RationalMatrix, det_exact, hankel_det, verify_hat_split
from hankel_lab.reference import HANKEL_TABLE, U_VALUES, V_VALUES, W_VALUES, hankel_product
from hankel_lab.series import TruncatedSeries, build_series

small = st.fractions(min_value=-6, max_value=6, max_denominator=6)


def test_printed_u_v_w():
    g = build_series("g", (), 16)
    assert [hankel_det(g, n) for n in range(1, 8)] == [Fraction(v) for v in U_VALUES]
    assert [hankel_det(g, n, 1) for n in range(1, 8)] == [Fraction(v) for v in V_VALUES]
    assert [hankel_det(g, n, "hat") for n in range(1, 8)] == [Fraction(v) for v in W_VALUES]


@pytest.mark.parametrize("key", sorted(HANKEL_TABLE))
def test_sequence_hankel_table(key):
    letter, window = key
    a = build_series(f"seq_{letter}", (), 16)
    got = [hankel_det(a, n, 0 if window == "H" else 1) for n in range(1, 8)]
    assert got == [Fraction(v) for v in HANKEL_TABLE[key]]
    assert got == [hankel_product(letter, window, n) for n in range(1, 8)]


def test_index_shift_chains():
    a, b, c = (build_series(f"seq_{s}", (), 18) for s in "abc")
    for n in range(1, 8):
        assert hankel_det(a, n) == hankel_det(b, n - 1, 1) == hankel_det(c, n - 1)
        assert hankel_det(a, n, 1) == hankel_det(b, n) == hankel_det(c, n - 1, 1)


def test_empty_determinant_is_one():
    assert det_exact([]) == 1
    assert hankel_det(build_series("g", (), 4), 0) == 1


def test_non_square_rejected():
    with pytest.raises(ValueError):
        det_exact([[1, 2]])


def test_overrides_supply_negative_indices():
    g = build_series("g", (), 6)
    # rows (A_-1, A_0), (A_0, A_1) with A_-1 = 5
    assert hankel_det(g, 2, -1, {-1: 5}) == 4


def test_window_needs_enough_coefficients():
    with pytest.raises(ValueError):
        hankel_det(build_series("g", (), 3), 3)


@given(st.lists(small, min_size=9, max_size=9))
def test_bareiss_matches_gauss(vals):
    rows = [vals[0:3], vals[3:6], vals[6:9]]
    assert det_exact(rows) == det_exact(rows, "gauss")


@given(st.lists(small, min_size=4, max_size=4), st.lists(small, min_size=4, max_size=4))
def test_determinant_is_multiplicative(x, y):
    a = [x[0:2], x[2:4]]
    b = [y[0:2], y[2:4]]
    ab = [[sum(a[i][k] * b[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
    assert det_exact(ab) == det_exact(a) * det_exact(b)


@given(st.lists(small, min_size=10, max_size=10))
def test_hat_split_holds_for_any_series(vals):
    assert verify_hat_split(TruncatedSeries([1, *vals]), 3)


def test_transpose_keeps_determinant():
    m = RationalMatrix([[1, 2, 3], [0, 4, 5], [1, 0, 6]])
    assert det_exact(m) == det_exact(m.transpose()) == 22
