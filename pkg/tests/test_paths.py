from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from hankel_lab.checks import all_ok
from hankel_lab.exact_core import CapExceeded, binom, closed_form
from hankel_lab.hankel import det_exact
from hankel_lab.paths import (PATH_IDENTITIES, LatticePath, PathProblem, config_matrix, count_named, count_paths,
                              enumerate_paths, is_legal_path, k_set, kt_set, nonintersecting_tuples, phi_maps,
                              shifted_trinomial_det, slide_table, verify_path_identity, verify_phi)
from hankel_lab.series import r_ary_coefficient

step = st.sampled_from([(1, 0), (0, 1), (2, 0), (0, 2), (1, 1)])


@pytest.mark.parametrize("name,params", [
    ("matrix_id", (4, 2)), ("matrix_id", (4, 4)), ("unt", (4,)), ("e98_e99", (4, 3)), ("thm62", (3,)),
    ("thm75", (3,)), ("thm83", (3, 4)), ("lemma85", (3, 2, 3)), ("thm93", (4, 3)),
])
def test_path_identities(name, params):
    assert name in PATH_IDENTITIES
    checks = verify_path_identity(name, params)
    assert checks and all_ok(checks)


@pytest.mark.parametrize("r", [2, 3, 4])
def test_k_paths_count_r_ary_numbers(r):
    for m in range(3):
        for n in range(3 - m):
            assert count_paths(k_set(m, n, r)) == r_ary_coefficient(r, m + n)


@pytest.mark.parametrize("r", [1, 2, 3])
def test_kt_paths_count_r_ary_numbers_for_every_shift(r):
    for s in range(r + 1):
        for m in range(3):
            for n in range(3 - m):
                assert count_paths(kt_set(m, n, r, s)) == r_ary_coefficient(r, m + n)


def test_slide_table_rows():
    assert slide_table(5) == [
        [1, 2, 1, 0, 0],
        [2, 7, 9, 5, 1],
        [1, 9, 26, 35, 24],
        [0, 5, 35, 96, 136],
        [0, 1, 24, 136, 358],
    ]


def test_slide_center_by_enumeration():
    # the (1,1) slide count is 7, checked by listing every path
    from hankel_lab.paths import slide_problem
    assert len(list(enumerate_paths(slide_problem(1, 1)))) == 7


def test_printed_shifted_determinant_is_zero():
    # the s >= 1 shifted determinant has a zero first row
    assert shifted_trinomial_det(3, 2, 1) == 0


@pytest.mark.parametrize("r", [2, 3])
def test_phi_bijections(r):
    for i in range(4):
        for j in range(r * i + 1):
            assert all_ok(verify_phi(i, j, r))


def test_phi_needs_r_at_least_two():
    with pytest.raises(ValueError):
        phi_maps(LatticePath((0, 0), ((1, 0),)), "v", 1)


@pytest.mark.parametrize("config", ["UR", "UL", "UK"])
def test_nonintersecting_tuples_equal_determinant_and_u(config):
    for n in range(1, 4):
        brute = nonintersecting_tuples(config, n)
        assert brute == det_exact(config_matrix(config, n)) == closed_form("typea", (n,))


def test_named_counts():
    assert count_named("N_slide", (1, 2)) == 9
    assert count_named("As", (1, 1, 2, 1)) == count_named("Bs", (1, 1, 2, 1))
    assert len(count_named("gtv", (1, 1, 2))) == 4
    with pytest.raises(ValueError):
        count_named("As", (1, 1, 2, 0))
    with pytest.raises(ValueError):
        count_named("gtv", (1, 1, 1))


def test_problem_validation():
    with pytest.raises(ValueError):
        PathProblem((0, 0), (1, 1), "nope")
    with pytest.raises(ValueError):
        PathProblem((0, 0), (1, 1), "K", 1)
    with pytest.raises(CapExceeded):
        PathProblem((0, 0), (500, 0))


def test_enumeration_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_paths(PathProblem((0, 0), (10, 10)), limit=100))


@given(st.integers(0, 8), st.integers(0, 8))
def test_normal_paths_are_binomial(a, b):
    assert count_paths(PathProblem((0, 0), (a, b))) == binom(a + b, a)


@given(st.integers(1, 4), st.integers(0, 6), st.integers(0, 6))
def test_trinomial_paths_count_coefficients(r, a, b):
    from hankel_lab.ctengine import trinomial_r
    assert count_paths(PathProblem((0, 0), (a, b), "Tr", r)) == trinomial_r(a, b, r)


@given(st.integers(2, 3), st.integers(0, 2), st.integers(0, 2), st.integers(0, 3))
def test_enumeration_matches_count(r, m, n, s):
    problem = kt_set(m, n, r, min(s, r))
    paths = list(enumerate_paths(problem))
    assert len(paths) == count_paths(problem)
    assert len(set(paths)) == len(paths)
    assert all(is_legal_path(problem, p) for p in paths)


@given(st.tuples(st.integers(-5, 5), st.integers(-5, 5)), st.lists(step, max_size=8))
def test_reflect_is_an_involution(start, steps):
    path = LatticePath(start, tuple(steps))
    assert path.reflect().reflect() == path
    assert path.reflect().start == (-path.end[1], -path.end[0])


def test_ceiling_accepts_fractions():
    assert count_paths(PathProblem((-2, -1), (2, 1), "normal", ceiling=Fraction(1, 2))) > 0
