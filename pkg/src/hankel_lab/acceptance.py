"""The twelve acceptance criteria as lists of exact checks, in quick and full profiles."""

from __future__ import annotations

import os
from contextlib import contextmanager
from fractions import Fraction

from .cfrac import extract_sfraction, hankel_closed_form, hankel_from_lambdas, verify_contiguous
from .checks import Check
from .ctengine import verify_ct_identity
from .exact_core import asm_count, closed_form, max_order
from .gf2d import sample_series, theorem_checks, verify_identity
from .hankel import det_exact, hankel_det, verify_hat_split
from .paths import (config_matrix, nonintersecting_tuples, shifted_trinomial_det, slide_table,
                    verify_path_identity, verify_phi)
from .reference import (ASM_VALUES, HANKEL_TABLE, SLIDE_TABLE, U_VALUES, V_VALUES, W_VALUES,
                        hankel_product)
from .series import GAUSS_CASES, build_series, verify_series_identities

PROFILES = {
    "quick": {"n": 7, "order": 24, "small_n": 6, "path_n": 5, "samples": 50, "lgv_n": 3},
    "full": {"n": 9, "order": 128, "small_n": 8, "path_n": 6, "samples": 100, "lgv_n": 4},
}

TAMM = (Fraction(2, 3), Fraction(1, 3), Fraction(1, 2), Fraction(27, 4))

CRITERIA = {
    1: "U_n, V_n, W_n by determinant, lambdas, Gauss products and closed forms",
    2: "W_2n = U_n V_n and W_2n+1 = U_n+1 V_n",
    3: "Hankel table of the sequences a..e and the index-shift relations",
    4: "ten Gauss continued-fraction cases and their swapped companions",
    5: "b, r and s(u) Hankel determinants for several u",
    6: "binomial-kernel determinants and the general-r product",
    7: "Hankel-preserving transforms on random series",
    8: "alternating sign matrix determinants",
    9: "K-path and KT-path counts and the slide table",
    10: "matrix factorizations and trinomial determinants",
    11: "bivariate and trivariate kernels and the constant-term determinants",
    12: "phi bijections and nonintersecting tuples",
}


def _table_checks(n: int, order: int) -> list[Check]:
    g = build_series("g", (), max(order, 2 * n + 2))
    frac = extract_sfraction(g, 2 * n)
    out = []
    for k in range(1, n + 1):
        u_direct, v_direct, w_direct = hankel_det(g, k), hankel_det(g, k, 1), hankel_det(g, k, "hat")
        routes_u = (u_direct, hankel_from_lambdas(frac, k, "H"), hankel_closed_form(*TAMM, k, "H"),
                    closed_form("typea", (k,)))
        routes_v = (v_direct, hankel_from_lambdas(frac, k, "H1"), hankel_closed_form(*TAMM, k, "H1"),
                    closed_form("typeb", (k,)))
        half, odd = divmod(k, 2)
        w_closed = (closed_form("typea", (half + odd,)) if half + odd else Fraction(1)) * (
            closed_form("typeb", (half,)) if half else Fraction(1))
        routes_w = (w_direct, hankel_from_lambdas(frac, k, "Hhat"), w_closed)
        out.append(Check(f"U_{k} routes agree", len(set(routes_u)), 1))
        out.append(Check(f"V_{k} routes agree", len(set(routes_v)), 1))
        out.append(Check(f"W_{k} routes agree", len(set(routes_w)), 1))
        if k <= len(U_VALUES):
            out.append(Check(f"U_{k} printed", u_direct, Fraction(U_VALUES[k - 1])))
            out.append(Check(f"V_{k} printed", v_direct, Fraction(V_VALUES[k - 1])))
            out.append(Check(f"W_{k} printed", w_direct, Fraction(W_VALUES[k - 1])))
    return out


def criterion_1(p: dict) -> list[Check]:
    return _table_checks(p["n"], p["order"])


def criterion_2(p: dict) -> list[Check]:
    g = build_series("g", (), 16)
    out = [Check("hat splitting n <= 3", verify_hat_split(g, 3), True)]
    for n in range(4):
        u, v, u1 = hankel_det(g, n), hankel_det(g, n, 1), hankel_det(g, n + 1)
        out.append(Check(f"W_{2 * n} = U_{n} V_{n}", hankel_det(g, 2 * n, "hat"), u * v))
        out.append(Check(f"W_{2 * n + 1} = U_{n + 1} V_{n}", hankel_det(g, 2 * n + 1, "hat"), u1 * v))
    return out


def criterion_3(p: dict) -> list[Check]:
    n = p["n"]
    seqs = {s: build_series(f"seq_{s}", (), 2 * n + 2) for s in "abcde"}
    out = []
    for (letter, window), printed in HANKEL_TABLE.items():
        k = 0 if window == "H" else 1
        for m in range(1, n + 1):
            direct = hankel_det(seqs[letter], m, k)
            if m <= len(printed):
                out.append(Check(f"{window}_{m}({letter}) printed", direct, Fraction(printed[m - 1])))
            out.append(Check(f"{window}_{m}({letter}) product", direct, hankel_product(letter, window, m)))
    a, b, c = seqs["a"], seqs["b"], seqs["c"]
    for m in range(1, n + 1):
        u = hankel_det(a, m)
        out.append(Check(f"H_{m}(a) = H1_{m - 1}(b)", u, hankel_det(b, m - 1, 1)))
        out.append(Check(f"H_{m}(a) = H_{m - 1}(c)", u, hankel_det(c, m - 1)))
        v = hankel_det(a, m, 1)
        out.append(Check(f"H1_{m}(a) = H_{m}(b)", v, hankel_det(b, m)))
        out.append(Check(f"H1_{m}(a) = H1_{m - 1}(c)", v, hankel_det(c, m - 1, 1)))
    return out


def criterion_4(p: dict) -> list[Check]:
    order = p["order"]
    out = verify_series_identities("tcfs_all", order)
    for tag, ((a, b, c), _) in GAUSS_CASES.items():
        out.append(Check(f"swap relation {tag}", verify_contiguous(a, b, c, order), True))
    return out


def criterion_5(p: dict) -> list[Check]:
    n = p["small_n"]
    out = []
    for u in (Fraction(1), Fraction(3), Fraction(1, 2), Fraction(-2), Fraction(7, 2)):
        out += [Check(f"u={u} {c.label}", c.lhs, c.rhs) for c in verify_identity("err", n, (u,))]
        out += [Check(f"u={u} {c.label}", c.lhs, c.rhs) for c in verify_identity("sdet", n, (u,))]
    out += verify_identity("rdet", n)
    return out


def criterion_6(p: dict) -> list[Check]:
    n = p["small_n"]
    out = verify_identity("un", n) + verify_identity("vn", n)
    for r in range(5):
        out += [Check(f"r={r} {c.label}", c.lhs, c.rhs) for c in verify_identity("gen_det", n, (r,))]
    return out


def criterion_7(p: dict) -> list[Check]:
    samples = sample_series(p["samples"], 10, seed=7)
    out = []
    for c in (Fraction(2), Fraction(-1), Fraction(1, 3)):
        for name in ("tsame", "tsame1", "hn1a"):
            for idx, a in enumerate(samples):
                out += [Check(f"{name} c={c} sample {idx}: {ch.label}", ch.lhs, ch.rhs)
                        for ch in theorem_checks(name, a, c, 4)]
    return out


def criterion_8(p: dict) -> list[Check]:
    n = p["small_n"]
    out = [Check(f"A_{k} product value", asm_count(k), Fraction(v)) for k, v in enumerate(ASM_VALUES, 1)]
    for name in ("asm", "asm_remark", "asm1"):
        out += verify_identity(name, n)
    return out


def criterion_9(p: dict) -> list[Check]:
    out = verify_path_identity("thm62", (4,)) + verify_path_identity("thm75", (4,))
    for r in range(1, 5):
        out += verify_path_identity("thm83", (r, 4))
    table = slide_table(5)
    for i, row in enumerate(SLIDE_TABLE):
        for j, printed in enumerate(row):
            if printed is not None:
                out.append(Check(f"N({i},{j}) printed", table[i][j], printed))
    out += [Check(f"N({i},{j}) = N({j},{i})", table[i][j], table[j][i]) for i in range(5) for j in range(5)]
    return out


def criterion_10(p: dict) -> list[Check]:
    n = p["path_n"]
    out = []
    for r in range(1, 5):
        out += verify_path_identity("matrix_id", (n, r))
        out += verify_path_identity("e98_e99", (n, r))
    out += verify_path_identity("unt", (n,))
    # the shifted determinant exactly as printed, for s >= 1
    g_dets = {}
    for r in range(2, 5):
        for m in range(1, n + 1):
            g = build_series("g_r", (r,), 2 * m)
            g_dets[r, m] = hankel_det(g, m)
            for s in range(1, r):
                out.append(Check(f"r={r} n={m} s={s} det T(ri-s,rj+s) as printed",
                                 shifted_trinomial_det(m, r, s), g_dets[r, m]))
    return out


def criterion_11(p: dict) -> list[Check]:
    out = verify_identity("un", 7)[:2] + verify_identity("gfzzz", 6)
    out += verify_ct_identity("gf_tr0", (5, 5))
    out += verify_ct_identity("s9", (5,))
    for r in range(1, 5):
        out += verify_path_identity("thm93", (p["path_n"], r))
    return out


def criterion_12(p: dict) -> list[Check]:
    out = []
    for r in (2, 3):
        for i in range(6):
            for j in range(r * i + 1):
                out += verify_phi(i, j, r)
    for config in ("UR", "UL", "UK"):
        for n in range(1, p["lgv_n"] + 1):
            brute = Fraction(nonintersecting_tuples(config, n))
            out.append(Check(f"{config} n={n} tuples = det", brute, det_exact(config_matrix(config, n))))
            out.append(Check(f"{config} n={n} tuples = U_{n}", brute, closed_form("typea", (n,))))
    return out


CRITERION_FUNCS = {k: globals()[f"criterion_{k}"] for k in CRITERIA}


@contextmanager
def _order_cap_at_least(order: int):
    """Raise the series truncation cap to ``order`` for the duration of a run."""
    old = os.environ.get("HANKEL_LAB_MAX_ORDER")
    if max_order() < order:
        os.environ["HANKEL_LAB_MAX_ORDER"] = str(order)
    try:
        yield
    finally:
        if old is None:
            os.environ.pop("HANKEL_LAB_MAX_ORDER", None)
        else:
            os.environ["HANKEL_LAB_MAX_ORDER"] = old


def run_criterion(k: int, profile: str = "quick") -> list[Check]:
    if profile not in PROFILES:
        raise ValueError(f"unknown profile {profile!r}; expected one of {tuple(PROFILES)}")
    p = PROFILES[profile]
    with _order_cap_at_least(p["order"]):
        return CRITERION_FUNCS[k](p)
