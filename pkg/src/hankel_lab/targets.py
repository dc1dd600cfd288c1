"""Named verification targets and tables, keyed by the names the CLI accepts."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .cfrac import (extract_sfraction, h2_ratio, hankel_closed_form, hankel_from_lambdas, lambdas_agree,
                    sfraction_to_series, verify_contiguous)
from .checks import Check
from .ctengine import CT_NAMES, trinomial_r, verify_ct_identity
from .exact_core import CapExceeded, binom, closed_form, m_value
from .gf2d import IDENTITY_NAMES, verify_identity
from .hankel import det_exact, hankel_det, verify_hat_split
from .paths import PATH_IDENTITIES, slide_table, verify_path_identity, verify_phi
from .reference import HANKEL_TABLE, hankel_product
from .series import GAUSS_CASES, SERIES_FAMILIES, build_series, verify_series_identities

DEFAULT_CAPS = {"n": 7, "r": 4, "lgv": 3}
TAMM = (Fraction(2, 3), Fraction(1, 3), Fraction(1, 2), Fraction(27, 4))


@dataclass
class Options:
    n: int | None = None
    r: int | None = None
    s: int | None = None
    u: Fraction | None = None
    c: Fraction | None = None
    order: int | None = None
    max_n: int = DEFAULT_CAPS["n"]
    max_r: int = DEFAULT_CAPS["r"]

    def get_n(self, default: int) -> int:
        n = default if self.n is None else self.n
        if n > self.max_n:
            raise CapExceeded(f"n = {n} exceeds the cap {self.max_n}")
        return n

    def get_r(self, default: int) -> int:
        r = default if self.r is None else self.r
        if r > self.max_r:
            raise CapExceeded(f"r = {r} exceeds the cap {self.max_r}")
        return r


def _routes(o: Options) -> list[Check]:
    n = o.get_n(7)
    g = build_series("g", (), max(2 * n + 2, o.order or 0))
    frac = extract_sfraction(g, 2 * n)
    out = []
    for k in range(1, n + 1):
        u = hankel_det(g, k)
        v = hankel_det(g, k, 1)
        out.append(Check(f"U_{k} lambdas", hankel_from_lambdas(frac, k, "H"), u))
        out.append(Check(f"U_{k} Gauss product", hankel_closed_form(*TAMM, k, "H"), u))
        out.append(Check(f"U_{k} closed form", closed_form("typea", (k,)), u))
        out.append(Check(f"V_{k} lambdas", hankel_from_lambdas(frac, k, "H1"), v))
        out.append(Check(f"V_{k} Gauss product", hankel_closed_form(*TAMM, k, "H1"), v))
        out.append(Check(f"V_{k} closed form", closed_form("typeb", (k,)), v))
        out.append(Check(f"W_{k} lambdas", hankel_from_lambdas(frac, k, "Hhat"), hankel_det(g, k, "hat")))
    return out


def _hankel_table(o: Options) -> list[Check]:
    n = o.get_n(7)
    out = []
    for (letter, window), printed in HANKEL_TABLE.items():
        a = build_series(f"seq_{letter}", (), 2 * n + 2)
        for m in range(1, n + 1):
            direct = hankel_det(a, m, 0 if window == "H" else 1)
            out.append(Check(f"{window}_{m}({letter}) product", direct, hankel_product(letter, window, m)))
            if m <= len(printed):
                out.append(Check(f"{window}_{m}({letter}) printed", direct, Fraction(printed[m - 1])))
    return out


def _hat_split(o: Options) -> list[Check]:
    n = o.get_n(3)
    out = []
    for name in ("g", "seq_a", "seq_b", "seq_c", "catalan"):
        a = build_series(name, (), 2 * n + 2)
        out.append(Check(f"{name} hat splitting n <= {n}", verify_hat_split(a, n), True))
    return out


def _lambdas(o: Options) -> list[Check]:
    depth = o.get_n(7) * 2
    out = []
    for tag, ((a, b, c), _) in GAUSS_CASES.items():
        out.append(Check(f"case {tag} lambdas", lambdas_agree((a, b, c, TAMM[3]), depth), True))
    g = build_series("g", (), depth)
    out.append(Check("g round trip", sfraction_to_series(extract_sfraction(g, depth), depth), g))
    return out


def _contiguous(o: Options) -> list[Check]:
    order = o.order or 16
    return [Check(f"swap relation {tag}", verify_contiguous(a, b, c, order), True)
            for tag, ((a, b, c), _) in GAUSS_CASES.items()]


def _h2(o: Options) -> list[Check]:
    n = o.get_n(5)
    g = build_series("g", (), 2 * n + 2)
    return [Check(f"H2_{k}", h2_ratio(*TAMM, k), hankel_det(g, k, 2)) for k in range(n + 1)]


def _closed(name: str) -> Callable[[Options], list[Check]]:
    def run(o: Options) -> list[Check]:
        n = o.get_n(7)
        if name in ("id1", "id2"):
            return [Check(f"{name} i <= {3 * n}", closed_form(name, (3 * n,)), 1)]
        return [Check(f"M({a},{b}) = M({b},{a})", m_value(a, b), m_value(b, a))
                for a in range(2 * n) for b in range(2 * n) if a + b >= 2]
    return run


def binom_det_lhs(a: int, ls) -> Fraction:
    """det(binom(A + L_i + j, L_i + j)) for j = 1..n."""
    n = len(ls)
    return det_exact([[binom(a + l + j, l + j) for j in range(1, n + 1)] for l in ls])


def _binom_det(o: Options) -> list[Check]:
    n = o.get_n(3)
    out = []
    for a in range(6):
        for ls in itertools.combinations(range(5, -1, -1), n):
            try:
                rhs = closed_form("binom_det", (a, *ls))
            except ValueError:
                continue
            out.append(Check(f"A={a} L={ls}", binom_det_lhs(a, ls), rhs))
    return out


def _series(family: str) -> Callable[[Options], list[Check]]:
    def run(o: Options) -> list[Check]:
        params = ()
        if family == "fs_expansion" and o.u is not None:
            params = (o.u,)
        elif family == "functional_eq" and o.r is not None:
            params = (o.get_r(4),)
        return verify_series_identities(family, o.order or 16, params)
    return run


def _gf(name: str) -> Callable[[Options], list[Check]]:
    def run(o: Options) -> list[Check]:
        n = o.get_n(5)
        if name in ("err", "sdet"):
            params = (o.u,) if o.u is not None else ()
        elif name in ("tsame", "tsame1", "hn1a"):
            params = (o.c,) if o.c is not None else ()
        elif name in ("gen_det", "e_r"):
            params = (o.get_r(0),)
        else:
            params = ()
        return verify_identity(name, n, params)
    return run


def _ct(name: str) -> Callable[[Options], list[Check]]:
    def run(o: Options) -> list[Check]:
        n = o.get_n(5)
        rs = (o.get_r(2),) if o.r is not None else None
        caps = (n,) if name in ("trexpand", "s9") else (n, n)
        return verify_ct_identity(name, caps, rs)
    return run


def _path(name: str) -> Callable[[Options], list[Check]]:
    def run(o: Options) -> list[Check]:
        n = o.get_n(4)
        if name in ("matrix_id", "e98_e99", "thm93"):
            return verify_path_identity(name, (n, o.get_r(2)))
        if name in ("unt", "thm62", "thm75"):
            return verify_path_identity(name, (n,))
        if name == "thm83":
            return verify_path_identity(name, (o.get_r(3), n))
        # lemma85
        r = o.get_r(3)
        s = 1 if o.s is None else o.s
        return verify_path_identity(name, (r, s, n))
    return run


def _phi(o: Options) -> list[Check]:
    n = o.get_n(4)
    r = o.get_r(2)
    return [c for i in range(n + 1) for j in range(r * i + 1) for c in verify_phi(i, j, r)]


def _slide(o: Options) -> list[Check]:
    n = o.get_n(5)
    table = slide_table(n)
    out = [Check(f"N({i},{j}) = N({j},{i})", table[i][j], table[j][i]) for i in range(n) for j in range(n)]
    out += [Check(f"N({i},{j}) = M({2 * j - i},{2 * i - j})", Fraction(table[i][j]), m_value(2 * j - i, 2 * i - j))
            for i in range(2, n) for j in range(n)]
    return out


def _t_symmetry(o: Options) -> list[Check]:
    n = o.get_n(6)
    out = []
    for r in range(1, o.get_r(4) + 1):
        out += [Check(f"r={r} T({a},{b}) = T({b},{a})", trinomial_r(a, b, r), trinomial_r(b, a, r))
                for a in range(2 * n) for b in range(2 * n)]
        out += [Check(f"r={r} row {m} sum", sum((trinomial_r(a, r * m - a, r) for a in range(r * m + 1)),
                                                Fraction(0)), Fraction((r + 1) ** m)) for m in range(n + 1)]
    return out


VERIFY_TARGETS: dict[str, Callable[[Options], list[Check]]] = {
    "routes": _routes,
    "hankel_table": _hankel_table,
    "hat_split": _hat_split,
    "lambdas": _lambdas,
    "contiguous": _contiguous,
    "h2_ratio": _h2,
    "id1": _closed("id1"),
    "id2": _closed("id2"),
    "m_symm": _closed("m_symm"),
    "binom_det": _binom_det,
    "phi": _phi,
    "slide": _slide,
    "t_symmetry": _t_symmetry,
}
VERIFY_TARGETS.update({name: _series(name) for name in SERIES_FAMILIES})
VERIFY_TARGETS.update({name: _gf(name) for name in IDENTITY_NAMES})
VERIFY_TARGETS.update({name: _ct(name) for name in CT_NAMES})
VERIFY_TARGETS.update({name: _path(name) for name in PATH_IDENTITIES})


def _hankel_row(letter: str, k) -> Callable[[int, Options], list]:
    def run(n: int, o: Options) -> list:
        a = build_series(f"seq_{letter}", (), 2 * n + 2)
        return [hankel_det(a, m, k) for m in range(1, n + 1)]
    return run


def _g_row(name: str, k) -> Callable[[int, Options], list]:
    def run(n: int, o: Options) -> list:
        g = build_series("g", (), 2 * n + 2)
        return [hankel_det(g, m, k) for m in range(1, n + 1)]
    return run


def _coeffs(name: str, params=()) -> Callable[[int, Options], list]:
    def run(n: int, o: Options) -> list:
        p = params
        if name == "g_r":
            p = (o.get_r(2),)
        elif name == "s_u":
            p = (o.u if o.u is not None else 1,)
        return list(build_series(name, p, n - 1).coeffs) if n else []
    return run


TABLES: dict[str, Callable[[int, Options], list]] = {
    "U": _g_row("U", 0),
    "V": _g_row("V", 1),
    "W": _g_row("W", "hat"),
    "asm": lambda n, o: [closed_form("asm", (m,)) for m in range(1, n + 1)],
    "N": lambda n, o: slide_table(n),
}
for _letter in "abcde":
    TABLES[f"seq_{_letter}"] = _coeffs(f"seq_{_letter}")
    TABLES[f"H_{_letter}"] = _hankel_row(_letter, 0)
    TABLES[f"H1_{_letter}"] = _hankel_row(_letter, 1)
for _name in ("g", "catalan", "chat", "chat1", "g_r", "s_u"):
    TABLES[_name] = _coeffs(_name)
