"""Determinants of bivariate coefficient arrays and the rules that preserve them.

[D]_n denotes det(d_{i,j}) for 0 <= i, j < n where D = sum d_{i,j} x^i y^j.
"""

from __future__ import annotations

import random
from fractions import Fraction
from math import comb
from typing import Callable, Iterable, Mapping, Sequence

from .checks import Check
from .exact_core import as_rational, asm_count, binom, gbinom, mrr_det
from .hankel import det_exact, hankel_det
from .series import TruncatedSeries, build_series

IDENTITY_NAMES = ("un", "vn", "err", "sdet", "rdet", "tsame", "tsame1", "hn1a", "asm",
                  "asm_remark", "asm1", "gen_det", "gfzzz", "e_r")


# --- multivariate polynomials -------------------------------------------------

class Poly:
    """Sparse polynomial in a fixed number of variables, exponent tuple -> Fraction."""

    __slots__ = ("nvars", "terms")

    def __init__(self, terms: Mapping[tuple, object], nvars: int | None = None):
        clean = {}
        for e, c in terms.items():
            e = tuple(int(v) for v in e)
            c = as_rational(c)
            if any(v < 0 for v in e):
                raise ValueError("polynomial exponents must be nonnegative")
            if c:
                clean[e] = clean.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}
        if nvars is None:
            lens = {len(e) for e in terms}
            if len(lens) != 1:
                raise ValueError("cannot infer the number of variables")
            nvars = lens.pop()
        self.nvars = nvars

    @classmethod
    def const(cls, c, nvars: int) -> "Poly":
        return cls({(0,) * nvars: c}, nvars)

    @classmethod
    def var(cls, k: int, nvars: int) -> "Poly":
        e = [0] * nvars
        e[k] = 1
        return cls({tuple(e): 1}, nvars)

    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return other
        return Poly.const(other, self.nvars)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, Fraction(0)) + c
        return Poly(out, self.nvars)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()}, self.nvars)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        other = self._lift(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, Fraction(0)) + c1 * c2
        return Poly(out, self.nvars)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        out = Poly.const(1, self.nvars)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.nvars == other.nvars and self.terms == other.terms
        return NotImplemented

    def coeff(self, e: tuple) -> Fraction:
        return self.terms.get(tuple(e), Fraction(0))

    def degree(self, k: int) -> int:
        return max((e[k] for e in self.terms), default=0)

    def substitute(self, k: int, num: "Poly", den: "Poly") -> tuple["Poly", "Poly"]:
        """Replace variable k by num/den; returns (P * den^m, den^m) with m = deg_k P."""
        m = self.degree(k)
        out = Poly.const(0, self.nvars)
        for e, c in self.terms.items():
            rest = list(e)
            rest[k] = 0
            mono = Poly({tuple(rest): c}, self.nvars)
            out = out + mono * num ** e[k] * den ** (m - e[k])
        return out, den ** m

    def __repr__(self):
        return f"Poly({self.terms!r})"


def bivariate(terms: Mapping[tuple, object]) -> Poly:
    return Poly(terms, 2)


X2 = Poly.var(0, 2)
Y2 = Poly.var(1, 2)


def univariate_in(coeffs: Sequence, k: int, nvars: int) -> Poly:
    """c_0 + c_1 v + ... in variable k."""
    terms = {}
    for i, c in enumerate(coeffs):
        e = [0] * nvars
        e[k] = i
        terms[tuple(e)] = c
    return Poly(terms, nvars)


def expand_poly_quotient(num: Poly, den: Poly, bounds: Sequence[int]) -> dict:
    """Coefficients of num/den for exponents below ``bounds`` (one bound per variable)."""
    d0 = den.coeff((0,) * den.nvars)
    if d0 == 0:
        raise ZeroDivisionError("denominator has zero constant term")
    rest = [(e, c) for e, c in den.terms.items() if any(e)]
    out: dict = {}

    def walk(prefix):
        if len(prefix) == len(bounds):
            yield tuple(prefix)
            return
        for v in range(bounds[len(prefix)]):
            yield from walk(prefix + [v])

    # lexicographic order visits every e - d (d != 0, d >= 0) before e
    for e in walk([]):
        acc = num.coeff(e)
        for d, c in rest:
            prev = tuple(a - b for a, b in zip(e, d))
            if min(prev) >= 0:
                acc -= c * out[prev]
        out[e] = acc / d0
    return out


# --- coefficient grids --------------------------------------------------------

class CoeffGrid:
    """Rectangular array d_{i,j}, 0 <= i < nx, 0 <= j < ny."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        data = tuple(tuple(as_rational(v) for v in r) for r in rows)
        if len({len(r) for r in data}) > 1:
            raise ValueError("grid rows must have equal length")
        self.rows = data

    @classmethod
    def from_function(cls, fn: Callable[[int, int], object], nx: int, ny: int | None = None) -> "CoeffGrid":
        ny = nx if ny is None else ny
        return cls([[fn(i, j) for j in range(ny)] for i in range(nx)])

    @property
    def nx(self) -> int:
        return len(self.rows)

    @property
    def ny(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    def __getitem__(self, ij) -> Fraction:
        i, j = ij
        return self.rows[i][j]

    def __eq__(self, other):
        if isinstance(other, CoeffGrid):
            return self.rows == other.rows
        return NotImplemented

    def __repr__(self):
        return f"CoeffGrid({[list(map(str, r)) for r in self.rows]})"

    def crop(self, nx: int, ny: int | None = None) -> "CoeffGrid":
        ny = nx if ny is None else ny
        if nx > self.nx or ny > self.ny:
            raise ValueError("crop exceeds grid")
        return CoeffGrid([r[:ny] for r in self.rows[:nx]])

    def transpose(self) -> "CoeffGrid":
        return CoeffGrid(zip(*self.rows)) if self.rows else CoeffGrid([])

    def __add__(self, other: "CoeffGrid") -> "CoeffGrid":
        nx, ny = min(self.nx, other.nx), min(self.ny, other.ny)
        return CoeffGrid.from_function(lambda i, j: self[i, j] + other[i, j], nx, ny)

    def __sub__(self, other: "CoeffGrid") -> "CoeffGrid":
        nx, ny = min(self.nx, other.nx), min(self.ny, other.ny)
        return CoeffGrid.from_function(lambda i, j: self[i, j] - other[i, j], nx, ny)

    def det(self, n: int) -> Fraction:
        return grid_det(self, n)

    # the four transformation rules, each acting on x (axis 0) or y (axis 1)

    def scale(self, c) -> "CoeffGrid":
        c = as_rational(c)
        return CoeffGrid([[c * v for v in r] for r in self.rows])

    def scale_var(self, c, axis: int = 0) -> "CoeffGrid":
        c = as_rational(c)
        if axis == 0:
            return CoeffGrid.from_function(lambda i, j: c ** i * self[i, j], self.nx, self.ny)
        return CoeffGrid.from_function(lambda i, j: c ** j * self[i, j], self.nx, self.ny)

    def multiply(self, u: TruncatedSeries, axis: int = 0) -> "CoeffGrid":
        """u(x) D(x, y) (axis 0) or u(y) D(x, y) (axis 1)."""
        if axis == 1:
            return self.transpose().multiply(u, 0).transpose()
        if u.order < self.nx - 1:
            raise ValueError("multiplier series is truncated below the grid size")
        return CoeffGrid.from_function(
            lambda i, j: sum((u[k] * self[i - k, j] for k in range(i + 1)), Fraction(0)),
            self.nx, self.ny)

    def compose(self, v: TruncatedSeries, axis: int = 0) -> "CoeffGrid":
        """D(v(x), y) (axis 0) or D(x, v(y)) (axis 1); needs v(0) = 0."""
        if axis == 1:
            return self.transpose().compose(v, 0).transpose()
        if v[0] != 0:
            raise ValueError("composition needs v(0) = 0")
        n = self.nx
        if v.order < n - 1:
            raise ValueError("substituted series is truncated below the grid size")
        v = v.truncate(n - 1) if n else v
        powers = [TruncatedSeries.constant(1, max(n - 1, 0))]
        for _ in range(1, n):
            powers.append(powers[-1] * v)
        return CoeffGrid.from_function(
            lambda i, j: sum((powers[k][i] * self[k, j] for k in range(i + 1)), Fraction(0)),
            n, self.ny)


def grid_det(grid: CoeffGrid, n: int) -> Fraction:
    """[D]_n, the determinant of the leading n x n block."""
    if n < 0 or n > min(grid.nx, grid.ny):
        raise ValueError(f"[D]_{n} needs an n x n block; grid is {grid.nx} x {grid.ny}")
    return det_exact([list(r[:n]) for r in grid.rows[:n]])


class RationalBivariate:
    """num(x, y) / den(x, y) with den(0, 0) != 0."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly, den: Poly):
        if num.nvars != 2 or den.nvars != 2:
            raise ValueError("bivariate rational functions need two-variable polynomials")
        if den.coeff((0, 0)) == 0:
            raise ZeroDivisionError("denominator has zero constant term")
        self.num, self.den = num, den

    def __repr__(self):
        return f"RationalBivariate({self.num!r}, {self.den!r})"


def expand_rational(r: RationalBivariate, nx: int, ny: int | None = None) -> CoeffGrid:
    ny = nx if ny is None else ny
    coeffs = expand_poly_quotient(r.num, r.den, (nx, ny))
    return CoeffGrid.from_function(lambda i, j: coeffs[(i, j)], nx, ny)


def expand_trivariate(num: Poly, den: Poly, nx: int, ny: int, nz: int) -> list[CoeffGrid]:
    """Coefficient grids of z^0 .. z^(nz-1) of num/den in x, y, z."""
    if num.nvars != 3 or den.nvars != 3:
        raise ValueError("trivariate expansion needs three-variable polynomials")
    coeffs = expand_poly_quotient(num, den, (nx, ny, nz))
    return [CoeffGrid.from_function(lambda i, j, k=k: coeffs[(i, j, k)], nx, ny) for k in range(nz)]


def grid_from_series(a: TruncatedSeries, kernel: str, n: int) -> CoeffGrid:
    """Expand (xA(x) - yA(y))/(x - y) (window0) or (A(x) - A(y))/(x - y) (window1).

    Each monomial quotient (x^m - y^m)/(x - y) is the complete homogeneous sum
    of x^i y^j over i + j = m - 1, so both kernels expand term by term.
    """
    shift = {"window0": 1, "window1": 0}.get(kernel)
    if shift is None:
        raise ValueError(f"unknown kernel {kernel!r}; expected window0 or window1")
    need = 2 * n - 1 - shift
    if n and a.order < need:
        raise ValueError(f"kernel {kernel} of size {n} needs order {need}, have {a.order}")
    rows = [[Fraction(0)] * n for _ in range(n)]
    for k in range(min(a.order, need) + 1 if n else 0):
        m = k + shift  # the monomial A_k x^m in the numerator
        for i in range(m):
            j = m - 1 - i
            if i < n and j < n:
                rows[i][j] += a[k]
    return CoeffGrid(rows)


RULES = ("scale", "scale_var", "product", "compose")


def apply_rule(d, rule: str, payload, axis: int = 0):
    """Apply a determinant-preserving (or predictably scaling) transformation.

    For a :class:`CoeffGrid`, ``product`` and ``compose`` take a
    :class:`TruncatedSeries`.  For a :class:`RationalBivariate` they take a
    univariate rational function as a pair of coefficient lists (num, den).
    """
    if rule not in RULES:
        raise ValueError(f"unknown rule {rule!r}; expected one of {RULES}")
    if axis not in (0, 1):
        raise ValueError("axis must be 0 (x) or 1 (y)")
    if rule in ("scale", "scale_var") and as_rational(payload) == 0:
        raise ValueError("scaling constants must be nonzero")
    if isinstance(d, CoeffGrid):
        if rule == "scale":
            return d.scale(payload)
        if rule == "scale_var":
            return d.scale_var(payload, axis)
        if rule == "product":
            if payload[0] != 1:
                raise ValueError("product rule needs u(0) = 1")
            return d.multiply(payload, axis)
        if payload[0] != 0 or payload.order < 1 or payload[1] != 1:
            raise ValueError("composition rule needs v(0) = 0 and v'(0) = 1")
        return d.compose(payload, axis)
    if isinstance(d, RationalBivariate):
        if rule == "scale":
            return RationalBivariate(d.num * as_rational(payload), d.den)
        if rule == "scale_var":
            var = univariate_in([0, as_rational(payload)], axis, 2)
            one = Poly.const(1, 2)
            num, _ = d.num.substitute(axis, var, one)
            den, _ = d.den.substitute(axis, var, one)
            return RationalBivariate(num, den)
        pn, pd = (univariate_in(list(c), axis, 2) for c in payload)
        if pd.coeff((0, 0)) == 0:
            raise ZeroDivisionError("payload denominator has zero constant term")
        if rule == "product":
            if pn.coeff((0, 0)) != pd.coeff((0, 0)):
                raise ValueError("product rule needs u(0) = 1")
            return RationalBivariate(d.num * pn, d.den * pd)
        e1 = (1, 0) if axis == 0 else (0, 1)
        if pn.coeff((0, 0)) != 0 or pn.coeff(e1) != pd.coeff((0, 0)):
            raise ValueError("composition rule needs v(0) = 0 and v'(0) = 1")
        num, num_den = d.num.substitute(axis, pn, pd)
        den, den_den = d.den.substitute(axis, pn, pd)
        # both were cleared with their own power of pd; rebalance
        dn, dd = d.num.degree(axis), d.den.degree(axis)
        if dn < dd:
            num = num * pd ** (dd - dn)
        elif dd < dn:
            den = den * pd ** (dn - dd)
        return RationalBivariate(num, den)
    raise TypeError("apply_rule needs a CoeffGrid or a RationalBivariate")


# --- named kernels ------------------------------------------------------------

def trinomial_denominator() -> Poly:
    """1 - x y^2 - 3 x y - x^2 y."""
    return bivariate({(0, 0): 1, (1, 2): -1, (1, 1): -3, (2, 1): -1})


def binomial_kernel(shift: int) -> RationalBivariate:
    """Generating function of binom(i+j+shift, 2i-j) for shift 0 or 1."""
    num = {0: bivariate({(0, 0): 1, (1, 1): -1}), 1: bivariate({(0, 0): 1, (1, 0): 1})}[shift]
    return RationalBivariate(num, trinomial_denominator())


def binomial_grid(r: int, size: int) -> CoeffGrid:
    return CoeffGrid.from_function(lambda i, j: binom(i + j + r, 2 * i - j), size)


def recurrence_residual(m: int, n: int) -> Fraction:
    return (binom(m + n, 2 * m - n) - binom(m + n - 3, 2 * m - n)
            - 3 * binom(m + n - 2, 2 * m - n - 1) - binom(m + n - 3, 2 * m - n - 3))


def e_r_numerator(r: int, size: int) -> CoeffGrid:
    """sum_n [binom(r+n, 2n) + binom(r+n-2, 2n-1) y] x^n as a grid."""
    def entry(i, j):
        if j == 0:
            return gbinom(r + i, 2 * i)
        if j == 1:
            return gbinom(r + i - 2, 2 * i - 1)
        return 0
    return CoeffGrid.from_function(entry, size)


def multiply_by_poly(grid: CoeffGrid, p: Poly) -> CoeffGrid:
    """Truncated product of a grid with a bivariate polynomial."""
    def entry(i, j):
        acc = Fraction(0)
        for (a, b), c in p.terms.items():
            if a <= i and b <= j:
                acc += c * grid[i - a, j - b]
        return acc
    return CoeffGrid.from_function(entry, grid.nx, grid.ny)


def substitution_chain(shift: int, size: int) -> CoeffGrid:
    """The g kernel after x -> x/(1+x)^3, y -> y/(1+y)^3, then the polynomial division.

    shift 0 divides by (1+x)(1+y); shift 1 divides by (1+x)^2 (1+y)^3.
    """
    order = 2 * size + 1
    g = build_series("g", (), order)
    grid = grid_from_series(g, "window0" if shift == 0 else "window1", size)
    v = TruncatedSeries.x(size) * ((1 + TruncatedSeries.x(size)) ** 3).inverse()
    grid = grid.compose(v, 0).compose(v, 1)
    one_x = 1 + TruncatedSeries.x(size)
    px, py = (1, 1) if shift == 0 else (2, 3)
    return grid.multiply((one_x ** px).inverse(), 0).multiply((one_x ** py).inverse(), 1)


def substitution_polynomial_identity() -> bool:
    """Cross-multiplied form of the kernel simplification after substitution.

    With X = x/(1+x)^3 and Y = y/(1+y)^3 and g(X) = 1 + x, the window0 kernel
    becomes (x(1+y)^2 - y(1+x)^2)(1+x)(1+y) / (x(1+y)^3 - y(1+x)^3); the claim
    is that this equals (1-xy)(1+x)(1+y) / (1 - xy^2 - 3xy - x^2y).
    """
    x1, y1 = 1 + X2, 1 + Y2
    lhs_num = (X2 * y1 ** 2 - Y2 * x1 ** 2) * x1 * y1
    lhs_den = X2 * y1 ** 3 - Y2 * x1 ** 3
    rhs_num = (1 - X2 * Y2) * x1 * y1
    return lhs_num * trinomial_denominator() == rhs_num * lhs_den


def asm_grid_route(size: int) -> CoeffGrid:
    """1/((1-x-y)(1-xy)) times (1-x+x^2)/(1-x) in x and (1-y) in y."""
    base = expand_rational(RationalBivariate(
        Poly.const(1, 2), bivariate({(0, 0): 1, (1, 0): -1, (0, 1): -1}) * bivariate({(0, 0): 1, (1, 1): -1})),
        size)
    ux = TruncatedSeries([1, -1, 1], size - 1) / TruncatedSeries([1, -1], size - 1)
    uy = TruncatedSeries([1, -1], size - 1)
    return base.multiply(ux, 0).multiply(uy, 1)


def asm_remark_grid_route(size: int) -> CoeffGrid:
    """1/((1-x-y)(1-xy)) times (1-y+y^2) in y."""
    base = expand_rational(RationalBivariate(
        Poly.const(1, 2), bivariate({(0, 0): 1, (1, 0): -1, (0, 1): -1}) * bivariate({(0, 0): 1, (1, 1): -1})),
        size)
    return base.multiply(TruncatedSeries([1, -1, 1], size - 1), 1)


def gfzzz_polys() -> tuple[Poly, Poly]:
    x, y, z = (Poly.var(k, 3) for k in range(3))
    num = 1 - z - x * y * (1 - 2 * z - x * z)
    den = (1 - 3 * x * y - x * x * y - x * y * y) * (1 - 2 * z + z * z - x * z)
    return num, den


def sample_series(count: int, order: int, seed: int = 2024) -> list[TruncatedSeries]:
    """Deterministic pseudo-random series with constant term 1."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        coeffs = [1] + [Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(order)]
        out.append(TruncatedSeries(coeffs))
    return out


def default_samples(order: int) -> list[TruncatedSeries]:
    return [build_series("g", (), order), build_series("catalan", (), order),
            build_series("s_u", (Fraction(1, 2),), order)] + sample_series(3, order)


def _geometric(c, a: TruncatedSeries) -> TruncatedSeries:
    return (1 - c * a.mul_x()).inverse()


def theorem_checks(name: str, a: TruncatedSeries, c, n: int) -> list[Check]:
    """Hankel-preserving transforms of a series with A(0) = 1, sizes 1..n."""
    c = as_rational(c)
    if a[0] != 1:
        raise ValueError("the transforms need A(0) = 1")
    out = []
    for m in range(1, n + 1):
        if name == "tsame":
            out.append(Check(f"H_{m}(A/(1-cxA)) = H_{m}(A)",
                             hankel_det(a * _geometric(c, a), m), hankel_det(a, m)))
        elif name == "tsame1":
            out.append(Check(f"H_{m}(1/(1-cxA)) = c^{m - 1} H1_{m - 1}(A)",
                             hankel_det(_geometric(c, a), m), c ** (m - 1) * hankel_det(a, m - 1, 1)))
        elif name == "hn1a":
            if c == 1:
                raise ValueError("the H1 transform needs c != 1")
            out.append(Check(f"H1_{m}(A/(1-cA)) = (1-c)^(-2*{m}) H1_{m}(A)",
                             hankel_det(a / (1 - c * a), m, 1), (1 - c) ** (-2 * m) * hankel_det(a, m, 1)))
        else:
            raise ValueError(f"unknown transform identity {name!r}")
    return out


def _u_values(n: int) -> list[Fraction]:
    g = build_series("g", (), 2 * n + 2)
    return [hankel_det(g, m) for m in range(n + 1)]


def _v_values(n: int) -> list[Fraction]:
    g = build_series("g", (), 2 * n + 2)
    return [hankel_det(g, m, 1) for m in range(n + 1)]


def verify_identity(name: str, n: int, params: Sequence = (), samples: Sequence[TruncatedSeries] | None = None) -> list[Check]:
    """Checks of the named determinant identity for every size 1..n.

    params: u for err/sdet (default 1), c for tsame/tsame1/hn1a (default 2),
    r for gen_det/e_r (default 0).  gfzzz ignores params and compares every
    index up to n in all three variables.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    params = [as_rational(p) for p in params]
    sizes = range(1, n + 1)
    out: list[Check] = []
    if name in ("un", "vn"):
        shift = 0 if name == "un" else 1
        hank = _u_values(n) if shift == 0 else _v_values(n)
        closed = expand_rational(binomial_kernel(shift), n)
        direct = binomial_grid(shift, n)
        chain = substitution_chain(shift, n)
        out.append(Check("kernel expansion = binomial array", closed, direct))
        out.append(Check("substituted Hankel kernel = binomial array", chain, direct))
        if shift == 0:
            out.append(Check("kernel simplification (cross-multiplied)", substitution_polynomial_identity(), True))
            bad = [(i, j) for i in range(n + 4) for j in range(n + 4)
                   if recurrence_residual(i, j) != {(0, 0): 1, (1, 1): -1}.get((i, j), 0)]
            out.append(Check("binomial recurrence residuals", bad, []))
        for m in sizes:
            out.append(Check(f"[binomial kernel]_{m}", grid_det(closed, m), hank[m]))
        return out
    if name in ("err", "sdet"):
        u = params[0] if params else Fraction(1)
        if u == 0:
            raise ValueError("u must be nonzero")
        s = build_series("s_u", (u,), 2 * n)
        if name == "err":
            b = build_series("seq_b", (), 2 * n)
            r = build_series("seq_r", (), 2 * n)
            vs = _v_values(n)
            for m in sizes:
                out.append(Check(f"det(b)_{m}", hankel_det(b, m), vs[m]))
                out.append(Check(f"det(r)_{m}", hankel_det(r, m), vs[m]))
                out.append(Check(f"det(s(u))_{m}", hankel_det(s, m), vs[m]))
        else:
            us = _u_values(n)
            for m in sizes:
                out.append(Check(f"det(s_(i+j-1)(u))_{m}", hankel_det(s, m, -1, {-1: 1 / u}), us[m] / u))
        return out
    if name == "rdet":
        r = build_series("seq_r", (), 2 * n)
        us = _u_values(n)
        central = TruncatedSeries([binom(3 * k, k) for k in range(2 * n)])
        for m in sizes:
            out.append(Check(f"det(r_(i+j-1))_{m}", hankel_det(r, m, -1, {-1: Fraction(1, 3)}), us[m] / 3))
            out.append(Check(f"det(binom(3k,k))_{m}", hankel_det(central, m), 3 ** (m - 1) * us[m]))
        return out
    if name in ("tsame", "tsame1", "hn1a"):
        c = params[0] if params else Fraction(2)
        order = 2 * n + 1
        for a in samples if samples is not None else default_samples(order):
            out.extend(theorem_checks(name, a, c, n))
        return out
    if name in ("asm", "asm_remark", "asm1"):
        order = 2 * n
        if name == "asm1":
            chat1 = build_series("chat1", (), order)
            direct = CoeffGrid.from_function(lambda i, j: binom(i + j, i) + (i == j), n)
            kernel = expand_rational(RationalBivariate(
                bivariate({(0, 0): 2, (1, 0): -1, (0, 1): -1, (1, 1): -1}),
                bivariate({(0, 0): 1, (1, 0): -1, (0, 1): -1}) * bivariate({(0, 0): 1, (1, 1): -1})), n)
            out.append(Check("kernel split into two geometric parts", kernel, direct))
            for m in sizes:
                out.append(Check(f"3^-C({m},2) H_{m}(C1)", hankel_det(chat1, m) / 3 ** comb(m, 2),
                                 grid_det(direct, m)))
            return out
        chat = build_series("chat", (), order)
        if name == "asm":
            direct = CoeffGrid.from_function(lambda i, j: binom(i + j, i - 1) + (i == j), n)
            out.append(Check("product-rule grid", asm_grid_route(n), direct))
        else:
            direct = CoeffGrid.from_function(lambda i, j: binom(i + j, i) - (i == j + 1), n)
            out.append(Check("product-rule grid (transposed)", asm_remark_grid_route(n), direct.transpose()))
        for m in sizes:
            count = asm_count(m)
            out.append(Check(f"3^-C({m},2) H_{m}(C)", hankel_det(chat, m) / 3 ** comb(m, 2), count))
            out.append(Check(f"delta determinant {m}", grid_det(direct, m), count))
        return out
    if name == "gen_det":
        r = int(params[0]) if params else 0
        if r < 0:
            raise ValueError("r must be nonnegative")
        grid = binomial_grid(r, n)
        for m in sizes:
            out.append(Check(f"det(binom(i+j+{r},2i-j))_{m}", grid_det(grid, m), mrr_det(m, r)))
        return out
    if name == "gfzzz":
        num, den = gfzzz_polys()
        grids = expand_trivariate(num, den, n + 1, n + 1, n + 1)
        for r, grid in enumerate(grids):
            out.append(Check(f"z^{r} slice", grid, binomial_grid(r, n + 1)))
        return out
    if name == "e_r":
        r = int(params[0]) if params else 0
        if r < 0:
            raise ValueError("r must be nonnegative")
        size = n + 1
        lhs = multiply_by_poly(binomial_grid(r, size), trinomial_denominator())
        out.append(Check(f"numerator of binom(i+j+{r},2i-j)", lhs, e_r_numerator(r, size)))
        return out
    raise ValueError(f"unknown identity {name!r}; expected one of {IDENTITY_NAMES}")
