"""Laurent polynomials in t and constant-term evaluations of T^(r) coefficients."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .checks import Check
from .exact_core import as_rational, binom
from .gf2d import CoeffGrid, Poly, expand_poly_quotient
from .series import TruncatedSeries

CT_NAMES = ("t2ab", "trexpand", "gf_tr0", "s9")


class LaurentPoly:
    """sum c_k t^(low + k), stored densely and trimmed at both ends."""

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Sequence, low: int = 0):
        cs = [as_rational(c) for c in coeffs]
        start = 0
        while start < len(cs) and cs[start] == 0:
            start += 1
        end = len(cs)
        while end > start and cs[end - 1] == 0:
            end -= 1
        if start == end:
            self.low, self.coeffs = 0, ()
        else:
            self.low, self.coeffs = low + start, tuple(cs[start:end])

    @classmethod
    def monomial(cls, k: int, c=1) -> "LaurentPoly":
        return cls([c], k)

    @classmethod
    def from_dict(cls, terms: dict) -> "LaurentPoly":
        if not terms:
            return cls([])
        lo, hi = min(terms), max(terms)
        return cls([terms.get(k, 0) for k in range(lo, hi + 1)], lo)

    @property
    def high(self) -> int:
        return self.low + len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        idx = k - self.low
        if 0 <= idx < len(self.coeffs):
            return self.coeffs[idx]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, LaurentPoly):
            return (self.low, self.coeffs) == (other.low, other.coeffs)
        return NotImplemented

    def __hash__(self):
        return hash((self.low, self.coeffs))

    def __repr__(self):
        return f"LaurentPoly({[str(c) for c in self.coeffs]}, low={self.low})"

    def _lift(self, other) -> "LaurentPoly":
        return other if isinstance(other, LaurentPoly) else LaurentPoly([other])

    def __add__(self, other):
        other = self._lift(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        lo = min(self.low, other.low)
        hi = max(self.high, other.high)
        return LaurentPoly([self.coeff(k) + other.coeff(k) for k in range(lo, hi + 1)], lo)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly([-c for c in self.coeffs], self.low)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __mul__(self, other):
        other = self._lift(other)
        if self.is_zero() or other.is_zero():
            return LaurentPoly([])
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return LaurentPoly(out, self.low + other.low)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers of Laurent polynomials are not polynomials")
        out = LaurentPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def shift(self, k: int) -> "LaurentPoly":
        """t^k times the polynomial."""
        return LaurentPoly(self.coeffs, self.low + k)


def ct(p: LaurentPoly) -> Fraction:
    """Constant term."""
    return p.coeff(0)


def alpha(r: int) -> LaurentPoly:
    """1 + t + ... + t^r."""
    return LaurentPoly([1] * (r + 1))


def beta(r: int) -> LaurentPoly:
    """1 + t^-1 + ... + t^-r."""
    return LaurentPoly([1] * (r + 1), -r)


@lru_cache(maxsize=None)
def _alpha_power(r: int, m: int) -> LaurentPoly:
    return alpha(r) ** m


def trinomial_r(a: int, b: int, r: int) -> Fraction:
    """T^(r)(a, b) = [x^a y^b](x^r + x^(r-1) y + ... + y^r)^((a+b)/r).

    Evaluated as CT t^(-b) alpha^m with m = (a+b)/r.  For r = 0 the only
    nonzero value is T^(0)(0, 0) = 1.
    """
    if r < 0:
        raise ValueError("r must be nonnegative")
    if a < 0 or b < 0:
        return Fraction(0)
    if r == 0:
        return Fraction(int(a == 0 and b == 0))
    if (a + b) % r:
        return Fraction(0)
    m = (a + b) // r
    return ct(_alpha_power(r, m).shift(-b))


def trinomial_ct(i: int, j: int, s: int, r: int) -> Fraction:
    """CT t^s alpha^i beta^j, which equals T^(r)(ri+s, rj-s)."""
    if i < 0 or j < 0:
        return Fraction(0)
    return ct((alpha(r) ** i * beta(r) ** j).shift(s))


def trinomial_sum(a: int, b: int) -> Fraction:
    """sum_k binom(n,k) binom(k, a-k), n = (a+b)/2."""
    if (a + b) % 2:
        return Fraction(0)
    n = (a + b) // 2
    return sum((binom(n, k) * binom(k, a - k) for k in range(n + 1)), Fraction(0))


def trexpand_rhs(i: int, m: int, r: int) -> Fraction:
    """sum_j binom(m, j) T^(r-1)(rj - i, i - j)."""
    return sum((binom(m, j) * trinomial_r(r * j - i, i - j, r - 1) for j in range(m + 1)), Fraction(0))


def _divided_difference(p: list) -> Poly:
    """(p(x) - p(y)) / (x - y) for a univariate coefficient list p."""
    terms: dict = {}
    for k, c in enumerate(p):
        for i in range(k):
            e = (i, k - 1 - i)
            terms[e] = terms.get(e, Fraction(0)) + c
    return Poly(terms, 2)


def gf_tr0_grid(r: int, size: int) -> CoeffGrid:
    """Expansion of (x(1-x)^(r-1) - y(1-y)^(r-1)) / (x(1-x)^r - y(1-y)^r).

    Numerator and denominator are both divided by x - y first so that the
    denominator has constant term 1.
    """
    def poly(k):
        # x (1 - x)^k as a coefficient list
        return [0] + [binom(k, i) * (-1) ** i for i in range(k + 1)]

    num = _divided_difference(poly(r - 1))
    den = _divided_difference(poly(r))
    coeffs = expand_poly_quotient(num, den, (size, size))
    return CoeffGrid.from_function(lambda i, j: coeffs[(i, j)], size)


def kernel_grid(r: int, size: int, with_one: bool) -> CoeffGrid:
    """Entries CT (c + t^-1 + .. + t^-r)^i (c + t + .. + t^r)^j with c = 1 or 0."""
    lo = LaurentPoly([1] * (r + 1), -r) if with_one else LaurentPoly([1] * r, -r)
    hi = LaurentPoly([1] * (r + 1)) if with_one else LaurentPoly([1] * r, 1)
    lo_pows = [LaurentPoly([1])]
    hi_pows = [LaurentPoly([1])]
    for _ in range(1, size):
        lo_pows.append(lo_pows[-1] * lo)
        hi_pows.append(hi_pows[-1] * hi)
    return CoeffGrid.from_function(lambda i, j: ct(lo_pows[i] * hi_pows[j]), size)


def s9_grids(r: int, size: int) -> tuple[CoeffGrid, CoeffGrid]:
    """The second kernel, and the third kernel after x -> x/(1-x), y -> y/(1-y) and /(1-x)(1-y)."""
    second = kernel_grid(r, size, True)
    third = kernel_grid(r, size, False)
    x = TruncatedSeries.x(size)
    v = x * (1 - x).inverse()
    u = (1 - x).inverse()
    moved = third.compose(v, 0).compose(v, 1).multiply(u, 0).multiply(u, 1)
    return second, moved


def verify_ct_identity(name: str, caps: Sequence[int] = (6, 6), rs: Sequence[int] | None = None) -> list[Check]:
    """Constant-term identities for indices bounded by ``caps``.

    t2ab: caps (a_max, b_max).  trexpand: caps (m_max,), r in 2..4 by default.
    gf_tr0: caps (i_max, j_max), r in 1..4.  s9: caps (size,), r in 1..4.
    """
    caps = [int(c) for c in caps]
    out: list[Check] = []
    if name == "t2ab":
        amax, bmax = (caps + caps)[:2]
        for a in range(amax + 1):
            for b in range(bmax + 1):
                if (a + b) % 2 == 0:
                    out.append(Check(f"T({a},{b})", trinomial_r(a, b, 2), trinomial_sum(a, b)))
        return out
    if name == "trexpand":
        mmax = caps[0]
        for r in rs or (2, 3, 4):
            for m in range(mmax + 1):
                for i in range(r * m + 1):
                    out.append(Check(f"r={r} T({i},{r * m - i})", trinomial_r(i, r * m - i, r),
                                     trexpand_rhs(i, m, r)))
        return out
    if name == "gf_tr0":
        imax, jmax = (caps + caps)[:2]
        size = max(imax, jmax) + 1
        for r in rs or (1, 2, 3, 4):
            grid = gf_tr0_grid(r, size).crop(imax + 1, jmax + 1)
            direct = CoeffGrid.from_function(lambda i, j: trinomial_r(r * i, r * j, r), imax + 1, jmax + 1)
            out.append(Check(f"r={r} rational kernel", grid, direct))
        return out
    if name == "s9":
        size = caps[0] + 1
        for r in rs or (1, 2, 3, 4):
            second, moved = s9_grids(r, size)
            direct = CoeffGrid.from_function(lambda i, j: trinomial_r(r * i, r * j, r), size)
            third = CoeffGrid.from_function(
                lambda i, j: trinomial_r(r * j - i, r * i - j, r - 1), size)
            out.append(Check(f"r={r} substituted kernel", moved, second))
            out.append(Check(f"r={r} second kernel = T^(r)(ri,rj)", second, direct))
            out.append(Check(f"r={r} third kernel = T^(r-1)(rj-i,ri-j)",
                             kernel_grid(r, size, False), third))
        return out
    raise ValueError(f"unknown constant-term identity {name!r}; expected one of {CT_NAMES}")
