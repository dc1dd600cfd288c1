"""Stieltjes continued fractions: extraction, reconstruction and Hankel products."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact_core import as_rational, pochhammer
from .series import TruncatedSeries, hyp2f1

WINDOWS = ("H", "H1", "Hhat")


@dataclass(frozen=True)
class SFraction:
    """Prefix lambda_1..lambda_m of S(x; lambda_1, lambda_2, ...).

    ``terminated`` is set when extraction hit a zero lambda, in which case the
    fraction is exact (the series is rational) and no deeper lambdas exist.
    """

    lambdas: tuple
    terminated: bool = False
    mus: tuple = field(init=False)

    def __post_init__(self):
        lams = tuple(as_rational(v) for v in self.lambdas)
        object.__setattr__(self, "lambdas", lams)
        mus, acc = [], Fraction(1)
        for lam in lams:
            acc *= lam
            mus.append(acc)
        object.__setattr__(self, "mus", tuple(mus))

    @property
    def depth(self) -> int:
        return len(self.lambdas)

    def mu(self, i: int) -> Fraction:
        """mu_i with mu_0 = 1; past a termination every mu is 0."""
        if i == 0:
            return Fraction(1)
        if i <= self.depth:
            return self.mus[i - 1]
        if self.terminated:
            return Fraction(0)
        raise ValueError(f"continued fraction depth {self.depth} is too shallow for mu_{i}")


def extract_sfraction(a: TruncatedSeries, depth: int) -> SFraction:
    """Peel lambdas off A with lambda = [x](1 - 1/A), A <- (1 - 1/A) / (lambda x)."""
    if a[0] != 1:
        raise ValueError("continued fraction extraction needs A(0) = 1")
    if depth > a.order:
        raise ValueError(f"depth {depth} exceeds series order {a.order}")
    lams = []
    cur = a
    for _ in range(depth):
        rest = 1 - cur.inverse()
        if rest.order < 1:
            break
        lam = rest[1]
        if lam == 0:
            return SFraction(tuple(lams), terminated=True)
        lams.append(lam)
        cur = rest.div_x() / lam
    return SFraction(tuple(lams))


def sfraction_to_series(frac: SFraction, order: int) -> TruncatedSeries:
    """Evaluate the finite fraction from the bottom up."""
    tail = TruncatedSeries.constant(1, order)
    x = TruncatedSeries.x(order) if order >= 1 else TruncatedSeries.constant(0, 0)
    for lam in reversed(frac.lambdas):
        tail = (1 - x * tail * lam).inverse()
    return tail


def gauss_lambdas(a, b, c, rho, depth: int) -> SFraction:
    """Lambdas of 2F1(a,b+1;c+1;rho x) / 2F1(a,b;c;rho x), each scaled by rho."""
    a, b, c, rho = map(as_rational, (a, b, c, rho))
    lams = []
    for k in range(1, depth + 1):
        if k % 2:
            n = (k + 1) // 2
            num = (a + n - 1) * (c - b + n - 1)
            den = (c + 2 * n - 2) * (c + 2 * n - 1)
        else:
            n = k // 2
            num = (b + n) * (c - a + n)
            den = (c + 2 * n - 1) * (c + 2 * n)
        if den == 0:
            raise ZeroDivisionError(f"lambda_{k} has a zero denominator for c={c}")
        lams.append(num / den * rho)
    return SFraction(tuple(lams))


def _window_indices(n: int, window: str) -> list[int]:
    if window == "H":
        return [2 * i for i in range(1, n)]
    if window == "H1":
        return [2 * i - 1 for i in range(1, n + 1)]
    if window == "Hhat":
        return list(range(1, n))
    raise ValueError(f"unknown window {window!r}; expected one of {WINDOWS}")


def hankel_from_lambdas(frac: SFraction, n: int, window: str) -> Fraction:
    """H_n, H^1_n or the hat determinant as a product of partial products mu_i."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = Fraction(1)
    for i in _window_indices(n, window):
        out *= frac.mu(i)
    return out


def required_depth(n: int, window: str) -> int:
    idx = _window_indices(n, window)
    return max(idx, default=0)


def _h_product(a, b, c, rho, n):
    out = Fraction(1)
    for i in range(n):
        num = pochhammer(a, i) * pochhammer(b + 1, i) * pochhammer(c - b, i) * pochhammer(c - a + 1, i)
        den = pochhammer(c, 2 * i) * pochhammer(c + 1, 2 * i)
        out *= num / den * rho ** (2 * i)
    return out


def _h1_product(a, b, c, rho, n):
    out = Fraction(1)
    for i in range(1, n + 1):
        num = (pochhammer(a, i) * pochhammer(b + 1, i - 1) * pochhammer(c - b, i)
               * pochhammer(c - a + 1, i - 1))
        den = pochhammer(c, 2 * i - 1) * pochhammer(c + 1, 2 * i - 1)
        out *= num / den * rho ** (2 * i - 1)
    return out


def _h1_alt_product(a, b, c, rho, n):
    out = Fraction(1)
    for i in range(1, n + 1):
        pre = (c - 1) * c / (b * (c - a) * rho)
        num = pochhammer(a, i) * pochhammer(b, i) * pochhammer(c - b, i) * pochhammer(c - a, i)
        den = pochhammer(c, 2 * i) * pochhammer(c - 1, 2 * i)
        out *= pre * num / den * rho ** (2 * i)
    return out


def hankel_closed_form(a, b, c, rho, n: int, window: str) -> Fraction:
    """Pochhammer products for H_n and H^1_n of the Gauss quotient.

    For H1 the second product form is evaluated too whenever it is defined,
    and a disagreement raises ``ArithmeticError``.
    """
    a, b, c, rho = map(as_rational, (a, b, c, rho))
    if n < 0:
        raise ValueError("n must be nonnegative")
    if window == "H":
        return _h_product(a, b, c, rho, n)
    if window != "H1":
        raise ValueError("closed forms exist for windows H and H1 only")
    value = _h1_product(a, b, c, rho, n)
    if alt_form_defined(a, b, c, rho, n):
        alt = _h1_alt_product(a, b, c, rho, n)
        if alt != value:
            raise ArithmeticError(f"H1 product forms disagree: {value} vs {alt}")
    return value


def alt_form_defined(a, b, c, rho, n: int) -> bool:
    a, b, c, rho = map(as_rational, (a, b, c, rho))
    if b == 0 or c == a or rho == 0:
        return False
    return all(c - 1 + k != 0 for k in range(2 * n + 1))


def h2_ratio(a, b, c, rho, n: int) -> Fraction:
    """H^(2)_n of the Gauss quotient via its ratio to H_{n+1}."""
    a, b, c, rho = map(as_rational, (a, b, c, rho))
    if a == b or c == 0 or b == 0 or c == a or c == b:
        raise ValueError("h2_ratio needs a != b and b, c, c - a, c - b nonzero")
    if n == 0:
        return Fraction(1)
    factor = (a * (c - b) / (c * (a - b))
              * pochhammer(a + 1, n) * pochhammer(c - b + 1, n)
              / (pochhammer(b + 1, n) * pochhammer(c - a + 1, n))
              - b * (c - a) / (c * (a - b)))
    return factor * _h_product(a, b, c, rho, n + 1)


def verify_contiguous(a, b, c, order: int) -> bool:
    """Swap relation for Q(a,b,c) = F(a,b+1;c+1)/F(a,b;c), cross-multiplied.

    a(c-b) F(b,a+1;c+1) = c(a-b) F(a,b;c) + b(c-a) F(a,b+1;c+1).
    """
    a, b, c = map(as_rational, (a, b, c))
    if a == b or a == 0 or c == b:
        raise ValueError("the swap relation needs a != b, a != 0 and c != b")
    lhs = a * (c - b) * hyp2f1(b, a + 1, c + 1, 1, order)
    rhs = c * (a - b) * hyp2f1(a, b, c, 1, order) + b * (c - a) * hyp2f1(a, b + 1, c + 1, 1, order)
    return lhs == rhs


def gauss_quotient(a, b, c, rho, order: int) -> TruncatedSeries:
    return hyp2f1(a, as_rational(b) + 1, as_rational(c) + 1, rho, order) / hyp2f1(a, b, c, rho, order)


def lambdas_agree(params: Sequence, depth: int) -> bool:
    """Gauss's lambda formula against extraction from the series quotient."""
    a, b, c, rho = params
    series = gauss_quotient(a, b, c, rho, depth + 1)
    return extract_sfraction(series, depth).lambdas == gauss_lambdas(a, b, c, rho, depth).lambdas
