"""Exact scalars, binomial conventions and the closed-form product formulas.

Every quantity in the package is a :class:`fractions.Fraction`; integers are
accepted wherever a rational is and are promoted on first arithmetic.
"""

from __future__ import annotations

import os
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial as _factorial

Rational = Fraction

CLOSED_FORM_NAMES = ("typea", "typeb", "asm", "mrr_det", "binom_det", "id1", "id2", "m_symm")

FACTORIAL_CAP = 1000
DEFAULT_MAX_ORDER = 64


class CapExceeded(ValueError):
    """A request is larger than the configured feasibility cap."""


def max_order() -> int:
    """Truncation cap for series, overridable through ``HANKEL_LAB_MAX_ORDER``."""
    raw = os.environ.get("HANKEL_LAB_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"HANKEL_LAB_MAX_ORDER must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError("HANKEL_LAB_MAX_ORDER must be nonnegative")
    return value


def as_rational(value) -> Fraction:
    """Parse ints, Fractions and strings such as ``"7/2"`` or ``"-2"``."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floats are not accepted; pass an exact rational")
    return Fraction(value)


def fmt(value) -> str:
    """Serialize a rational as ``p`` or ``p/q``."""
    value = as_rational(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@lru_cache(maxsize=None)
def _fact(n: int) -> int:
    return _factorial(n)


def factorial(n: int) -> int:
    if n < 0:
        raise ValueError(f"factorial of negative integer {n}")
    if n <= FACTORIAL_CAP:
        return _fact(n)
    return _factorial(n)


def binom(a: int, b: int) -> Fraction:
    """Binomial coefficient, zero when either argument is negative or b > a."""
    if a < 0 or b < 0 or b > a:
        return Fraction(0)
    return Fraction(comb(a, b))


def gbinom(a, b: int) -> Fraction:
    """Polynomial binomial a(a-1)...(a-b+1)/b!, zero for b < 0.

    Agrees with :func:`binom` for a >= 0 but is nonzero for negative integer
    ``a`` (``gbinom(-1, 1) == -1``).
    """
    if b < 0:
        return Fraction(0)
    a = as_rational(a)
    num = Fraction(1)
    for k in range(b):
        num *= a - k
    return num / factorial(b)


def pochhammer(u, n: int) -> Fraction:
    """Rising factorial u(u+1)...(u+n-1)."""
    if n < 0:
        raise ValueError("pochhammer length must be nonnegative")
    u = as_rational(u)
    out = Fraction(1)
    for k in range(n):
        out *= u + k
    return out


def asm_count(n: int) -> Fraction:
    """Number of n x n alternating sign matrices."""
    out = Fraction(1)
    for k in range(n):
        out *= Fraction(factorial(3 * k + 1), factorial(n + k))
    return out


def _typea(n: int) -> Fraction:
    out = Fraction(1)
    for i in range(1, n):
        out *= Fraction((3 * i + 1) * factorial(6 * i) * factorial(2 * i),
                        factorial(4 * i + 1) * factorial(4 * i))
    return out


def _typeb(n: int) -> Fraction:
    out = Fraction(1)
    for i in range(1, n + 1):
        out *= binom(6 * i - 2, 2 * i) / (2 * binom(4 * i - 1, 2 * i))
    return out


def mrr_det(n: int, r: int) -> Fraction:
    """Product evaluation of det(binom(i+j+r, 2i-j)) for 0 <= i, j < n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return Fraction(1)
    sign = -1 if n % 4 == 3 else 1
    out = Fraction(sign * 2 ** comb(n - 1, 2))
    for i in range(1, n):
        out *= pochhammer(r + i + 1, (i + 1) // 2)
        out *= pochhammer(Fraction(-r - 3 * n + i) + Fraction(3, 2), i // 2)
        out /= pochhammer(i, i)
    return out


def binom_det_rhs(a: int, ls) -> Fraction:
    """Product side of det(binom(A + L_i + j, L_i + j)), j = 1..n; integer instances only."""
    ls = [int(v) for v in ls]
    n = len(ls)
    args = [l + n for l in ls] + [l + a + 1 for l in ls] + [a + 1 - i for i in range(1, n + 1)]
    if any(v < 0 for v in args):
        raise ValueError("binom_det needs every factorial argument to be a nonnegative integer")
    out = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            out *= ls[i] - ls[j]
    for i in range(n):
        out /= factorial(ls[i] + n)
        out *= factorial(ls[i] + a + 1)
    for i in range(1, n + 1):
        out /= factorial(a + 1 - i)
    return out


def id1_sides(i: int) -> tuple[Fraction, Fraction]:
    """Pochhammer and factorial sides of the U_n ratio identity at index i."""
    lhs = (pochhammer(Fraction(2, 3), i) * pochhammer(Fraction(1, 6), i)
           * pochhammer(Fraction(4, 3), i) * pochhammer(Fraction(5, 6), i)
           / (pochhammer(Fraction(1, 2), 2 * i) * pochhammer(Fraction(3, 2), 2 * i))
           * Fraction(27, 4) ** (2 * i))
    rhs = Fraction((3 * i + 1) * factorial(6 * i) * factorial(2 * i),
                   factorial(4 * i + 1) * factorial(4 * i))
    return lhs, rhs


def id2_sides(i: int) -> tuple[Fraction, Fraction]:
    """Pochhammer and binomial sides of the V_n ratio identity at index i.

    The binomials use the polynomial convention so that i = 0 is defined.
    """
    lhs = (Fraction(2, 3) * pochhammer(Fraction(2, 3), i) * pochhammer(Fraction(1, 6), i)
           * pochhammer(Fraction(1, 3), i) * pochhammer(Fraction(-1, 6), i)
           / (pochhammer(Fraction(1, 2), 2 * i) * pochhammer(Fraction(-1, 2), 2 * i))
           * Fraction(27, 4) ** (2 * i))
    rhs = gbinom(6 * i - 2, 2 * i) / (2 * gbinom(4 * i - 1, 2 * i))
    return lhs, rhs


def lattice_b(a: int, b: int) -> Fraction:
    """B(a, b) = binom(a+b, b), the number of normal paths with displacement (a, b)."""
    if a < 0 or b < 0:
        return Fraction(0)
    return Fraction(comb(a + b, b))


def m_value(a: int, b: int) -> Fraction:
    """M(a,b) = B(a+2,b-4) + 3B(a+1,b-2) + 3B(a,b) + B(a-1,b+2)."""
    return (lattice_b(a + 2, b - 4) + 3 * lattice_b(a + 1, b - 2)
            + 3 * lattice_b(a, b) + lattice_b(a - 1, b + 2))


def closed_form(name: str, params) -> Fraction:
    """Evaluate one of the named closed forms.

    ``typea``/``typeb``/``asm`` take ``(n,)``, ``mrr_det`` takes ``(n, r)``,
    ``binom_det`` takes ``(A, L_1, ..., L_n)``, ``id1``/``id2`` take
    ``(i_max,)`` and return 1 when both sides agree for 1 <= i <= i_max,
    ``m_symm`` takes ``(a, b)`` and returns 1 iff M(a,b) == M(b,a).
    """
    params = [int(p) for p in params]
    if name == "typea":
        (n,) = params
        _need(n >= 1, "typea needs n >= 1")
        return _typea(n)
    if name == "typeb":
        (n,) = params
        _need(n >= 1, "typeb needs n >= 1")
        return _typeb(n)
    if name == "asm":
        (n,) = params
        _need(n >= 1, "asm needs n >= 1")
        return asm_count(n)
    if name == "mrr_det":
        n, r = params
        _need(n >= 1 and r >= 0, "mrr_det needs n >= 1 and r >= 0")
        return mrr_det(n, r)
    if name == "binom_det":
        _need(len(params) >= 2, "binom_det needs A and at least one L")
        return binom_det_rhs(params[0], params[1:])
    if name in ("id1", "id2"):
        (i_max,) = params
        _need(i_max >= 1, f"{name} needs i_max >= 1")
        sides = id1_sides if name == "id1" else id2_sides
        return Fraction(int(all(l == r for l, r in map(sides, range(1, i_max + 1)))))
    if name == "m_symm":
        a, b = params
        _need(a >= 0 and b >= 0 and a + b >= 2, "m_symm needs a, b >= 0 and a + b >= 2")
        return Fraction(int(m_value(a, b) == m_value(b, a)))
    raise ValueError(f"unknown closed form {name!r}; expected one of {CLOSED_FORM_NAMES}")


def _need(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)
