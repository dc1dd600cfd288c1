"""Truncated univariate power series over the rationals and the named series."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from .checks import Check
from .exact_core import CapExceeded, as_rational, binom, gbinom, max_order, pochhammer

SERIES_NAMES = ("g", "f", "g_r", "f_r", "catalan", "chat", "chat1", "s_u",
                "seq_a", "seq_b", "seq_c", "seq_d", "seq_e", "seq_r", "hyp2f1")


class TruncatedSeries:
    """Coefficients c_0..c_order of a power series; higher terms are unknown.

    Binary operations keep the smaller of the two orders, so a coefficient is
    only ever reported when both operands determine it.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [as_rational(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be nonnegative")
            cs = (cs + [Fraction(0)] * (order + 1))[: order + 1]
        if not cs:
            raise ValueError("a truncated series needs at least the constant term")
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, c, order: int) -> "TruncatedSeries":
        return cls([c], order)

    @classmethod
    def x(cls, order: int) -> "TruncatedSeries":
        return cls([0, 1], order)

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n):
        if isinstance(n, slice):
            return self.coeffs[n]
        if n < 0:
            return Fraction(0)
        if n > self.order:
            raise IndexError(f"coefficient {n} is beyond truncation order {self.order}")
        return self.coeffs[n]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs[:8])
        more = ", ..." if self.order >= 8 else ""
        return f"TruncatedSeries([{body}{more}], order={self.order})"

    def __eq__(self, other) -> bool:
        if isinstance(other, TruncatedSeries):
            return self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def truncate(self, order: int) -> "TruncatedSeries":
        if order > self.order:
            raise ValueError(f"cannot extend order {self.order} to {order}")
        return TruncatedSeries(self.coeffs[: order + 1])

    def agrees(self, other: "TruncatedSeries", order: int | None = None) -> bool:
        """Coefficientwise equality up to ``order`` (default: the common order)."""
        top = min(self.order, other.order) if order is None else order
        if top > min(self.order, other.order):
            raise ValueError("comparison order exceeds a truncation order")
        return self.coeffs[: top + 1] == other.coeffs[: top + 1]

    def _coerce(self, other) -> "TruncatedSeries":
        if isinstance(other, TruncatedSeries):
            return other
        return TruncatedSeries.constant(other, self.order)

    def __add__(self, other):
        other = self._coerce(other)
        n = min(self.order, other.order)
        return TruncatedSeries([self.coeffs[k] + other.coeffs[k] for k in range(n + 1)])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries([-c for c in self.coeffs])

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = as_rational(other)
            return TruncatedSeries([c * a for a in self.coeffs])
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = [Fraction(0)] * (n + 1)
        for i in range(n + 1):
            ai = a[i]
            if ai:
                for j in range(n + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; needs a nonzero constant term."""
        a = self.coeffs
        if a[0] == 0:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        inv0 = 1 / a[0]
        out = [inv0]
        for n in range(1, len(a)):
            s = sum((a[k] * out[n - k] for k in range(1, n + 1)), Fraction(0))
            out.append(-s * inv0)
        return TruncatedSeries(out)

    def __truediv__(self, other):
        if not isinstance(other, TruncatedSeries):
            c = as_rational(other)
            if c == 0:
                raise ZeroDivisionError("division by zero scalar")
            return TruncatedSeries([a / c for a in self.coeffs])
        n = min(self.order, other.order)
        return self.truncate(n) * other.truncate(n).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("only nonnegative integer powers are supported")
        result = TruncatedSeries.constant(1, self.order)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_x(self, k: int = 1) -> "TruncatedSeries":
        """x^k times the series, keeping the same order."""
        return TruncatedSeries([Fraction(0)] * k + list(self.coeffs[: len(self.coeffs) - k]))

    def div_x(self, k: int = 1) -> "TruncatedSeries":
        """Exact division by x^k; the order drops by k."""
        if any(self.coeffs[:k]):
            raise ValueError(f"series is not divisible by x^{k}")
        if k > self.order:
            raise ValueError("division by x leaves no known coefficients")
        return TruncatedSeries(self.coeffs[k:])

    def derivative(self) -> "TruncatedSeries":
        if self.order == 0:
            raise ValueError("derivative of an order-0 series has no known coefficients")
        return TruncatedSeries([k * self.coeffs[k] for k in range(1, len(self.coeffs))])

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """self(inner(x)); the inner series must have zero constant term."""
        if inner.coeffs[0] != 0:
            raise ValueError("composition needs an inner series with zero constant term")
        n = min(self.order, inner.order)
        inner = inner.truncate(n)
        result = TruncatedSeries.constant(self.coeffs[n] if n <= self.order else 0, n)
        for k in range(n - 1, -1, -1):
            result = result * inner + self.coeffs[k]
        return result

    def revert(self) -> "TruncatedSeries":
        """Compositional inverse, computed by Lagrange inversion.

        With A = x / G(x), the inverse h solves h = x G(h) and
        [x^n] h = (1/n) [t^(n-1)] G(t)^n.
        """
        a = self.coeffs
        if a[0] != 0 or self.order < 1 or a[1] == 0:
            raise ValueError("reversion needs A(0) = 0 and A'(0) != 0")
        n = self.order
        # G = x / A, known to order n - 1
        g = self.div_x().inverse()
        out = [Fraction(0)]
        power = TruncatedSeries.constant(1, n - 1)
        for k in range(1, n + 1):
            power = power * g
            out.append(power.coeffs[k - 1] / k)
        return TruncatedSeries(out)


def series_arith(op: str, a: TruncatedSeries, b: TruncatedSeries | None = None) -> TruncatedSeries:
    """Dispatch one of add, sub, mul, div, compose, revert."""
    if op == "revert":
        return a.revert()
    if b is None:
        raise ValueError(f"{op} needs two operands")
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        if b.coeffs[0] == 0:
            raise ZeroDivisionError("division by a series with zero constant term")
        return a / b
    if op == "compose":
        return a.compose(b)
    raise ValueError(f"unknown series operation {op!r}")


# --- named series -----------------------------------------------------------

def _fixed_point_f(r: int, order: int) -> TruncatedSeries:
    """Solve f = x (1 + f)^(r+1) by iteration; pass k fixes coefficient k."""
    f = TruncatedSeries.constant(0, 0)
    for k in range(1, order + 1):
        prev = TruncatedSeries(list(f.coeffs) + [0])
        f = ((1 + prev) ** (r + 1)).mul_x()
    return TruncatedSeries(f.coeffs, order)


def r_ary_coefficient(r: int, n: int) -> Fraction:
    """Number of (r+1)-ary trees with n nodes, binom((r+1)n, n)/(rn+1)."""
    return binom((r + 1) * n, n) / (r * n + 1)


def s_coefficient(u, n: int) -> Fraction:
    """s_n(u) = sum_k (k+1)/(n+1) binom(3n-k+1, n-k) u^k."""
    u = as_rational(u)
    return sum((Fraction(k + 1, n + 1) * binom(3 * n - k + 1, n - k) * u ** k
                for k in range(n + 1)), Fraction(0))


def _binomial_power(alpha: Fraction, z: Fraction, order: int) -> TruncatedSeries:
    """(1 + z x)^alpha as a series."""
    return TruncatedSeries([gbinom(alpha, k) * z ** k for k in range(order + 1)])


def _chat(power: Fraction, order: int) -> TruncatedSeries:
    numer = 1 - _binomial_power(power, Fraction(-9), order + 1)
    assert numer.coeffs[0] == 0
    return numer.div_x() / 3


def hyp2f1(a, b, c, rho, order: int) -> TruncatedSeries:
    """sum (a)_n (b)_n / (n! (c)_n) (rho x)^n."""
    a, b, c, rho = map(as_rational, (a, b, c, rho))
    out = []
    term = Fraction(1)
    for n in range(order + 1):
        out.append(term)
        denom = (n + 1) * (c + n)
        if n < order and denom == 0:
            raise ZeroDivisionError(f"(c)_n vanishes at n={n + 1} for c={c}")
        if n < order:
            term = term * (a + n) * (b + n) * rho / denom
    return TruncatedSeries(out)


@lru_cache(maxsize=256)
def _build(name: str, params: tuple, order: int) -> TruncatedSeries:
    if name == "f":
        return _fixed_point_f(2, order)
    if name == "g":
        return 1 + _build("f", (), order)
    if name == "f_r":
        (r,) = params
        r = int(r)
        if r < 1:
            raise ValueError("f_r needs r >= 1")
        return _fixed_point_f(r, order)
    if name == "g_r":
        (r,) = params
        return 1 + _build("f_r", (int(r),), order)
    if name == "catalan":
        return _build("g_r", (1,), order)
    if name == "chat":
        return _chat(Fraction(1, 3), order)
    if name == "chat1":
        return _chat(Fraction(2, 3), order)
    if name == "s_u":
        (u,) = params
        return TruncatedSeries([s_coefficient(u, n) for n in range(order + 1)])
    if name == "seq_r":
        return TruncatedSeries([binom(3 * n + 2, n) for n in range(order + 1)])
    if name.startswith("seq_"):
        one_f = _build("g", (), order)
        f = one_f - 1
        factors = {"seq_a": 1, "seq_b": one_f, "seq_c": 2 + f, "seq_d": 2 - f, "seq_e": 5 + 2 * f}
        if name not in factors:
            raise ValueError(f"unknown sequence {name!r}")
        return one_f * factors[name]
    if name == "hyp2f1":
        a, b, c, rho = params
        return hyp2f1(a, b, c, rho, order)
    raise ValueError(f"unknown series {name!r}; expected one of {SERIES_NAMES}")


def build_series(name: str, params: Sequence = (), order: int = 16) -> TruncatedSeries:
    """Build a named series to the given truncation order.

    Names: g, f (ternary trees), g_r, f_r (params: r), catalan, chat, chat1,
    s_u (params: u), seq_a .. seq_e, seq_r, hyp2f1 (params: a, b, c, rho).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    cap = max_order()
    if order > cap:
        raise CapExceeded(f"order {order} exceeds the truncation cap {cap}")
    key = tuple(as_rational(p) for p in params)
    return _build(name, key, order)


# --- identity checks ----------------------------------------------------------

SERIES_FAMILIES = ("functional_eq", "f_kth", "g_kth", "kth", "tcfs_all", "q41_q45", "fs_expansion")

T = Fraction(27, 4)
F = Fraction

# (a, b, c) with Q(a,b,c|rho x) = 2F1(a,b+1;c+1) / 2F1(a,b;c), and the
# polynomial in f it equals.  Pairs share (a, b) swapped.
GAUSS_CASES = {
    "1a": ((F(2, 3), F(1, 3), F(1, 2)), (1, 1)),
    "2a": ((F(4, 3), F(2, 3), F(3, 2)), (1, 2, 1)),
    "3a": ((F(5, 3), F(4, 3), F(5, 2)), (1, F(3, 2), F(1, 2))),
    "4a": ((F(5, 3), F(4, 3), F(3, 2)), (1, F(1, 2), F(-1, 2))),
    "5a": ((F(2, 3), F(1, 3), F(3, 2)), (1, F(7, 5), F(2, 5))),
    "1b": ((F(1, 3), F(2, 3), F(1, 2)), (1, F(-1, 2))),
    "2b": ((F(2, 3), F(4, 3), F(3, 2)), (1, F(1, 5), F(1, 10))),
    "3b": ((F(4, 3), F(5, 3), F(5, 2)), (1, F(6, 7), F(2, 7))),
    "4b": ((F(4, 3), F(5, 3), F(3, 2)), (1, F(-2, 5), F(2, 5))),
    "5b": ((F(1, 3), F(2, 3), F(3, 2)), (1, F(1, 2), F(1, 7))),
}


def poly_in(series: TruncatedSeries, coeffs: Sequence) -> TruncatedSeries:
    out = TruncatedSeries.constant(0, series.order)
    for c in reversed(coeffs):
        out = out * series + c
    return out


def gauss_case_check(tag: str, order: int) -> Check:
    """Cross-multiplied check N = P(f) * D for one of the ten Gauss cases."""
    (a, b, c), poly = GAUSS_CASES[tag]
    f = build_series("f", (), order)
    num = hyp2f1(a, b + 1, c + 1, T, order)
    den = hyp2f1(a, b, c, T, order)
    return Check(f"quotient {tag}", num, poly_in(f, poly) * den)


def _hyper_evaluations(order: int) -> dict[str, tuple[TruncatedSeries, TruncatedSeries]]:
    f = build_series("f", (), order)
    g = 1 + f
    inv = (1 - 2 * f).inverse()
    hyp = lambda a, b, c: hyp2f1(a, b, c, T, order)  # noqa: E731
    return {
        "g0": (hyp(F(1, 3), F(2, 3), F(3, 2)), g),
        "g1": (hyp(F(1, 3), F(2, 3), F(1, 2)), g * inv),
        "g2": (hyp(F(4, 3), F(2, 3), F(3, 2)), g ** 2 * inv),
        "q41": (hyp(F(2, 3), F(4, 3), F(5, 2)), g ** 2 * (1 + F(2, 5) * f)),
        "q42": (hyp(F(4, 3), F(5, 3), F(5, 2)), g ** 4 * inv),
        "q43": (hyp(F(5, 3), F(7, 3), F(7, 2)), g ** 5 * (1 + F(1, 2) * f) * inv),
        "q44": (hyp(F(4, 3), F(5, 3), F(3, 2)), g ** 4 * inv ** 3),
        "q45": (hyp(F(5, 3), F(7, 3), F(5, 2)), g ** 5 * (1 - F(1, 2) * f) * inv ** 3),
    }


def verify_series_identities(family: str, order: int = 16, params: Sequence = ()) -> list[Check]:
    """Check a family of series identities coefficientwise to ``order``.

    Returns one :class:`Check` per individual identity.  Params:
    functional_eq takes the r values to test (default 1..4), the k-th power
    families take (k_min, k_max) (default 1..4), fs_expansion takes u.
    """
    if family == "functional_eq":
        rs = [int(p) for p in params] or [1, 2, 3, 4]
        g = build_series("g", (), order)
        out = [Check("g=1+xg^3", g, 1 + (g ** 3).mul_x())]
        for r in rs:
            fr = build_series("f_r", (r,), order)
            out.append(Check(f"f_r=x(1+f_r)^{r + 1}, r={r}", fr, ((1 + fr) ** (r + 1)).mul_x()))
            closed = TruncatedSeries([r_ary_coefficient(r, n) for n in range(order + 1)])
            out.append(Check(f"g_r closed form, r={r}", 1 + fr, closed))
        return out
    if family in ("f_kth", "g_kth", "kth"):
        k_lo, k_hi = (int(params[0]), int(params[1])) if params else (1, 4)
        f = build_series("f", (), order)
        out = []
        for k in range(k_lo, k_hi + 1):
            if family == "f_kth":
                lhs = f ** k
                rhs = [F(k, n) * binom(3 * n, n - k) if n >= k and k else F(int(n == k))
                       for n in range(order + 1)]
            elif family == "g_kth":
                lhs = (1 + f) ** k
                rhs = [F(k, 3 * n + k) * binom(3 * n + k, n) if k else F(int(n == 0))
                       for n in range(order + 1)]
            else:
                lhs = (1 + f) ** (k + 1) / (1 - 2 * f)
                rhs = [binom(3 * n + k, n) for n in range(order + 1)]
            out.append(Check(f"{family}, k={k}", lhs, TruncatedSeries(rhs)))
        return out
    if family == "tcfs_all":
        return [gauss_case_check(tag, order) for tag in GAUSS_CASES]
    if family == "q41_q45":
        return [Check(tag, lhs, rhs) for tag, (lhs, rhs) in _hyper_evaluations(order).items()]
    if family == "fs_expansion":
        (u,) = params or (1,)
        u = as_rational(u)
        f = build_series("f", (), order + 1)
        lhs = f.div_x() / (1 + (1 - u) * f.truncate(order))
        return [Check(f"fs_expansion, u={u}", lhs, build_series("s_u", (u,), order))]
    raise ValueError(f"unknown series family {family!r}; expected one of {SERIES_FAMILIES}")
