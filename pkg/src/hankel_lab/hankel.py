"""Exact determinants and Hankel windows of truncated series."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Mapping, Sequence

from .exact_core import as_rational
from .series import TruncatedSeries


class RationalMatrix:
    """Dense row-major matrix of Fractions."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: Sequence[Sequence]):
        data = [[as_rational(v) for v in row] for row in rows]
        widths = {len(r) for r in data}
        if len(widths) > 1:
            raise ValueError("ragged matrix rows")
        self.rows = len(data)
        self.cols = widths.pop() if widths else 0
        self.entries = tuple(v for row in data for v in row)

    def row(self, i: int) -> list:
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_lists(self) -> list[list]:
        return [self.row(i) for i in range(self.rows)]

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch in matrix product")
        b = other.to_lists()
        return RationalMatrix([
            [sum((a_ik * b[k][j] for k, a_ik in enumerate(self.row(i))), Fraction(0))
             for j in range(other.cols)]
            for i in range(self.rows)
        ])

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix([[self[i, j] for i in range(self.rows)] for j in range(self.cols)])

    def __repr__(self):
        return f"RationalMatrix({self.to_lists()!r})"


def _as_lists(m) -> list[list[Fraction]]:
    if isinstance(m, RationalMatrix):
        return m.to_lists()
    return [[as_rational(v) for v in row] for row in m]


def _bareiss(a: list[list[int]]) -> int:
    """Fraction-free elimination on an integer matrix, with row swaps."""
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            row_i, row_k = a[i], a[k]
            aik = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - aik * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def _gauss(a: list[list[Fraction]]) -> Fraction:
    """Rational elimination taking the first nonzero pivot."""
    n = len(a)
    det = Fraction(1)
    for k in range(n):
        p = next((i for i in range(k, n) if a[i][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            det = -det
        pivot = a[k][k]
        det *= pivot
        for i in range(k + 1, n):
            f = a[i][k] / pivot
            if f:
                for j in range(k + 1, n):
                    a[i][j] -= f * a[k][j]
    return det


def det_exact(m, method: str = "bareiss") -> Fraction:
    """Exact determinant of a square matrix; the 0x0 determinant is 1.

    ``method`` is ``bareiss`` (integer lift, the default) or ``gauss``.
    """
    rows = _as_lists(m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    if n == 0:
        return Fraction(1)
    if method == "gauss":
        return _gauss([list(r) for r in rows])
    if method != "bareiss":
        raise ValueError(f"unknown determinant method {method!r}")
    scale = 1
    lifted = []
    for r in rows:
        d = lcm(*(v.denominator for v in r))
        scale *= d
        lifted.append([v.numerator * (d // v.denominator) for v in r])
    return Fraction(_bareiss(lifted), scale)


def hankel_matrix(a: TruncatedSeries, n: int, k=0, overrides: Mapping[int, object] | None = None):
    """Rows of (A_{i+j+k}) or, for k == "hat", of (a_{(i+j)/2}) with odd sums 0.

    ``overrides`` supplies entries for coefficient indices below zero.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    overrides = {int(i): as_rational(v) for i, v in (overrides or {}).items()}
    if k == "hat":
        need = n - 1
        if n and a.order < need:
            raise ValueError(f"hat window of size {n} needs order {need}, have {a.order}")

        def entry(i, j):
            s = i + j
            return a[s // 2] if s % 2 == 0 else Fraction(0)
    else:
        k = int(k)
        need = 2 * n - 2 + k
        if n and a.order < need:
            raise ValueError(f"window H_{n}^({k}) needs order {need}, have {a.order}")

        def entry(i, j):
            idx = i + j + k
            if idx < 0:
                if idx not in overrides:
                    raise ValueError(f"coefficient index {idx} needs an explicit override")
                return overrides[idx]
            return a[idx]
    return [[entry(i, j) for j in range(n)] for i in range(n)]


def hankel_det(a: TruncatedSeries, n: int, k=0, overrides: Mapping[int, object] | None = None) -> Fraction:
    """H_n^(k)(A) = det(A_{i+j+k}); ``k="hat"`` gives H_n(A(x^2))."""
    return det_exact(hankel_matrix(a, n, k, overrides))


def verify_hat_split(a: TruncatedSeries, nmax: int) -> bool:
    """Hat(2n) = H_n H^1_n and Hat(2n+1) = H_{n+1} H^1_n for all n <= nmax."""
    for n in range(nmax + 1):
        h, h1, h_next = hankel_det(a, n), hankel_det(a, n, 1), hankel_det(a, n + 1)
        if hankel_det(a, 2 * n, "hat") != h * h1:
            return False
        if hankel_det(a, 2 * n + 1, "hat") != h_next * h1:
            return False
    return True
