"""Small dense exact linear algebra over Fractions (and over any ring for products)."""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Sequence

from .scalars import CQ, as_fraction

Matrix = list[list[Fraction]]


def to_matrix(rows: Sequence[Sequence]) -> Matrix:
    out = [[as_fraction(x) for x in row] for row in rows]
    n = len(out)
    if any(len(r) != len(out[0]) for r in out) and n:
        raise ValueError("ragged matrix")
    return out


def identity(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(a, b, zero=0):
    """Product of dense matrices over any ring supporting ``+`` and ``*``."""
    n, k = len(a), len(b)
    if n and len(a[0]) != k:
        raise ValueError("matrix dimensions do not match")
    p = len(b[0]) if k else 0
    out = []
    for i in range(n):
        row = []
        for j in range(p):
            acc = zero
            for t in range(k):
                acc = acc + a[i][t] * b[t][j]
            row.append(acc)
        out.append(row)
    return out


def det(m: Matrix) -> Fraction:
    """Determinant by fraction-exact Gaussian elimination."""
    a = [list(r) for r in m]
    n = len(a)
    sign = 1
    result = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            a[c], a[piv] = a[piv], a[c]
            sign = -sign
        p = a[c][c]
        result *= p
        for r in range(c + 1, n):
            f = a[r][c] / p
            if f:
                for k in range(c, n):
                    a[r][k] -= f * a[c][k]
    return result * sign


def inverse(m: Matrix) -> Matrix:
    n = len(m)
    a = [list(r) + identity(n)[i] for i, r in enumerate(m)]
    for c in range(n):
        piv = next((r for r in range(c, n) if a[r][c]), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[c], a[piv] = a[piv], a[c]
        p = a[c][c]
        a[c] = [x / p for x in a[c]]
        for r in range(n):
            if r != c and a[r][c]:
                f = a[r][c]
                a[r] = [x - f * y for x, y in zip(a[r], a[c])]
    return [row[n:] for row in a]


def leading_minors(m: Matrix) -> list[Fraction]:
    return [det([row[:k] for row in m[:k]]) for k in range(1, len(m) + 1)]


def is_positive_definite(m: Matrix) -> bool:
    """Sylvester's criterion for a symmetric rational matrix."""
    return all(d > 0 for d in leading_minors(m))


def pfaffian(m: Matrix) -> Fraction:
    """Pfaffian by recursive expansion along the first row."""
    n = len(m)
    if n % 2:
        raise ValueError(f"Pfaffian of odd-dimensional matrix ({n}x{n})")
    return _pf(tuple(tuple(r) for r in m), tuple(range(n)))


def _pf(m, idx: tuple[int, ...]) -> Fraction:
    if not idx:
        return Fraction(1)
    first, rest = idx[0], idx[1:]
    total = Fraction(0)
    for k, j in enumerate(rest):
        a = m[first][j]
        if a:
            sub = rest[:k] + rest[k + 1 :]
            term = a * _pf(m, sub)
            total += term if k % 2 == 0 else -term
    return total


def rational_sqrt(x) -> CQ:
    """Exact square root of a rational square (negative squares give ``i*r``)."""
    q = as_fraction(x)
    neg = q < 0
    q = -q if neg else q
    a, b = isqrt(q.numerator), isqrt(q.denominator)
    if a * a != q.numerator or b * b != q.denominator:
        raise ValueError(f"{x} is not the square of a rational number")
    r = Fraction(a, b)
    return CQ(0, r) if neg else CQ(r)


def is_antisymmetric(m: Matrix) -> bool:
    n = len(m)
    return all(len(r) == n for r in m) and all(m[i][j] == -m[j][i] for i in range(n) for j in range(n))


def is_symmetric(m: Matrix) -> bool:
    n = len(m)
    return all(len(r) == n for r in m) and all(m[i][j] == m[j][i] for i in range(n) for j in range(n))
