"""Exact determinants and characteristic polynomials of small matrices.

Matrices here are plain lists of row lists.  Integer determinants use
fraction-free Bareiss elimination; characteristic polynomials are
recovered by evaluating det(tI - M) at integer points and
interpolating, which stays exact and is fast at the sizes this package
works with (a few dozen rows).
"""

from __future__ import annotations

import math
from fractions import Fraction

from .ratpoly import RatPoly


def det_int(rows: list[list[int]]) -> int:
    """Determinant of a square integer matrix (Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def charpoly_int(rows: list[list[int]]) -> RatPoly:
    """Monic characteristic polynomial det(xI - M) of an integer matrix."""
    n = len(rows)
    if n == 0:
        return RatPoly.one()
    values = []
    for t in range(n + 1):
        shifted = [[(t if i == j else 0) - rows[i][j] for j in range(n)]
                   for i in range(n)]
        values.append(det_int(shifted))
    return _interpolate(list(range(n + 1)), values)


def charpoly_rat(rows: list[list[Fraction]]) -> RatPoly:
    """Monic characteristic polynomial of a rational matrix.

    Scales to an integer matrix: if M = R*l then
    det(xI - R) = det((lx)I - M) / l^n.
    """
    n = len(rows)
    if n == 0:
        return RatPoly.one()
    l = 1
    for row in rows:
        for e in row:
            l = math.lcm(l, Fraction(e).denominator)
    int_rows = [[int(e * l) for e in row] for row in rows]
    p = charpoly_int(int_rows)
    # p(l*x) / l^n
    return p.compose_linear(l, 0).scale(Fraction(1, l ** n))


def _interpolate(xs: list[int], ys: list[int]) -> RatPoly:
    # Lagrange interpolation; result has rational (here integer) coefficients
    total = RatPoly.zero()
    for i, (xi, yi) in enumerate(zip(xs, ys)):
        if yi == 0:
            continue
        num = RatPoly.one()
        den = 1
        for j, xj in enumerate(xs):
            if j == i:
                continue
            num = num * RatPoly((-xj, 1))
            den *= xi - xj
        total = total + num.scale(Fraction(yi, den))
    return total


def mat_mul(a, b):
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    return [[sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m)]
            for i in range(n)]


def mat_identity(n, one=Fraction(1), zero=Fraction(0)):
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def companion_matrix(p: RatPoly) -> list[list[Fraction]]:
    """Companion matrix of a monic polynomial (subdiagonal ones)."""
    if p.is_zero() or p.leading() != 1:
        raise ValueError("companion matrix requires a monic polynomial")
    n = p.degree
    m = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, n):
        m[i][i - 1] = Fraction(1)
    for i in range(n):
        m[i][n - 1] = -p.coeffs[i]
    return m


def kron(a, b):
    """Kronecker product of two square matrices."""
    n, m = len(a), len(b)
    out = [[Fraction(0)] * (n * m) for _ in range(n * m)]
    for i in range(n):
        for j in range(n):
            aij = a[i][j]
            if aij == 0:
                continue
            for k in range(m):
                for l in range(m):
                    out[i * m + k][j * m + l] = aij * b[k][l]
    return out


def kron_sum(a, b):
    """A (x) I + I (x) B, whose eigenvalues are all pairwise sums."""
    n, m = len(a), len(b)
    out = kron(a, mat_identity(m))
    for i in range(n):
        for k in range(m):
            for l in range(m):
                out[i * m + k][i * m + l] += b[k][l]
    return out
