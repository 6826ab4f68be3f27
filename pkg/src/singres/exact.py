"""Exact integer and rational linear algebra on small dense matrices.

Everything here works on lists of Python ints (or Fractions for the solve
output) so there is no overflow and no rounding.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def leading_minors(m: Sequence[Sequence[int]]) -> list[int]:
    """Return det(M_1), ..., det(M_n) for the leading principal submatrices.

    Uses Bareiss fraction-free elimination without pivoting; when a pivot
    vanishes the remaining minors are recomputed one by one so the returned
    list is always complete.
    """
    n = len(m)
    a = [list(map(int, row)) for row in m]
    minors: list[int] = []
    prev = 1
    for k in range(n):
        pivot = a[k][k]
        minors.append(pivot)
        if pivot == 0:
            # elimination breaks down; fall back to independent determinants
            minors.extend(determinant([row[: j + 1] for row in m[: j + 1]]) for j in range(k + 1, n))
            return minors
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return minors


def determinant(m: Sequence[Sequence[int]]) -> int:
    """Exact determinant by Bareiss elimination with row pivoting."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
        prev = pivot
    return sign * a[n - 1][n - 1]


def is_negative_definite_matrix(m: Sequence[Sequence[int]]) -> bool:
    """Sylvester's criterion: (-1)^k det(M_k) > 0 for every k."""
    return all((-1) ** (k + 1) * d > 0 for k, d in enumerate(leading_minors(m)))


def solve(m: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction]:
    """Solve M x = b exactly for nonsingular integer M.

    Forward elimination is fraction-free (Bareiss on the augmented matrix);
    only the back substitution introduces Fractions.
    """
    n = len(m)
    if len(b) != n or any(len(row) != n for row in m):
        raise ValueError("solve needs a square system")
    a = [list(map(int, row)) + [int(bi)] for row, bi in zip(m, b)]
    prev = 1
    for k in range(n):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    break
            else:
                raise ZeroDivisionError("singular matrix")
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n + 1):
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    x: list[Fraction] = [Fraction(0)] * n
    for i in range(n - 1, -1, -1):
        s = Fraction(a[i][n])
        for j in range(i + 1, n):
            s -= a[i][j] * x[j]
        x[i] = s / a[i][i]
    return x
