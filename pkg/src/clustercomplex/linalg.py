"""Exact rational linear algebra for small integer matrices.

Everything here works over Fractions; no floating point is used anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def det(matrix: Sequence[Sequence[int]]) -> Fraction:
    """Determinant of a square matrix, by exact Gaussian elimination."""
    n = len(matrix)
    rows = [[Fraction(x) for x in row] for row in matrix]
    sign = 1
    result = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if rows[r][col] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != col:
            rows[col], rows[pivot] = rows[pivot], rows[col]
            sign = -sign
        pv = rows[col][col]
        result *= pv
        for r in range(col + 1, n):
            factor = rows[r][col] / pv
            if factor:
                for c in range(col, n):
                    rows[r][c] -= factor * rows[col][c]
    return sign * result


def rank(vectors: Sequence[Sequence[int]]) -> int:
    """Rank of the span of the given vectors over the rationals."""
    rows = [[Fraction(x) for x in v] for v in vectors]
    rk = 0
    ncols = len(rows[0]) if rows else 0
    for col in range(ncols):
        pivot = next((r for r in range(rk, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rk], rows[pivot] = rows[pivot], rows[rk]
        pv = rows[rk][col]
        for r in range(len(rows)):
            if r != rk and rows[r][col]:
                factor = rows[r][col] / pv
                for c in range(col, ncols):
                    rows[r][c] -= factor * rows[rk][c]
        rk += 1
        if rk == len(rows):
            break
    return rk


def solve_square(matrix: Sequence[Sequence[int]], rhs: Sequence[int]) -> list[Fraction] | None:
    """Solve M x = rhs for square M; None when M is singular."""
    n = len(matrix)
    aug = [[Fraction(x) for x in row] + [Fraction(rhs[i])] for i, row in enumerate(matrix)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            return None
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        for r in range(n):
            if r != col and aug[r][col]:
                factor = aug[r][col] / pv
                for c in range(col, n + 1):
                    aug[r][c] -= factor * aug[col][c]
    return [aug[i][n] / aug[i][i] for i in range(n)]


def solve_columns(columns: Sequence[Sequence[int]], target: Sequence[int]) -> list[Fraction] | None:
    """Coefficients a with sum_j a_j * columns[j] = target, or None.

    Requires the columns to be linearly independent, so a solution is unique
    when it exists.  An empty column list solves only the zero target.
    """
    if not columns:
        return [] if all(x == 0 for x in target) else None
    nrows = len(target)
    ncols = len(columns)
    aug = [[Fraction(columns[j][i]) for j in range(ncols)] + [Fraction(target[i])]
           for i in range(nrows)]
    pivot_row_of: list[int | None] = [None] * ncols
    rk = 0
    for col in range(ncols):
        pivot = next((r for r in range(rk, nrows) if aug[r][col] != 0), None)
        if pivot is None:
            continue
        aug[rk], aug[pivot] = aug[pivot], aug[rk]
        pv = aug[rk][col]
        for r in range(nrows):
            if r != rk and aug[r][col]:
                factor = aug[r][col] / pv
                for c in range(col, ncols + 1):
                    aug[r][c] -= factor * aug[rk][c]
        pivot_row_of[col] = rk
        rk += 1
    if any(p is None for p in pivot_row_of):
        return None
    # remaining rows must be consistent
    for r in range(rk, nrows):
        if aug[r][ncols] != 0:
            return None
    coeffs = []
    for col in range(ncols):
        row = pivot_row_of[col]
        coeffs.append(aug[row][ncols] / aug[row][col])
    return coeffs


def nonneg_int_combination(columns: Sequence[Sequence[int]], target: Sequence[int]) -> list[int] | None:
    """Non-negative integer coefficients expressing target in the columns, or None."""
    coeffs = solve_columns(columns, target)
    if coeffs is None:
        return None
    if any(c.denominator != 1 or c < 0 for c in coeffs):
        return None
    return [int(c) for c in coeffs]


def is_positive_definite(sym: Sequence[Sequence[int]]) -> bool:
    """Sylvester criterion: all leading principal minors positive."""
    n = len(sym)
    for k in range(1, n + 1):
        minor = det([row[:k] for row in sym[:k]])
        if minor <= 0:
            return False
    return True
