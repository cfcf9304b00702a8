"""Exact integer and rational linear algebra for small dense matrices."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence


def bareiss_det(matrix: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by fraction-free elimination."""
    m = [list(map(int, row)) for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("matrix is not square")
    sign, prev = 1, 1
    for p in range(n - 1):
        if m[p][p] == 0:
            swap = next((r for r in range(p + 1, n) if m[r][p] != 0), None)
            if swap is None:
                return 0
            m[p], m[swap] = m[swap], m[p]
            sign = -sign
        piv = m[p][p]
        for i in range(p + 1, n):
            for j in range(p + 1, n):
                m[i][j] = (m[i][j] * piv - m[i][p] * m[p][j]) // prev
            m[i][p] = 0
        prev = piv
    return sign * m[n - 1][n - 1]


def solve_square(a: Sequence[Sequence[int | Fraction]], b: Sequence[int | Fraction]) -> tuple[Fraction, ...] | None:
    """Unique solution of ``a x = b`` over the rationals, or ``None`` if ``a`` is singular."""
    n = len(a)
    m = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        pivot_row = [v * inv for v in m[col]]
        m[col] = pivot_row
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [v - f * pv for v, pv in zip(m[r], pivot_row)]
    return tuple(row[n] for row in m)


def solve_any(a: Sequence[Sequence[int | Fraction]], b: Sequence[int | Fraction]) -> tuple[Fraction, ...] | None:
    """Some rational solution of a possibly rectangular system (free variables set to 0)."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [[Fraction(v) for v in row] + [Fraction(rhs)] for row, rhs in zip(a, b)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [v - f * pv for v, pv in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(all(v == 0 for v in row[:cols]) and row[cols] != 0 for row in m):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = m[i][cols]
    return tuple(x)
