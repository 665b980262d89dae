"""Small exact linear algebra over the rationals (dense Gaussian elimination).

Sized for the toolkit's workloads: systems with at most a few hundred rows.
"""

from __future__ import annotations

from fractions import Fraction


def solve_exact(rows: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction] | None:
    """One solution of rows * x = rhs over Q, or None when inconsistent.

    Free variables are set to zero.
    """
    m = len(rows)
    n = len(rows[0]) if m else 0
    a = [list(map(Fraction, row)) + [Fraction(rhs[i])] for i, row in enumerate(rows)]
    pivot_cols = []
    r = 0
    for col in range(n):
        pivot = next((i for i in range(r, m) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[r], a[pivot] = a[pivot], a[r]
        inv = 1 / a[r][col]
        a[r] = [v * inv for v in a[r]]
        for i in range(m):
            if i != r and a[i][col] != 0:
                f = a[i][col]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[r])]
        pivot_cols.append(col)
        r += 1
        if r == m:
            break
    for i in range(r, m):
        if a[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for i, col in enumerate(pivot_cols):
        x[col] = a[i][n]
    return x


def rank_exact(rows: list[list[Fraction]]) -> int:
    """Rank of a rational matrix."""
    m = len(rows)
    if m == 0:
        return 0
    n = len(rows[0])
    a = [list(map(Fraction, row)) for row in rows]
    rank = 0
    for col in range(n):
        pivot = next((i for i in range(rank, m) if a[i][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        inv = 1 / a[rank][col]
        a[rank] = [v * inv for v in a[rank]]
        for i in range(rank + 1, m):
            if a[i][col] != 0:
                f = a[i][col]
                a[i] = [vi - f * vr for vi, vr in zip(a[i], a[rank])]
        rank += 1
        if rank == m:
            break
    return rank
