"""Exact Gaussian elimination helpers (row echelon form, rank, null space)."""

from __future__ import annotations

from fractions import Fraction as Frac
from typing import List, Sequence

from .rational import Vector


def rref(rows: Sequence[Sequence[Frac]]) -> tuple[list[list[Frac]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    matrix: List[List[Frac]] = [list(r) for r in rows]
    if not matrix:
        return [], []
    n_cols = len(matrix[0])
    pivots: list[int] = []
    r = 0
    for c in range(n_cols):
        pivot = next((i for i in range(r, len(matrix)) if matrix[i][c] != 0), None)
        if pivot is None:
            continue
        matrix[r], matrix[pivot] = matrix[pivot], matrix[r]
        lead = matrix[r][c]
        matrix[r] = [x / lead for x in matrix[r]]
        for i in range(len(matrix)):
            if i != r and matrix[i][c] != 0:
                factor = matrix[i][c]
                matrix[i] = [x - factor * y for x, y in zip(matrix[i], matrix[r])]
        pivots.append(c)
        r += 1
        if r == len(matrix):
            break
    return matrix[:r], pivots


def rank(rows: Sequence[Sequence[Frac]]) -> int:
    if not rows:
        return 0
    return len(rref(rows)[1])


def null_space(rows: Sequence[Sequence[Frac]], n_cols: int) -> list[Vector]:
    """Basis of {x : row·x = 0 for all rows}, one vector per free column."""
    if not rows:
        return [tuple(Frac(int(i == j)) for j in range(n_cols)) for i in range(n_cols)]
    reduced, pivots = rref(rows)
    free = [c for c in range(n_cols) if c not in pivots]
    basis: list[Vector] = []
    for f in free:
        x = [Frac(0)] * n_cols
        x[f] = Frac(1)
        for row, p in zip(reduced, pivots):
            x[p] = -row[f]
        basis.append(tuple(x))
    return basis


def row_space_basis(rows: Sequence[Sequence[Frac]]) -> list[Vector]:
    """Canonical basis of the row space (nonzero rows of the RREF)."""
    if not rows:
        return []
    reduced, _ = rref(rows)
    return [tuple(r) for r in reduced]
