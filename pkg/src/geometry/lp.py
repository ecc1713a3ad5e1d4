"""Exact two-phase simplex over free variables with Bland's rule.

Free variables are split as x = u - w; every constraint <a, x> <= b gets a
slack, rows with b < 0 are negated and receive an artificial. The optimal
point is refined to the lexicographically smallest optimizer whenever the
optimal face is bounded, so answers are reproducible.
"""

from __future__ import annotations

import logging
from fractions import Fraction as Frac
from typing import List, NamedTuple, Optional, Sequence

from .errors import DimensionMismatch, Infeasible, PreconditionError, UnboundedObjective
from .rational import Vector, dot
from .types import HalfSpace

logger = logging.getLogger(__name__)


class LPResult(NamedTuple):
    value: Frac
    argpoint: Vector


class _Tableau:
    """Dense Fraction tableau in equality form with an explicit basis."""

    def __init__(self, *, rows: List[List[Frac]], rhs: List[Frac], basis: List[int], n_cols: int) -> None:
        self.rows = rows
        self.rhs = rhs
        self.basis = basis
        self.n_cols = n_cols

    def pivot(self, r: int, c: int) -> None:
        lead = self.rows[r][c]
        self.rows[r] = [x / lead for x in self.rows[r]]
        self.rhs[r] = self.rhs[r] / lead
        for i in range(len(self.rows)):
            if i == r:
                continue
            factor = self.rows[i][c]
            if factor != 0:
                self.rows[i] = [x - factor * y for x, y in zip(self.rows[i], self.rows[r])]
                self.rhs[i] = self.rhs[i] - factor * self.rhs[r]
        self.basis[r] = c

    def objective(self, cost: Sequence[Frac]) -> Frac:
        return sum((cost[b] * v for b, v in zip(self.basis, self.rhs)), Frac(0))

    def maximize(self, cost: Sequence[Frac], allowed: Sequence[bool]) -> bool:
        """Run Bland-rule iterations; False when the objective is unbounded."""
        while True:
            entering = None
            for j in range(self.n_cols):
                if not allowed[j] or j in self.basis:
                    continue
                reduced = cost[j] - sum((cost[b] * row[j] for b, row in zip(self.basis, self.rows)), Frac(0))
                if reduced > 0:
                    entering = j
                    break
            if entering is None:
                return True
            leaving = None
            best: Optional[Frac] = None
            for i, row in enumerate(self.rows):
                if row[entering] > 0:
                    ratio = self.rhs[i] / row[entering]
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leaving]):
                        best, leaving = ratio, i
            if leaving is None:
                return False
            self.pivot(leaving, entering)


def _maximize(objective: Vector, constraints: Sequence[HalfSpace]) -> LPResult:
    n = len(objective)
    m = len(constraints)
    n_struct = 2 * n + m
    rows: List[List[Frac]] = []
    rhs: List[Frac] = []
    basis: List[int] = []
    artificial_rows: List[int] = []
    for i, h in enumerate(constraints):
        row = [Frac(0)] * n_struct
        for k, a in enumerate(h.normal):
            row[k] = a
            row[n + k] = -a
        row[2 * n + i] = Frac(1)
        b = h.offset
        if b < 0:
            row = [-x for x in row]
            b = -b
            artificial_rows.append(i)
        rows.append(row)
        rhs.append(b)
        basis.append(2 * n + i)

    n_cols = n_struct + len(artificial_rows)
    for row in rows:
        row.extend([Frac(0)] * len(artificial_rows))
    for k, i in enumerate(artificial_rows):
        rows[i][n_struct + k] = Frac(1)
        basis[i] = n_struct + k
    tableau = _Tableau(rows=rows, rhs=rhs, basis=basis, n_cols=n_cols)

    if artificial_rows:
        phase_one = [Frac(0)] * n_struct + [Frac(-1)] * len(artificial_rows)
        tableau.maximize(phase_one, [True] * n_cols)
        if tableau.objective(phase_one) < 0:
            raise Infeasible("linear program has no feasible point")
        for r in range(len(tableau.rows) - 1, -1, -1):
            if tableau.basis[r] < n_struct:
                continue
            swap = next((j for j in range(n_struct) if tableau.rows[r][j] != 0), None)
            if swap is None:
                del tableau.rows[r]
                del tableau.rhs[r]
                del tableau.basis[r]
            else:
                tableau.pivot(r, swap)

    cost = [Frac(0)] * n_cols
    for k, c in enumerate(objective):
        cost[k] = c
        cost[n + k] = -c
    allowed = [j < n_struct for j in range(n_cols)]
    if not tableau.maximize(cost, allowed):
        raise UnboundedObjective("objective is unbounded over the feasible region")

    values = [Frac(0)] * n_cols
    for b, v in zip(tableau.basis, tableau.rhs):
        values[b] = v
    point = tuple(values[k] - values[n + k] for k in range(n))
    return LPResult(dot(objective, point), point)


def lp_solve(objective: Vector, constraints: Sequence[HalfSpace], sense: str = "max", *, lexicographic: bool = True) -> LPResult:
    """Exact optimum of <objective, x> over the halfspace intersection.

    The argpoint is the lexicographically smallest optimizer when the optimal
    face is bounded (a vertex of it); otherwise the simplex basic solution.
    """
    if sense not in ("max", "min"):
        raise PreconditionError(f"unknown sense {sense!r}")
    n = len(objective)
    for h in constraints:
        if h.dim != n:
            raise DimensionMismatch("constraint and objective dimensions differ", objective=n, constraint=h.dim)

    direction = tuple(objective) if sense == "max" else tuple(-c for c in objective)
    best = _maximize(direction, constraints)
    value = best.value if sense == "max" else -best.value
    point = best.argpoint
    if lexicographic:
        pinned: List[HalfSpace] = list(constraints)
        if any(c != 0 for c in direction):
            pinned.append(HalfSpace(tuple(-c for c in direction), -best.value))
        for k in range(n):
            unit = tuple(Frac(int(j == k)) for j in range(n))
            try:
                low = _maximize(tuple(-c for c in unit), pinned)
            except UnboundedObjective:
                break
            coordinate = -low.value
            point = low.argpoint
            pinned.append(HalfSpace(unit, coordinate))
            pinned.append(HalfSpace(tuple(-c for c in unit), -coordinate))
    logger.debug(f"lp_solve {sense}: value={value}")
    return LPResult(value, tuple(point))
