"""Exact two-phase tableau simplex over Fractions with Bland's rule."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..errors import DomainError
from ..rational import ZERO, RationalLike, to_fraction
from .types import ConstraintSystem, QPoint, Sense

logger = logging.getLogger(__name__)


class Direction(str, Enum):
    MINIMIZE = "min"
    MAXIMIZE = "max"


class LPStatus(str, Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    UNBOUNDED = "Unbounded"


@dataclass(frozen=True)
class LPResult:
    status: LPStatus
    value: Optional[Fraction] = None
    point: Optional[QPoint] = None

    @property
    def is_optimal(self) -> bool:
        return self.status is LPStatus.OPTIMAL


class _Tableau:
    """Rows of [coefficients..., rhs] with a basic column per row."""

    def __init__(self, rows: List[List[Fraction]], basis: List[int], ncols: int) -> None:
        self.rows = rows
        self.basis = basis
        self.ncols = ncols
        self.pivots = 0

    def pivot(self, r: int, c: int, obj: List[Fraction]) -> None:
        row = self.rows[r]
        p = row[c]
        if p != 1:
            row = [v / p for v in row]
            self.rows[r] = row
        nz = [j for j, v in enumerate(row) if v != 0]
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[c]
            if f != 0:
                for j in nz:
                    other[j] -= f * row[j]
        f = obj[c]
        if f != 0:
            for j in nz:
                obj[j] -= f * row[j]
        self.basis[r] = c
        self.pivots += 1

    def reduced_costs(self, cost: Sequence[Fraction]) -> List[Fraction]:
        """Objective row [c_j - c_B B^-1 A_j ..., -c_B B^-1 b]."""
        obj = list(cost) + [ZERO]
        for r, b in enumerate(self.basis):
            cb = cost[b] if b < len(cost) else ZERO
            if cb != 0:
                for j, v in enumerate(self.rows[r]):
                    if v != 0:
                        obj[j] -= cb * v
        return obj

    def run(self, obj: List[Fraction], allowed: int) -> bool:
        """Minimize; columns >= `allowed` never enter. False when unbounded."""
        while True:
            entering = next((j for j in range(allowed) if obj[j] < 0), None)
            if entering is None:
                return True
            best = None
            for i, row in enumerate(self.rows):
                a = row[entering]
                if a > 0:
                    ratio = row[-1] / a
                    key = (ratio, self.basis[i])
                    if best is None or key < best[0]:
                        best = (key, i)
            if best is None:
                return False
            self.pivot(best[1], entering, obj)


def _nonnegative_vars(sys: ConstraintSystem) -> List[bool]:
    # A single-coefficient row that implies x_j >= c with c >= 0.
    nonneg = [False] * sys.dim
    for c in sys:
        if len(c.coefficients) != 1:
            continue
        j, a = c.coefficients[0]
        bound = c.rhs / a
        lower = (c.sense is Sense.GE and a > 0) or (c.sense is Sense.LE and a < 0) or c.sense is Sense.EQ
        if lower and bound >= 0:
            nonneg[j] = True
    return nonneg


def lp_solve(
    sys: ConstraintSystem,
    objective: Sequence[RationalLike],
    direction: Direction = Direction.MINIMIZE,
) -> LPResult:
    """Optimize objective . x over the system exactly.

    Deterministic for a fixed constraint order; unsplit variables are those the
    system bounds below by a nonnegative constant in a single-coefficient row.
    """
    m = sys.dim
    if len(objective) != m:
        raise DomainError(f"objective has dimension {len(objective)}, system has {m}")
    cost_x = [to_fraction(v) for v in objective]
    if direction is Direction.MAXIMIZE:
        cost_x = [-v for v in cost_x]

    nonneg = _nonnegative_vars(sys)
    # column layout: one column per nonnegative x_j, two (p, q) per free x_j
    col_of: List[Tuple[int, Optional[int]]] = []
    ncols = 0
    for j in range(m):
        if nonneg[j]:
            col_of.append((ncols, None))
            ncols += 1
        else:
            col_of.append((ncols, ncols + 1))
            ncols += 2
    nstruct = ncols

    skip = set()
    for k, c in enumerate(sys):
        if len(c.coefficients) == 1 and c.sense is Sense.GE and c.rhs == 0 and c.coefficients[0][1] > 0:
            skip.add(k)  # x_j >= 0 is carried by the column itself
    kept = [c for k, c in enumerate(sys) if k not in skip]

    nslack = sum(1 for c in kept if c.sense is not Sense.EQ)
    width = nstruct + nslack
    raw_rows: List[List[Fraction]] = []
    slack_col: List[Optional[int]] = []
    s = nstruct
    for c in kept:
        row = [ZERO] * (width + 1)
        for j, a in c.coefficients:
            p, q = col_of[j]
            row[p] += a
            if q is not None:
                row[q] -= a
        sc = None
        if c.sense is Sense.LE:
            row[s] = Fraction(1)
            sc = s
            s += 1
        elif c.sense is Sense.GE:
            row[s] = Fraction(-1)
            sc = s
            s += 1
        row[-1] = c.rhs
        if row[-1] < 0:
            row = [-v for v in row]
        raw_rows.append(row)
        slack_col.append(sc)

    # initial basis: a +1 slack where available, otherwise an artificial column
    nart = sum(1 for row, sc in zip(raw_rows, slack_col) if sc is None or row[sc] != 1)
    total = width + nart
    rows: List[List[Fraction]] = []
    basis: List[int] = []
    a = width
    for row, sc in zip(raw_rows, slack_col):
        full = row[:-1] + [ZERO] * nart + [row[-1]]
        if sc is not None and row[sc] == 1:
            basis.append(sc)
        else:
            full[a] = Fraction(1)
            basis.append(a)
            a += 1
        rows.append(full)

    tab = _Tableau(rows, basis, total)
    if nart:
        phase1 = [ZERO] * width + [Fraction(1)] * nart
        obj = tab.reduced_costs(phase1)
        tab.run(obj, total)
        if -obj[-1] != 0:
            logger.debug(f"LP infeasible after {tab.pivots} pivots")
            return LPResult(LPStatus.INFEASIBLE)
        # drive zero-level artificials out of the basis, dropping dependent rows
        r = 0
        while r < len(tab.rows):
            if tab.basis[r] >= width:
                col = next((j for j in range(width) if tab.rows[r][j] != 0), None)
                if col is None:
                    del tab.rows[r]
                    del tab.basis[r]
                    continue
                tab.pivot(r, col, [ZERO] * (total + 1))
            r += 1
        tab.rows = [row[:width] + [row[-1]] for row in tab.rows]
        tab.ncols = width

    cost = [ZERO] * width
    for j in range(m):
        p, q = col_of[j]
        cost[p] = cost_x[j]
        if q is not None:
            cost[q] = -cost_x[j]
    obj = tab.reduced_costs(cost)
    if not tab.run(obj, width):
        logger.debug(f"LP unbounded after {tab.pivots} pivots")
        return LPResult(LPStatus.UNBOUNDED)

    values = [ZERO] * width
    for r, b in enumerate(tab.basis):
        values[b] = tab.rows[r][-1]
    point = []
    for j in range(m):
        p, q = col_of[j]
        point.append(values[p] - (values[q] if q is not None else ZERO))
    value = sum((to_fraction(objective[j]) * point[j] for j in range(m)), ZERO)
    logger.debug(f"LP optimal value {value} after {tab.pivots} pivots")
    return LPResult(LPStatus.OPTIMAL, value, tuple(point))
