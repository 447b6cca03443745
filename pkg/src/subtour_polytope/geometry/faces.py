from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..config import Limits
from ..errors import DomainError
from ..rational import ZERO, to_fraction
from .linalg import affine_dim, nullspace, rank
from .simplex import Direction, LPResult, LPStatus, lp_solve
from .types import ConstraintSystem, LinearConstraint, QPoint, Sense
from .vertices import enumerate_vertices

logger = logging.getLogger(__name__)

__all__ = [
    "Membership",
    "Redundancy",
    "affine_dim",
    "convex_split_witness",
    "face_dim",
    "is_redundant",
    "is_valid",
    "membership",
    "tight_rank",
]


@dataclass(frozen=True)
class Membership:
    member: bool
    violated: Optional[str] = None

    def __bool__(self) -> bool:
        return self.member


def membership(sys: ConstraintSystem, x: Sequence) -> Membership:
    """Exact check in system order; reports the first violated constraint."""
    sys.check_point(x)
    xs = [to_fraction(v) for v in x]
    for c in sys:
        if not c.is_satisfied(xs):
            return Membership(False, c.name)
    return Membership(True)


def _extremes(sys: ConstraintSystem, c: LinearConstraint) -> Tuple[LPResult, Optional[LPResult]]:
    obj = c.dense(sys.dim)
    if c.sense is Sense.GE:
        return lp_solve(sys, obj, Direction.MINIMIZE), None
    if c.sense is Sense.LE:
        return lp_solve(sys, obj, Direction.MAXIMIZE), None
    return lp_solve(sys, obj, Direction.MINIMIZE), lp_solve(sys, obj, Direction.MAXIMIZE)


def _holds(c: LinearConstraint, first: LPResult, second: Optional[LPResult]) -> bool:
    """Whether the LP extremes certify that c holds on the whole system."""
    if first.status is LPStatus.INFEASIBLE:
        return True
    if first.status is LPStatus.UNBOUNDED:
        return False
    if c.sense is Sense.GE:
        return first.value >= c.rhs
    if c.sense is Sense.LE:
        return first.value <= c.rhs
    assert second is not None
    if second.status is not LPStatus.OPTIMAL:
        return False
    return first.value == c.rhs and second.value == c.rhs


def is_valid(sys: ConstraintSystem, c: LinearConstraint) -> bool:
    first, second = _extremes(sys, c)
    return _holds(c, first, second)


def face_dim(
    sys: ConstraintSystem,
    c: LinearConstraint,
    vertices: Optional[List[QPoint]] = None,
    limits: Optional[Limits] = None,
) -> int:
    """Dimension of {x in sys : c tight}; -1 for an empty face.

    Args:
        sys: Bounded system within vertex enumeration scale.
        c: A valid inequality (checked by LP).
        vertices: Precomputed vertex list of `sys`, if available.
    """
    if not is_valid(sys, c):
        raise DomainError(f"constraint {c.name!r} is not valid for the system")
    if vertices is None:
        vertices = enumerate_vertices(sys, limits)
    tight = [v for v in vertices if c.is_tight(v)]
    if not tight:
        return -1
    return affine_dim(tight)


@dataclass(frozen=True)
class Redundancy:
    """Verdict of dropping one constraint and optimizing its violation.

    `bound` holds the optimum of the constraint's left-hand side over the rest
    (min for >=, max for <=, both for =); `witness` a point of the rest that
    violates the constraint when it is irredundant.
    """

    redundant: bool
    bound: Tuple[Optional[Fraction], ...] = ()
    witness: Optional[QPoint] = None
    status: str = LPStatus.OPTIMAL.value


def is_redundant(sys: ConstraintSystem, c: LinearConstraint | int) -> Redundancy:
    """Whether removing c (or the row at index c) leaves the feasible set unchanged."""
    if isinstance(c, int):
        index = c
    else:
        index = next((i for i, d in enumerate(sys) if d is c or d.name == c.name), None)
        if index is None:
            raise DomainError(f"constraint {c.name!r} is not part of the system")
    row = sys[index]
    rest = sys.without(index)
    first, second = _extremes(rest, row)
    redundant = _holds(row, first, second)
    bound = tuple(r.value for r in (first, second) if r is not None)
    witness = None
    if not redundant:
        for r in (first, second):
            if r is not None and r.is_optimal and not row.is_satisfied(r.point):
                witness = r.point
                break
    return Redundancy(redundant, bound, witness, first.status.value)


def tight_rank(sys: ConstraintSystem, x: Sequence[Fraction]) -> int:
    """Rank of the rows of `sys` tight at x."""
    rows = [c.dense(sys.dim) for c in sys if c.is_tight(x)]
    return rank(rows)


def convex_split_witness(sys: ConstraintSystem, x: Sequence[Fraction]) -> Optional[Tuple[QPoint, QPoint]]:
    """Two distinct members y, z with x = (y + z) / 2, or None when x is a vertex."""
    xs = [to_fraction(v) for v in x]
    if not membership(sys, xs):
        raise DomainError("point is not a member of the system")
    tight_rows = [c.dense(sys.dim) for c in sys if c.is_tight(xs)]
    basis = nullspace(tight_rows, sys.dim)
    if not basis:
        return None
    d = basis[0]
    step: Optional[Fraction] = None
    for c in sys:
        if c.is_tight(xs):
            continue
        a = c.dense(sys.dim)
        ad = sum((ai * di for ai, di in zip(a, d)), ZERO)
        if ad == 0:
            continue
        # both x + t d and x - t d must stay inside: t <= slack / |a.d|
        limit = c.slack(xs) / abs(ad)
        step = limit if step is None or limit < step else step
    if step is None:
        raise DomainError("system is unbounded along a direction through the point")
    y = tuple(xi + step * di for xi, di in zip(xs, d))
    z = tuple(xi - step * di for xi, di in zip(xs, d))
    return y, z
