"""Subtour relaxation bounds by exact cutting planes.

The loop starts from the trivial and degree rows, solves the LP, separates a
most violated subtour cut by a global minimum cut, and repeats. Every added
cut is classified against the locked characterization; classification is
reported only and never filters the pool.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from ..config import Limits
from ..errors import DomainError
from ..geometry.simplex import Direction, LPStatus, lp_solve
from ..geometry.types import ConstraintSystem, QPoint, positive_support
from ..graph.core import Graph, VertexSet, canonical_side, connected_components, is_reduced_form, require_reduced
from ..graph.mincut import global_min_cut
from ..locked.core import LockCondition, is_locked
from ..rational import RationalLike, to_fraction
from .descriptions import Q_description, cut_row, degree_rows, nonneg_rows, ub1_rows

logger = logging.getLogger(__name__)

TWO = Fraction(2)


class CutClass(str, Enum):
    FACET_LOCKED = "FacetLocked"
    REDUNDANT_NON_LOCKED = "RedundantNonLocked"
    UNCLASSIFIED = "Unclassified"


class BoundStatus(str, Enum):
    OPTIMAL = "Optimal"
    INFEASIBLE = "Infeasible"
    ITERATION_LIMIT = "IterationLimit"


@dataclass(frozen=True)
class CutClassification:
    cls: CutClass
    side: VertexSet
    failed: Optional[LockCondition] = None
    reason: str = ""


@dataclass(frozen=True)
class PooledCut:
    side: VertexSet
    violation: Fraction
    classification: CutClassification
    iteration: int


@dataclass(frozen=True)
class BoundReport:
    status: BoundStatus
    bound: Optional[Fraction]
    iterations: int
    cuts: Tuple[PooledCut, ...] = ()
    point: Optional[QPoint] = None
    history: Tuple[Fraction, ...] = field(default_factory=tuple)
    direction: Direction = Direction.MINIMIZE


def separate(
    g: Graph, x: Sequence[RationalLike], limits: Optional[Limits] = None
) -> Optional[Tuple[VertexSet, Fraction]]:
    """A side U with x(δ(U)) < 2 and its violation 2 - x(δ(U)), or None.

    A disconnected support yields the component holding vertex 0 (cut value 0).
    """
    xs = [to_fraction(v) for v in x]
    if len(xs) != g.m:
        raise DomainError(f"point has dimension {len(xs)}, graph has {g.m} edges")
    if any(v < 0 for v in xs):
        raise DomainError("separation requires x >= 0")
    comps = connected_components(g, positive_support(xs))
    covered = frozenset().union(*comps) if comps else frozenset()
    if len(comps) > 1 or len(covered) < g.n:
        side = next((c for c in comps if 0 in c), frozenset([0]))
        return side, TWO
    cut = global_min_cut(g, xs, limits)
    if cut.value < TWO:
        return cut.side, TWO - cut.value
    return None


def classify_cut(g: Graph, u: VertexSet) -> CutClassification:
    """FacetLocked when either side of the cut is locked with 3 <= |side| <= n - 2."""
    s = frozenset(u)
    if not s or len(s) >= g.n:
        raise DomainError("a cut needs a nonempty proper vertex subset")
    side = canonical_side(g, s)
    if not is_reduced_form(g):
        return CutClassification(CutClass.UNCLASSIFIED, side, reason="graph is not in reduced form")
    first: Optional[Tuple[LockCondition, str]] = None
    for candidate in (s, frozenset(g.vertices) - s):
        if not 3 <= len(candidate) <= g.n - 2:
            if first is None:
                first = (LockCondition.SIZE, f"|U| = {len(candidate)} outside 3..{g.n - 2}")
            continue
        verdict = is_locked(g, candidate)
        if verdict:
            return CutClassification(CutClass.FACET_LOCKED, side)
        if first is None or first[0] is LockCondition.SIZE:
            first = (verdict.failed, verdict.reason)
    assert first is not None
    return CutClassification(CutClass.REDUNDANT_NON_LOCKED, side, first[0], first[1])


def _initial_system(g: Graph) -> ConstraintSystem:
    return ConstraintSystem(g.m, tuple(nonneg_rows(g) + ub1_rows(g) + degree_rows(g)))


def bound(
    g: Graph,
    weights: Optional[Sequence[RationalLike]] = None,
    max_iter: Optional[int] = None,
    direction: Direction = Direction.MINIMIZE,
    limits: Optional[Limits] = None,
) -> BoundReport:
    """Optimize weights . x over P(g) by adding violated subtour cuts.

    Args:
        g: Reduced graph.
        weights: Objective; defaults to the graph's edge weights.
        max_iter: LP solves allowed; defaults to 10 m.
        direction: Minimize (lower bound on tours) or maximize.
    """
    require_reduced(g, "bound")
    w = [to_fraction(v) for v in (weights if weights is not None else g.weights)]
    if len(w) != g.m:
        raise DomainError(f"weight vector has length {len(w)}, graph has {g.m} edges")
    max_iter = 10 * g.m if max_iter is None else max_iter
    if max_iter < 1:
        raise DomainError("max_iter must be positive")

    sys = _initial_system(g)
    pool: List[PooledCut] = []
    history: List[Fraction] = []
    point: Optional[QPoint] = None
    for it in range(1, max_iter + 1):
        res = lp_solve(sys, w, direction)
        if res.status is not LPStatus.OPTIMAL:
            logger.warning(f"LP {res.status.value} at iteration {it}")
            return BoundReport(BoundStatus.INFEASIBLE, None, it, tuple(pool), None, tuple(history), direction)
        history.append(res.value)
        point = res.point
        found = separate(g, point, limits)
        if found is None:
            logger.info(f"Bound {res.value} after {it} LP solves and {len(pool)} cuts")
            return BoundReport(BoundStatus.OPTIMAL, res.value, it, tuple(pool), point, tuple(history), direction)
        side, violation = found
        cls = classify_cut(g, side)
        pool.append(PooledCut(cls.side, violation, cls, it))
        logger.debug(f"Iteration {it}: value {res.value}, cut {sorted(cls.side)} violated by {violation} ({cls.cls.value})")
        sys = sys.extended([cut_row(g, cls.side)])

    logger.warning(f"Iteration limit {max_iter} reached with {len(pool)} cuts")
    last = history[-1] if history else None
    return BoundReport(BoundStatus.ITERATION_LIMIT, last, max_iter, tuple(pool), point, tuple(history), direction)


def q_bound(
    g: Graph,
    weights: Optional[Sequence[RationalLike]] = None,
    direction: Direction = Direction.MINIMIZE,
    limits: Optional[Limits] = None,
) -> BoundReport:
    """Optimize over Q(g) directly; a single LP over the polynomial description."""
    require_reduced(g, "q_bound")
    w = [to_fraction(v) for v in (weights if weights is not None else g.weights)]
    sys = Q_description(g, limits=limits)
    res = lp_solve(sys, w, direction)
    if res.status is not LPStatus.OPTIMAL:
        return BoundReport(BoundStatus.INFEASIBLE, None, 1, direction=direction)
    return BoundReport(BoundStatus.OPTIMAL, res.value, 1, (), res.point, (res.value,), direction)
