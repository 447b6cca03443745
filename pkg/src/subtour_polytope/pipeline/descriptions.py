"""Builders for the constraint systems of P(G), Q(G), Q'(G) and K(G).

Rows always come in family order NONNEG, UB1, DEGREE, DEGREE_LB, CUT,
SUBGRAPH, CARD, and cut families in canonical (|U|, lexicographic) order.
"""

from __future__ import annotations

import logging
from enum import Enum
from itertools import combinations
from typing import Iterable, List, Optional

from ..config import DEFAULT_LIMITS, Limits
from ..errors import DomainError, ScaleLimitError
from ..geometry.types import ConstraintSystem, ConstraintTag, LinearConstraint, Sense, TagKind
from ..graph.core import Graph, VertexSet, canonical_side, delta, induced_edges, label, require_reduced
from ..locked.core import LockedEnumeration, enumerate_locked

logger = logging.getLogger(__name__)


class DescriptionKind(str, Enum):
    P_FULL = "P-full"
    P_REFINED = "P-refined"
    P_MINIMAL = "P-minimal"
    P_KN = "P-kn"
    Q = "Q"
    Q_PRIME = "Q-prime"
    K = "K"


def nonneg_rows(g: Graph) -> List[LinearConstraint]:
    return [
        LinearConstraint.make(f"nonneg_e{e.id + 1}", {e.id: 1}, Sense.GE, 0, ConstraintTag(TagKind.NONNEG, edge=e.id))
        for e in g.edges
    ]


def ub1_rows(g: Graph) -> List[LinearConstraint]:
    return [
        LinearConstraint.make(f"ub1_e{e.id + 1}", {e.id: 1}, Sense.LE, 1, ConstraintTag(TagKind.UB1, edge=e.id))
        for e in g.edges
    ]


def degree_rows(g: Graph, skip: Optional[int] = None, sense: Sense = Sense.EQ) -> List[LinearConstraint]:
    kind = TagKind.DEGREE if sense is Sense.EQ else TagKind.DEGREE_LB
    prefix = "degree" if sense is Sense.EQ else "degree_lb"
    rows = []
    for v in g.vertices:
        if v == skip:
            continue
        coeffs = {i: 1 for i in delta(g, [v])}
        rows.append(LinearConstraint.make(f"{prefix}_{v + 1}", coeffs, sense, 2, ConstraintTag(kind, vertex=v)))
    return rows


def cut_row(g: Graph, u: Iterable[int]) -> LinearConstraint:
    s = frozenset(u)
    coeffs = {i: 1 for i in delta(g, s)}
    return LinearConstraint.make(f"cut_{label(s)}", coeffs, Sense.GE, 2, ConstraintTag(TagKind.CUT, vertices=s))


def subgraph_row(g: Graph, u: Iterable[int]) -> LinearConstraint:
    s = frozenset(u)
    coeffs = {i: 1 for i in induced_edges(g, s)}
    return LinearConstraint.make(
        f"subgraph_{label(s)}", coeffs, Sense.LE, len(s) - 1, ConstraintTag(TagKind.SUBGRAPH, vertices=s)
    )


def card_row(g: Graph, value: int) -> LinearConstraint:
    return LinearConstraint.make(
        "card", {i: 1 for i in range(g.m)}, Sense.EQ, value, ConstraintTag(TagKind.CARD, value=value)
    )


def canonical_cuts(n: int) -> List[VertexSet]:
    """Sides containing vertex 0, one per {U, V \\ U} pair, in (|U|, lex) order."""
    out = []
    for k in range(1, n):
        for rest in combinations(range(1, n), k - 1):
            out.append(frozenset((0,) + rest))
    return out


def _locked(g: Graph, locked: Optional[LockedEnumeration], limits: Optional[Limits]) -> LockedEnumeration:
    return locked if locked is not None else enumerate_locked(g, limits=limits)


def full_P(g: Graph, limits: Optional[Limits] = None) -> ConstraintSystem:
    """Trivial, degree and every subtour elimination constraint."""
    require_reduced(g, "full_P")
    limits = limits or DEFAULT_LIMITS
    if g.n > limits.max_cut_vertices:
        raise ScaleLimitError(f"full_P writes every cut and is limited to {limits.max_cut_vertices} vertices")
    rows = nonneg_rows(g) + ub1_rows(g) + degree_rows(g)
    rows += [cut_row(g, u) for u in canonical_cuts(g.n)]
    logger.debug(f"full_P: {len(rows)} constraints")
    return ConstraintSystem(g.m, tuple(rows))


def refined_P(
    g: Graph, v0: int = 0, locked: Optional[LockedEnumeration] = None, limits: Optional[Limits] = None
) -> ConstraintSystem:
    """Degree rows except at v0, x(E) = n, and cuts only for locked subgraphs."""
    require_reduced(g, "refined_P")
    if not 0 <= v0 < g.n:
        raise DomainError(f"v0 = {v0} is not a vertex")
    hs = _locked(g, locked, limits)
    rows = nonneg_rows(g) + ub1_rows(g) + degree_rows(g, skip=v0)
    rows += [cut_row(g, h.u) for h in hs]
    rows.append(card_row(g, g.n))
    return ConstraintSystem(g.m, tuple(rows))


def minimal_P(
    g: Graph, keep_ub: bool = True, locked: Optional[LockedEnumeration] = None, limits: Optional[Limits] = None
) -> ConstraintSystem:
    """Trivial rows, degree rows and cuts of locked U with 3 <= |U| <= n - 2.

    A cut and the cut of the complementary side are the same row, so only the
    first locked side of each pair is written.
    """
    require_reduced(g, "minimal_P")
    hs = _locked(g, locked, limits)
    rows = nonneg_rows(g) + (ub1_rows(g) if keep_ub else []) + degree_rows(g)
    seen = set()
    for h in hs:
        if not 3 <= h.n_h <= g.n - 2:
            continue
        key = canonical_side(g, h.u)
        if key in seen:
            continue
        seen.add(key)
        rows.append(cut_row(g, h.u))
    return ConstraintSystem(g.m, tuple(rows))


def kn_minimal_P(g: Graph) -> ConstraintSystem:
    """Minimal description of P(K_n): x >= 0, degrees, cuts with 2 <= |U| <= floor(n/2)."""
    if not g.is_simple or g.m != g.n * (g.n - 1) // 2 or g.n < 3:
        raise DomainError("kn_minimal_P requires a complete simple graph on at least 3 vertices")
    rows = nonneg_rows(g) + degree_rows(g)
    rows += [cut_row(g, u) for u in canonical_cuts(g.n) if min(len(u), g.n - len(u)) >= 2]
    return ConstraintSystem(g.m, tuple(rows))


def Q_description(
    g: Graph, locked: Optional[LockedEnumeration] = None, limits: Optional[Limits] = None
) -> ConstraintSystem:
    """0 <= x <= 1, x(E(U)) <= |U| - 1 for locked U, and x(E) = n."""
    require_reduced(g, "Q_description")
    hs = _locked(g, locked, limits)
    rows = nonneg_rows(g) + ub1_rows(g) + [subgraph_row(g, h.u) for h in hs]
    rows.append(card_row(g, g.n))
    return ConstraintSystem(g.m, tuple(rows))


def Q_prime_description(
    g: Graph, locked: Optional[LockedEnumeration] = None, limits: Optional[Limits] = None
) -> ConstraintSystem:
    """Relaxation of Q(G): degree rows become x(δ(v)) >= 2, locked cuts, x(E) = n."""
    require_reduced(g, "Q_prime_description")
    hs = _locked(g, locked, limits)
    rows = nonneg_rows(g) + ub1_rows(g) + degree_rows(g, sense=Sense.GE)
    rows += [cut_row(g, h.u) for h in hs]
    rows.append(card_row(g, g.n))
    return ConstraintSystem(g.m, tuple(rows))


def K_description(
    g: Graph, locked: Optional[LockedEnumeration] = None, limits: Optional[Limits] = None
) -> ConstraintSystem:
    """Bases polytope of the cycle matroid: spanning tree vectors."""
    require_reduced(g, "K_description")
    hs = _locked(g, locked, limits)
    rows = nonneg_rows(g) + ub1_rows(g) + [subgraph_row(g, h.u) for h in hs]
    rows.append(card_row(g, g.n - 1))
    return ConstraintSystem(g.m, tuple(rows))


def describe(
    g: Graph,
    kind: DescriptionKind | str,
    *,
    v0: int = 0,
    keep_ub: bool = True,
    limits: Optional[Limits] = None,
) -> ConstraintSystem:
    kind = DescriptionKind(kind)
    if kind is DescriptionKind.P_FULL:
        return full_P(g, limits)
    if kind is DescriptionKind.P_KN:
        return kn_minimal_P(g)
    locked = enumerate_locked(g, limits=limits)
    if kind is DescriptionKind.P_REFINED:
        return refined_P(g, v0, locked)
    if kind is DescriptionKind.P_MINIMAL:
        return minimal_P(g, keep_ub, locked)
    if kind is DescriptionKind.Q:
        return Q_description(g, locked)
    if kind is DescriptionKind.Q_PRIME:
        return Q_prime_description(g, locked)
    return K_description(g, locked)
