from __future__ import annotations

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

import networkx as nx

from ..config import DEFAULT_LIMITS, Limits
from ..errors import DomainError
from ..rational import ZERO, RationalLike, to_fraction
from .core import Graph, VertexSet, canonical_side, connected_components

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class MinCut:
    side: VertexSet
    value: Fraction


def cut_value(g: Graph, w: Sequence[Fraction], side: VertexSet) -> Fraction:
    total = ZERO
    for e in g.edges:
        if (e.u in side) != (e.v in side):
            total += w[e.id]
    return total


def _check_weights(g: Graph, w: Sequence[RationalLike]) -> list[Fraction]:
    if len(w) != g.m:
        raise DomainError(f"weight vector has length {len(w)}, graph has {g.m} edges")
    ws = [to_fraction(x) for x in w]
    if any(x < 0 for x in ws):
        raise DomainError("minimum cut requires nonnegative weights")
    return ws


def _exhaustive(g: Graph, w: Sequence[Fraction]) -> MinCut:
    # Canonical sides contain vertex 0; bit i of mask selects vertex i + 1.
    best: Optional[MinCut] = None
    best_key = None
    rest = g.n - 1
    for mask in range((1 << rest) - 1):
        side = frozenset([0] + [i + 1 for i in range(rest) if mask >> i & 1])
        value = cut_value(g, w, side)
        key = tuple(sorted(side))
        if best is None or value < best.value or (value == best.value and key < best_key):
            best = MinCut(side, value)
            best_key = key
    assert best is not None
    return best


def _stoer_wagner(g: Graph, w: Sequence[Fraction]) -> MinCut:
    support = [e.id for e in g.edges if not e.is_loop and w[e.id] > 0]
    comps = connected_components(g, support)
    covered = frozenset().union(*comps) if comps else frozenset()
    isolated = [v for v in range(g.n) if v not in covered]
    if len(comps) + len(isolated) > 1:
        side = next((c for c in comps if 0 in c), frozenset([0]))
        return MinCut(side, ZERO)

    H = nx.Graph()
    for i in support:
        e = g.edges[i]
        if H.has_edge(e.u, e.v):
            H[e.u][e.v]["weight"] += w[i]
        else:
            H.add_edge(e.u, e.v, weight=w[i])
    _, (part, _) = nx.stoer_wagner(H, weight="weight")
    side = canonical_side(g, part)
    return MinCut(side, cut_value(g, w, side))


def global_min_cut(
    g: Graph, w: Sequence[RationalLike], limits: Optional[Limits] = None
) -> MinCut:
    """Minimum weight cut δ(U) over nonempty proper U, exactly.

    Up to `limits.exhaustive_mincut_vertices` vertices every canonical side is
    enumerated, so ties go to the lexicographically smallest side containing
    vertex 0. Larger graphs use Stoer-Wagner on the positive support: the value
    is still exact and the side still contains vertex 0, but among tied minimum
    cuts the side is the one Stoer-Wagner reaches, not the smallest.
    """
    if g.n < 2:
        raise DomainError("minimum cut needs at least two vertices")
    limits = limits or DEFAULT_LIMITS
    ws = _check_weights(g, w)
    if g.n <= limits.exhaustive_mincut_vertices:
        cut = _exhaustive(g, ws)
    else:
        cut = _stoer_wagner(g, ws)
    logger.debug(f"Minimum cut {sorted(cut.side)} with value {cut.value}")
    return cut
