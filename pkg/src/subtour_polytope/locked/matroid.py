"""Brute-force check of the matroid definition of a locked subset.

Works only through rank queries, so it is independent of the graph
characterization in `locked.core` and serves as its oracle.
"""

from __future__ import annotations

from itertools import combinations
from typing import Callable, FrozenSet, Iterable, List, Optional, Tuple

from networkx.utils import UnionFind

from ..config import DEFAULT_LIMITS, Limits
from ..errors import ScaleLimitError
from ..graph.core import EdgeSet, Graph, VertexSet, covered_vertices, dual_rank, graphic_rank, induced_edges
from .core import is_locked

RankFn = Callable[[FrozenSet[int]], int]


def matroid_components(ground: Iterable[int], rank: RankFn) -> List[FrozenSet[int]]:
    """Connected components of a matroid given by a rank oracle.

    Two elements lie in the same component iff some circuit holds both; the
    fundamental circuits with respect to one basis already generate that relation.
    """
    elements = sorted(ground)
    basis: List[int] = []
    for e in elements:
        if rank(frozenset(basis + [e])) == len(basis) + 1:
            basis.append(e)

    uf = UnionFind(elements)
    bset = frozenset(basis)
    for e in elements:
        if e in bset:
            continue
        with_e = bset | {e}
        for b in basis:
            # b is on the fundamental circuit of e iff B - b + e is independent
            if rank(with_e - {b}) == len(basis):
                uf.union(e, b)
    groups = {}
    for e in elements:
        groups.setdefault(uf[e], set()).add(e)
    return sorted((frozenset(s) for s in groups.values()), key=min)


def is_connected_matroid(ground: Iterable[int], rank: RankFn) -> bool:
    comps = matroid_components(ground, rank)
    return len(comps) == 1


def is_locked_matroid_oracle(g: Graph, l: Iterable[int], limits: Optional[Limits] = None) -> bool:
    """Locked subset test straight from the matroid definition.

    L is locked iff M|L and M*|(E \\ L) are connected and
    min(r(L), r*(E \\ L)) >= 2, with M the cycle matroid of g.
    """
    limits = limits or DEFAULT_LIMITS
    if g.m > limits.max_oracle_edges:
        raise ScaleLimitError(f"matroid oracle limited to {limits.max_oracle_edges} edges, graph has {g.m}")

    ls: EdgeSet = frozenset(l)
    rest = frozenset(range(g.m)) - ls
    if not ls or not rest:
        return False
    if graphic_rank(g, ls) < 2 or dual_rank(g, rest) < 2:
        return False

    if not is_connected_matroid(ls, lambda s: graphic_rank(g, s)):
        return False
    return is_connected_matroid(rest, lambda s: dual_rank(g, s))


def oracle_disagreements(
    g: Graph, limits: Optional[Limits] = None
) -> Tuple[int, List[Tuple[VertexSet, bool, bool]]]:
    """Compare `is_locked` with the oracle on E(U) for every U with 3 <= |U| <= n - 1.

    Returns the number of sets checked and the (U, graph verdict, oracle verdict)
    triples that disagree.
    """
    limits = limits or DEFAULT_LIMITS
    if g.n > limits.max_cut_vertices:
        raise ScaleLimitError(f"vertex set scan limited to {limits.max_cut_vertices} vertices, graph has {g.n}")
    checked = 0
    out = []
    for k in range(3, g.n):
        for combo in combinations(range(g.n), k):
            u = frozenset(combo)
            checked += 1
            by_graph = bool(is_locked(g, u))
            by_oracle = is_locked_matroid_oracle(g, induced_edges(g, u), limits)
            if by_graph != by_oracle:
                out.append((u, by_graph, by_oracle))
    return checked, out


def is_locked_edge_set(g: Graph, l: Iterable[int]) -> bool:
    """Graph characterization applied to an arbitrary edge set.

    L is locked iff L = E(U) for its own vertex set U and G[U] is locked.
    """
    ls = frozenset(l)
    u = covered_vertices(g, ls)
    return ls == induced_edges(g, u) and bool(is_locked(g, u))


def edge_subset_disagreements(
    g: Graph, limits: Optional[Limits] = None
) -> Tuple[int, List[Tuple[EdgeSet, bool, bool]]]:
    """Compare both characterizations on edge subsets not covered by `oracle_disagreements`.

    Every nonempty L is visited except the E(U) with 3 <= |U| <= n - 1, which
    the vertex-set scan already checks.
    """
    limits = limits or DEFAULT_LIMITS
    if g.m > limits.max_subset_scan_edges:
        raise ScaleLimitError(f"edge subset scan limited to {limits.max_subset_scan_edges} edges, graph has {g.m}")
    checked = 0
    out = []
    for mask in range(1, 1 << g.m):
        ls = frozenset(i for i in range(g.m) if mask >> i & 1)
        u = covered_vertices(g, ls)
        if ls == induced_edges(g, u) and 3 <= len(u) <= g.n - 1:
            continue
        checked += 1
        by_graph = is_locked_edge_set(g, ls)
        by_oracle = is_locked_matroid_oracle(g, ls, limits)
        if by_graph != by_oracle:
            out.append((ls, by_graph, by_oracle))
    return checked, out
