from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from ..errors import DomainError
from ..rational import ONE, RationalLike, to_fraction

VertexSet = FrozenSet[int]
EdgeSet = FrozenSet[int]


@dataclass(frozen=True)
class Edge:
    """An undirected edge with a stable id and an exact weight."""

    id: int
    u: int
    v: int
    weight: Fraction = ONE

    @property
    def is_loop(self) -> bool:
        return self.u == self.v

    @property
    def ends(self) -> Tuple[int, int]:
        return (self.u, self.v) if self.u <= self.v else (self.v, self.u)

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise DomainError(f"vertex {x} is not an end of edge {self.id}")


@dataclass(frozen=True)
class Graph:
    """Undirected multigraph on vertices 0..n-1 with edge ids 0..m-1.

    Loops and parallel edges are representable. Instances are immutable; derived
    indexes are computed lazily and cached.
    """

    n: int
    edges: Tuple[Edge, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if self.n < 0:
            raise DomainError(f"vertex count must be nonnegative, got {self.n}")
        for i, e in enumerate(self.edges):
            if e.id != i:
                raise DomainError(f"edge ids must be dense 0..m-1; position {i} holds id {e.id}")
            if not (0 <= e.u < self.n and 0 <= e.v < self.n):
                raise DomainError(f"edge {e.id} has an endpoint outside 0..{self.n - 1}")

    @classmethod
    def from_pairs(
        cls,
        n: int,
        pairs: Iterable[Tuple[int, int]],
        weights: Optional[Sequence[RationalLike]] = None,
    ) -> "Graph":
        pairs = list(pairs)
        if weights is not None and len(weights) != len(pairs):
            raise DomainError(f"{len(weights)} weights for {len(pairs)} edges")
        edges = tuple(
            Edge(i, u, v, to_fraction(weights[i]) if weights is not None else ONE)
            for i, (u, v) in enumerate(pairs)
        )
        return cls(n, edges)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls.from_pairs(n, [(i, j) for i in range(n) for j in range(i + 1, n)])

    @property
    def m(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def all_edges(self) -> EdgeSet:
        return frozenset(range(self.m))

    @property
    def weights(self) -> Tuple[Fraction, ...]:
        return tuple(e.weight for e in self.edges)

    def with_weights(self, weights: Sequence[RationalLike]) -> "Graph":
        return Graph.from_pairs(self.n, [(e.u, e.v) for e in self.edges], weights)

    @cached_property
    def incidence(self) -> Tuple[Tuple[int, ...], ...]:
        """Edge ids at each vertex; a loop is listed once."""
        inc: List[List[int]] = [[] for _ in range(self.n)]
        for e in self.edges:
            inc[e.u].append(e.id)
            if not e.is_loop:
                inc[e.v].append(e.id)
        return tuple(tuple(ids) for ids in inc)

    def degree(self, v: int) -> int:
        """Number of edge ends at v (a loop counts twice)."""
        return sum(2 if self.edges[i].is_loop else 1 for i in self.incidence[v])

    def neighbors(self, v: int) -> List[int]:
        return sorted({self.edges[i].other(v) for i in self.incidence[v] if not self.edges[i].is_loop})

    @cached_property
    def has_loops(self) -> bool:
        return any(e.is_loop for e in self.edges)

    @cached_property
    def is_simple(self) -> bool:
        seen = set()
        for e in self.edges:
            if e.is_loop or e.ends in seen:
                return False
            seen.add(e.ends)
        return True

    def edge_between(self, u: int, v: int) -> Optional[int]:
        """Lowest edge id joining u and v, if any."""
        key = (u, v) if u <= v else (v, u)
        for i in self.incidence[u]:
            if self.edges[i].ends == key:
                return i
        return None

    def to_networkx(self, restrict: Optional[Iterable[int]] = None, *, all_nodes: bool = True) -> nx.MultiGraph:
        """MultiGraph keyed by edge id; `restrict` selects a subset of edges."""
        G = nx.MultiGraph()
        if all_nodes:
            G.add_nodes_from(range(self.n))
        ids = range(self.m) if restrict is None else sorted(restrict)
        for i in ids:
            e = self.edges[i]
            G.add_edge(e.u, e.v, key=e.id, weight=e.weight)
        return G


def _check_vertex_set(g: Graph, u: Iterable[int]) -> VertexSet:
    s = frozenset(u)
    for v in s:
        if not 0 <= v < g.n:
            raise DomainError(f"vertex {v} outside 0..{g.n - 1}")
    return s


def delta(g: Graph, u: Iterable[int]) -> EdgeSet:
    """Edges with exactly one end in U (the cut δ(U)); loops never appear."""
    s = _check_vertex_set(g, u)
    if not s:
        raise DomainError("delta requires a nonempty vertex set")
    if len(s) == g.n:
        raise DomainError("delta requires a proper vertex set")
    return frozenset(e.id for e in g.edges if (e.u in s) != (e.v in s))


def induced_edges(g: Graph, u: Iterable[int]) -> EdgeSet:
    """Edges with both ends in U, loops included."""
    s = _check_vertex_set(g, u)
    return frozenset(e.id for e in g.edges if e.u in s and e.v in s)


def covered_vertices(g: Graph, restrict: Iterable[int]) -> VertexSet:
    out = set()
    for i in restrict:
        e = g.edges[i]
        out.add(e.u)
        out.add(e.v)
    return frozenset(out)


def connected_components(g: Graph, restrict: Optional[Iterable[int]] = None) -> List[VertexSet]:
    """Components of (V(restrict), restrict), ordered by smallest vertex.

    Vertices incident to no edge of `restrict` are left out. With `restrict=None`
    every edge is used and isolated vertices form singleton components.
    """
    if restrict is None:
        G = g.to_networkx()
    else:
        G = g.to_networkx(restrict, all_nodes=False)
    comps = [frozenset(c) for c in nx.connected_components(G)]
    return sorted(comps, key=min)


def is_connected(g: Graph) -> bool:
    return g.n > 0 and len(connected_components(g)) == 1


def is_two_connected(g: Graph, restrict: Optional[Iterable[int]] = None) -> bool:
    """2-connectivity of the subgraph (V(restrict), restrict).

    At least three vertices are required, so a single edge (or a bundle of
    parallel edges) is not 2-connected. Loops are ignored.
    """
    ids = range(g.m) if restrict is None else restrict
    H = nx.Graph()
    if restrict is None:
        H.add_nodes_from(range(g.n))
    for i in ids:
        e = g.edges[i]
        if e.is_loop:
            H.add_node(e.u)
        else:
            H.add_edge(e.u, e.v)
    if H.number_of_nodes() < 3:
        return False
    return nx.is_biconnected(H)


def articulation_points(g: Graph) -> List[int]:
    H = nx.Graph(g.to_networkx())
    return sorted(nx.articulation_points(H))


def bridges(g: Graph) -> EdgeSet:
    """All cut edges. Parallel edges and loops are never bridges."""
    H = nx.Graph()
    H.add_nodes_from(range(g.n))
    multiplicity: Dict[Tuple[int, int], List[int]] = {}
    for e in g.edges:
        if e.is_loop:
            continue
        multiplicity.setdefault(e.ends, []).append(e.id)
        H.add_edge(e.u, e.v)
    out = set()
    for a, b in nx.bridges(H):
        ids = multiplicity[(a, b) if a <= b else (b, a)]
        if len(ids) == 1:
            out.add(ids[0])
    return frozenset(out)


def graphic_rank(g: Graph, f: Iterable[int]) -> int:
    """Rank of F in the cycle matroid: |V(F)| minus the number of components of F."""
    uf = UnionFind()
    rank = 0
    for i in f:
        e = g.edges[i]
        if uf[e.u] != uf[e.v]:
            uf.union(e.u, e.v)
            rank += 1
    return rank


def dual_rank(g: Graph, f: Iterable[int]) -> int:
    """Rank of F in the bond matroid: |F| - r(E) + r(E \\ F)."""
    fs = frozenset(f)
    rest = [i for i in range(g.m) if i not in fs]
    return len(fs) - graphic_rank(g, range(g.m)) + graphic_rank(g, rest)


def is_reduced_form(g: Graph) -> bool:
    """2-connected, simple and loopless: the input class of the polyhedral builders."""
    return g.is_simple and is_two_connected(g)


def require_reduced(g: Graph, what: str) -> None:
    if not is_reduced_form(g):
        raise DomainError(f"{what} requires a 2-connected simple loopless graph")


def canonical_side(g: Graph, u: Iterable[int]) -> VertexSet:
    """The side of {U, V \\ U} that contains vertex 0."""
    s = _check_vertex_set(g, u)
    if 0 in s:
        return s
    return frozenset(v for v in range(g.n) if v not in s)


def label(u: Iterable[int]) -> str:
    """1-based underscore label of a vertex set, e.g. {0, 1, 2} -> "1_2_3"."""
    return "_".join(str(v + 1) for v in sorted(u))
