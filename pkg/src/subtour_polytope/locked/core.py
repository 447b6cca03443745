from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Iterable, Iterator, List, Optional, Set, Tuple

from ..config import DEFAULT_LIMITS, Limits
from ..errors import DomainError, ScaleLimitError
from ..graph.core import (
    EdgeSet,
    Graph,
    VertexSet,
    connected_components,
    covered_vertices,
    induced_edges,
    is_two_connected,
    label,
    require_reduced,
)

logger = logging.getLogger(__name__)


class LockCondition(str, Enum):
    """The three requirements on a locked vertex set U."""

    TWO_CONNECTED = "a"  # G[U] is 2-connected
    SIZE = "b"  # 3 <= |U| <= n - 1
    COMPLEMENT_CONNECTED = "c"  # (V(E \ E(U)), E \ E(U)) is connected


@dataclass(frozen=True)
class LockVerdict:
    locked: bool
    failed: Optional[LockCondition] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.locked


@dataclass(frozen=True)
class LockedSubgraph:
    u: VertexSet
    edges: EdgeSet

    @property
    def n_h(self) -> int:
        return len(self.u)

    @property
    def m_h(self) -> int:
        return len(self.edges)

    @property
    def key(self) -> Tuple[int, Tuple[int, ...]]:
        return (len(self.u), tuple(sorted(self.u)))

    @property
    def label(self) -> str:
        return label(self.u)


@dataclass(frozen=True)
class LockedEnumeration:
    """Locked subgraphs in canonical (|U|, lexicographic) order."""

    subgraphs: Tuple[LockedSubgraph, ...] = field(default_factory=tuple)
    truncated: bool = False

    def __iter__(self) -> Iterator[LockedSubgraph]:
        return iter(self.subgraphs)

    def __len__(self) -> int:
        return len(self.subgraphs)

    def __getitem__(self, i: int) -> LockedSubgraph:
        return self.subgraphs[i]

    @property
    def vertex_sets(self) -> List[VertexSet]:
        return [h.u for h in self.subgraphs]


def _locked_conditions(g: Graph, u: VertexSet) -> LockVerdict:
    if not 3 <= len(u) <= g.n - 1:
        return LockVerdict(False, LockCondition.SIZE, f"|U| = {len(u)} outside 3..{g.n - 1}")
    inner = induced_edges(g, u)
    if covered_vertices(g, inner) != u or not is_two_connected(g, inner):
        return LockVerdict(False, LockCondition.TWO_CONNECTED, "induced subgraph is not 2-connected")
    outer = [i for i in range(g.m) if i not in inner]
    if not outer or len(connected_components(g, outer)) != 1:
        return LockVerdict(False, LockCondition.COMPLEMENT_CONNECTED, "complementary subgraph is disconnected")
    return LockVerdict(True)


def is_locked(g: Graph, u: Iterable[int]) -> LockVerdict:
    """Decide whether G[U] is a locked subgraph.

    Args:
        g: 2-connected, simple, loopless graph.
        u: Vertex set U.

    Returns:
        A truthy verdict when locked; otherwise the first failing condition,
        checked in the order size, 2-connectivity, complement connectivity.
    """
    require_reduced(g, "is_locked")
    s = frozenset(u)
    if any(not 0 <= v < g.n for v in s):
        raise DomainError(f"vertex set {sorted(s)} is not a subset of 0..{g.n - 1}")
    return _locked_conditions(g, s)


def _connected_sets_by_size(g: Graph, max_size: int) -> Iterator[List[VertexSet]]:
    """Yield the connected induced vertex sets level by level, each level sorted.

    Every connected set with minimum r arises from a connected set one smaller
    that also has minimum r (drop a leaf of a spanning tree other than r).
    """
    neighbors = [frozenset(g.neighbors(v)) for v in range(g.n)]
    level: Set[VertexSet] = {frozenset([v]) for v in range(g.n)}
    size = 1
    while level and size <= max_size:
        yield sorted(level, key=lambda s: tuple(sorted(s)))
        nxt: Set[VertexSet] = set()
        for s in level:
            root = min(s)
            frontier = set().union(*(neighbors[v] for v in s)) - s
            for v in frontier:
                if v > root:
                    nxt.add(s | {v})
        level = nxt
        size += 1


def enumerate_locked(
    g: Graph, limit: Optional[int] = None, limits: Optional[Limits] = None
) -> LockedEnumeration:
    """All locked subgraphs of g, ordered by (|U|, sorted U).

    Connected induced sets are grown from their lowest vertex and filtered by
    `is_locked`. When `limit` is reached the partial result is flagged.
    """
    require_reduced(g, "enumerate_locked")
    limits = limits or DEFAULT_LIMITS
    if g.n > limits.max_locked_vertices:
        raise ScaleLimitError(
            f"locked enumeration limited to {limits.max_locked_vertices} vertices, graph has {g.n}"
        )

    found: List[LockedSubgraph] = []
    truncated = False
    for level in _connected_sets_by_size(g, g.n - 1):
        for s in level:
            if len(s) < 3:
                continue
            if _locked_conditions(g, s):
                found.append(LockedSubgraph(s, induced_edges(g, s)))
                if limit is not None and len(found) >= limit:
                    truncated = True
                    break
        if truncated:
            break
    logger.debug(f"Enumerated {len(found)} locked subgraphs (truncated={truncated})")
    return LockedEnumeration(tuple(found), truncated)


def complement_connectivity_counting_check(
    g: Graph, u: Iterable[int], l1: Iterable[int], l2: Iterable[int]
) -> bool:
    """Vertex-counting test n_H + n < n_{H ∪ L1} + n_{H ∪ L2} for one bipartition.

    (L1, L2) must partition E \\ E(U) into two nonempty parts and G[U] must be
    2-connected.
    """
    s = frozenset(u)
    inner = induced_edges(g, s)
    if covered_vertices(g, inner) != s or not is_two_connected(g, inner):
        raise DomainError("counting check requires a 2-connected induced subgraph")
    a, b = frozenset(l1), frozenset(l2)
    outer = frozenset(range(g.m)) - inner
    if not a or not b or a & b or (a | b) != outer:
        raise DomainError("L1, L2 must partition E \\ E(U) into two nonempty parts")
    n_h1 = len(s | covered_vertices(g, a))
    n_h2 = len(s | covered_vertices(g, b))
    return len(s) + g.n < n_h1 + n_h2


def counting_check_all_partitions(g: Graph, u: Iterable[int], max_edges: int = 10) -> Optional[bool]:
    """Whether the counting test holds for every bipartition of E \\ E(U).

    Returns None when E \\ E(U) has more than `max_edges` edges or fewer than two.
    """
    s = frozenset(u)
    outer = sorted(frozenset(range(g.m)) - induced_edges(g, s))
    k = len(outer)
    if k < 2 or k > max_edges:
        return None
    # fix the first edge in L1 so each bipartition is visited once
    for mask in range(1 << (k - 1)):
        l1 = [outer[0]] + [outer[i + 1] for i in range(k - 1) if mask >> i & 1]
        l2 = [e for e in outer if e not in l1]
        if not l2:
            continue
        if not complement_connectivity_counting_check(g, s, l1, l2):
            return False
    return True
