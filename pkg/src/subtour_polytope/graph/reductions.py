"""Preprocessing that brings a graph into the form the polyhedral results assume.

Loops are deleted, a bridge (or a disconnected graph, or a cut vertex) makes the
polytope empty, parallel edges are thinned to one, and series edges are
contracted, repeated until nothing changes. Working graphs keep the original
edge ids; the final graph is relabeled densely and the maps are stored in the
trace so points can be lifted back.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..errors import DomainError
from ..rational import ZERO, RationalLike, to_fraction
from .core import Edge, Graph

logger = logging.getLogger(__name__)


class StepKind(str, Enum):
    DELETE_LOOP = "DeleteLoop"
    DELETE_PARALLEL = "DeleteParallel"
    CONTRACT_SERIES = "ContractSeries"
    SPLIT_BLOCK = "SplitBlock"


class ReductionStatus(str, Enum):
    REDUCED = "Reduced"
    INFEASIBLE_BRIDGE = "InfeasibleBridge"
    DEGENERATE_SMALL = "DegenerateSmall"


@dataclass(frozen=True)
class ReductionStep:
    """One reduction, in original edge and vertex ids.

    - DeleteLoop: `edge` is the loop.
    - DeleteParallel: `edge` is deleted, `kept` survives.
    - ContractSeries: `edge` is contracted into `kept`, `vertex` disappears.
    - SplitBlock: `vertex` is a cut vertex; recorded when the graph is found to
      be separable, which empties the polytope.
    """

    kind: StepKind
    edge: Optional[int] = None
    kept: Optional[int] = None
    vertex: Optional[int] = None


@dataclass(frozen=True)
class ReductionTrace:
    original_n: int
    original_m: int
    steps: Tuple[ReductionStep, ...]
    status: ReductionStatus
    reason: Optional[str] = None
    # reduced vertex index -> original vertex, reduced edge id -> original edge id
    vertex_map: Tuple[int, ...] = field(default_factory=tuple)
    edge_map: Tuple[int, ...] = field(default_factory=tuple)
    bridge_edges: Tuple[int, ...] = field(default_factory=tuple)


class _Work:
    """Mutable working copy keyed by original ids."""

    def __init__(self, g: Graph) -> None:
        self.vertices = set(range(g.n))
        self.ends: Dict[int, Tuple[int, int]] = {e.id: (e.u, e.v) for e in g.edges}
        self.weights: Dict[int, Fraction] = {e.id: e.weight for e in g.edges}

    def simple(self) -> nx.Graph:
        H = nx.Graph()
        H.add_nodes_from(self.vertices)
        for u, v in self.ends.values():
            if u != v:
                H.add_edge(u, v)
        return H

    def incident(self, v: int) -> List[int]:
        return sorted(i for i, (a, b) in self.ends.items() if a == v or b == v)

    def freeze(self) -> Tuple[Graph, Tuple[int, ...], Tuple[int, ...]]:
        vmap = tuple(sorted(self.vertices))
        index = {v: i for i, v in enumerate(vmap)}
        emap = tuple(sorted(self.ends))
        edges = tuple(
            Edge(new, index[self.ends[old][0]], index[self.ends[old][1]], self.weights[old])
            for new, old in enumerate(emap)
        )
        return Graph(len(vmap), edges), vmap, emap


def _bridge_ids(work: _Work, H: nx.Graph) -> List[int]:
    by_pair: Dict[Tuple[int, int], List[int]] = {}
    for i, (u, v) in work.ends.items():
        if u != v:
            by_pair.setdefault((min(u, v), max(u, v)), []).append(i)
    out = []
    for a, b in nx.bridges(H):
        ids = by_pair[(min(a, b), max(a, b))]
        if len(ids) == 1:
            out.append(ids[0])
    return sorted(out)


def preprocess(g: Graph) -> Tuple[Graph, ReductionTrace]:
    """Reduce `g` to a 2-connected, simple, loopless graph of minimum degree 3.

    Degeneracy and emptiness are reported through the trace status, never raised.
    """
    work = _Work(g)
    steps: List[ReductionStep] = []

    def finish(status: ReductionStatus, reason: Optional[str] = None, bridge_edges=()) -> Tuple[Graph, ReductionTrace]:
        reduced, vmap, emap = work.freeze()
        trace = ReductionTrace(
            original_n=g.n,
            original_m=g.m,
            steps=tuple(steps),
            status=status,
            reason=reason,
            vertex_map=vmap,
            edge_map=emap,
            bridge_edges=tuple(bridge_edges),
        )
        logger.info(
            f"Preprocess: {status.value} after {len(steps)} steps "
            f"(n {g.n} -> {reduced.n}, m {g.m} -> {reduced.m})"
        )
        return reduced, trace

    while True:
        if len(work.vertices) < 3:
            return finish(ReductionStatus.DEGENERATE_SMALL, "fewer than 3 vertices")

        for i in sorted(work.ends):
            u, v = work.ends[i]
            if u == v:
                del work.ends[i]
                steps.append(ReductionStep(StepKind.DELETE_LOOP, edge=i))

        H = work.simple()
        if not nx.is_connected(H):
            return finish(ReductionStatus.INFEASIBLE_BRIDGE, "graph is disconnected")
        found = _bridge_ids(work, H)
        if found:
            return finish(ReductionStatus.INFEASIBLE_BRIDGE, "bridge", found)
        cut_vertices = sorted(nx.articulation_points(H))
        if cut_vertices:
            steps.append(ReductionStep(StepKind.SPLIT_BLOCK, vertex=cut_vertices[0]))
            return finish(ReductionStatus.INFEASIBLE_BRIDGE, "cut vertex")

        changed = False
        kept_for: Dict[Tuple[int, int], int] = {}
        for i in sorted(work.ends):
            u, v = work.ends[i]
            key = (min(u, v), max(u, v))
            if key in kept_for:
                del work.ends[i]
                steps.append(ReductionStep(StepKind.DELETE_PARALLEL, edge=i, kept=kept_for[key]))
                changed = True
            else:
                kept_for[key] = i
        if changed:
            continue

        series = [v for v in sorted(work.vertices, reverse=True) if len(work.incident(v)) == 2]
        if series:
            w = series[0]
            kept, gone = work.incident(w)
            a = [x for x in work.ends[kept] if x != w][0]
            b = [x for x in work.ends[gone] if x != w][0]
            work.ends[kept] = (a, b)
            work.weights[kept] = work.weights[kept] + work.weights[gone]
            del work.ends[gone]
            work.vertices.discard(w)
            steps.append(ReductionStep(StepKind.CONTRACT_SERIES, edge=gone, kept=kept, vertex=w))
            continue

        return finish(ReductionStatus.REDUCED)


def lift_point(trace: ReductionTrace, x: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
    """Map a point on the reduced graph back to the original edge set.

    Contracted series edges take the value of their kept partner; deleted
    parallel edges and loops get 0.
    """
    if trace.status is not ReductionStatus.REDUCED:
        raise DomainError(f"cannot lift through a trace with status {trace.status.value}")
    if len(x) != len(trace.edge_map):
        raise DomainError(f"point has dimension {len(x)}, reduced graph has {len(trace.edge_map)} edges")
    values: Dict[int, Fraction] = {old: to_fraction(x[new]) for new, old in enumerate(trace.edge_map)}
    for step in reversed(trace.steps):
        if step.kind is StepKind.CONTRACT_SERIES:
            values[step.edge] = values[step.kept]
        elif step.kind in (StepKind.DELETE_PARALLEL, StepKind.DELETE_LOOP):
            values[step.edge] = ZERO
    return tuple(values.get(i, ZERO) for i in range(trace.original_m))


def reduce_weights(trace: ReductionTrace, w: Sequence[RationalLike]) -> Tuple[Fraction, ...]:
    """Carry original edge weights onto the reduced edges.

    A contracted series edge adds its weight to the kept edge (a tour uses both or
    neither); a deleted parallel edge or loop is dropped.
    """
    if len(w) != trace.original_m:
        raise DomainError(f"weight vector has length {len(w)}, original graph has {trace.original_m} edges")
    weights = {i: to_fraction(v) for i, v in enumerate(w)}
    for step in trace.steps:
        if step.kind is StepKind.CONTRACT_SERIES:
            weights[step.kept] += weights[step.edge]
    return tuple(weights[old] for old in trace.edge_map)
