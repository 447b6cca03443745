import random
from fractions import Fraction

import pytest

from src.subtour_polytope.errors import DomainError
from src.subtour_polytope.graph.core import Graph, delta, is_reduced_form
from src.subtour_polytope.graph.parser import load_graph
from src.subtour_polytope.graph.reductions import (
    ReductionStatus,
    StepKind,
    lift_point,
    preprocess,
    reduce_weights,
)
from src.subtour_polytope.pipeline.decomposition import hamilton_circuits


def test_reduced_graph_is_left_alone(k4):
    reduced, trace = preprocess(k4)
    assert trace.status is ReductionStatus.REDUCED
    assert trace.steps == ()
    assert reduced == k4
    assert trace.edge_map == tuple(range(6))


def test_bridge_empties_the_polytope(graphs_dir):
    _, trace = preprocess(load_graph(graphs_dir / "bridge.graph"))
    assert trace.status is ReductionStatus.INFEASIBLE_BRIDGE
    assert trace.reason == "bridge"
    assert trace.bridge_edges == (6,)


def test_cut_vertex_is_recorded_as_block_split():
    bowtie = Graph.from_pairs(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])
    _, trace = preprocess(bowtie)
    assert trace.status is ReductionStatus.INFEASIBLE_BRIDGE
    assert trace.reason == "cut vertex"
    assert trace.steps[-1].kind is StepKind.SPLIT_BLOCK
    assert trace.steps[-1].vertex == 2


def test_disconnected_graph():
    g = Graph.from_pairs(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])
    _, trace = preprocess(g)
    assert trace.status is ReductionStatus.INFEASIBLE_BRIDGE
    assert trace.reason == "graph is disconnected"


def test_cycle_collapses_below_three_vertices(graphs_dir):
    _, trace = preprocess(load_graph(graphs_dir / "c5.graph"))
    assert trace.status is ReductionStatus.DEGENERATE_SMALL
    assert any(s.kind is StepKind.CONTRACT_SERIES for s in trace.steps)


def test_loop_and_parallel_edge_are_deleted():
    g = Graph.from_pairs(4, [(0, 0), (0, 1), (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
    reduced, trace = preprocess(g)
    assert trace.status is ReductionStatus.REDUCED
    assert [(s.kind, s.edge, s.kept) for s in trace.steps] == [
        (StepKind.DELETE_LOOP, 0, None),
        (StepKind.DELETE_PARALLEL, 2, 1),
    ]
    assert trace.edge_map == (1, 3, 4, 5, 6, 7)
    assert reduced == Graph.complete(4)


def test_series_contraction_sums_weights(graphs_dir):
    g = load_graph(graphs_dir / "k4_subdivided.graph")
    reduced, trace = preprocess(g)
    assert trace.status is ReductionStatus.REDUCED
    assert is_reduced_form(reduced)
    assert len(trace.steps) == 1
    step = trace.steps[0]
    assert (step.kind, step.edge, step.kept, step.vertex) == (StepKind.CONTRACT_SERIES, 6, 5, 4)
    assert trace.vertex_map == (0, 1, 2, 3)
    assert (reduced.edges[5].u, reduced.edges[5].v) == (2, 3)
    assert reduced.edges[5].weight == 3
    assert reduce_weights(trace, g.weights) == tuple(Fraction(w) for w in (3, 4, 5, 5, 4, 3))


def test_lift_point_copies_series_partner(graphs_dir):
    g = load_graph(graphs_dir / "k4_subdivided.graph")
    _, trace = preprocess(g)
    tour = [1, 1, 0, 0, 1, 1]  # 1-2-4-3-1 on the reduced K4
    assert lift_point(trace, tour) == tuple(Fraction(v) for v in (1, 1, 0, 0, 1, 1, 1))
    with pytest.raises(DomainError):
        lift_point(trace, [1, 1])


def test_lift_refuses_non_reduced_trace(graphs_dir):
    _, trace = preprocess(load_graph(graphs_dir / "bridge.graph"))
    with pytest.raises(DomainError):
        lift_point(trace, [])


def test_preprocess_is_idempotent_after_reducing(graphs_dir):
    reduced, trace = preprocess(load_graph(graphs_dir / "k4_subdivided.graph"))
    assert trace.steps
    again, second = preprocess(reduced)
    assert second.status is ReductionStatus.REDUCED
    assert second.steps == ()
    assert again == reduced
    assert second.edge_map == tuple(range(reduced.m))


def test_lifted_points_keep_every_degree_at_two(graphs_dir):
    g = load_graph(graphs_dir / "k4_subdivided.graph")
    reduced, trace = preprocess(g)
    tours = hamilton_circuits(reduced)
    rng = random.Random(4)
    for _ in range(100):
        mix = [Fraction(rng.randint(0, 5)) for _ in tours]
        if not any(mix):
            mix[0] = Fraction(1)
        total = sum(mix)
        x = [sum(c * t[e] for c, t in zip(mix, tours)) / total for e in range(reduced.m)]
        lifted = lift_point(trace, x)
        assert len(lifted) == g.m
        for v in range(g.n):
            assert sum(lifted[e] for e in delta(g, {v})) == 2
