from itertools import combinations

import pytest

from src.subtour_polytope.errors import DomainError
from src.subtour_polytope.graph.core import (
    Edge,
    Graph,
    articulation_points,
    bridges,
    canonical_side,
    connected_components,
    delta,
    dual_rank,
    graphic_rank,
    induced_edges,
    is_reduced_form,
    is_two_connected,
    label,
)
from src.subtour_polytope.graph.parser import load_graph


def test_complete_graph_edge_order(k4):
    assert k4.n == 4 and k4.m == 6
    assert [(e.u, e.v) for e in k4.edges] == [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]
    assert k4.edge_between(3, 2) == 5
    assert k4.edge_between(0, 0) is None


def test_delta_and_induced_edges(k4):
    assert delta(k4, [0]) == frozenset({0, 1, 2})
    assert delta(k4, [0, 1]) == frozenset({1, 2, 3, 4})
    assert induced_edges(k4, [0, 1, 2]) == frozenset({0, 1, 3})


def test_delta_rejects_empty_and_full_sets(k4):
    with pytest.raises(DomainError):
        delta(k4, [])
    with pytest.raises(DomainError):
        delta(k4, [0, 1, 2, 3])
    with pytest.raises(DomainError):
        induced_edges(k4, [7])


def test_edge_ids_must_be_dense():
    with pytest.raises(DomainError):
        Graph(3, (Edge(1, 0, 1),))
    with pytest.raises(DomainError):
        Graph(2, (Edge(0, 0, 5),))


def test_edge_other_end():
    e = Edge(0, 2, 4)
    assert e.other(2) == 4
    assert e.other(4) == 2
    with pytest.raises(DomainError):
        e.other(3)


def test_loops_and_parallels_break_simplicity():
    g = Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2), (0, 1)])
    assert not g.is_simple
    assert not Graph.from_pairs(3, [(0, 1), (1, 2), (0, 2), (1, 1)]).is_simple
    assert Graph.complete(3).is_simple


def test_bridge_graph_structure(graphs_dir):
    g = load_graph(graphs_dir / "bridge.graph")
    assert bridges(g) == frozenset({6})
    assert articulation_points(g) == [2, 3]
    assert not is_reduced_form(g)


def test_parallel_edge_is_never_a_bridge():
    g = Graph.from_pairs(2, [(0, 1), (0, 1)])
    assert bridges(g) == frozenset()


def test_two_connectivity_of_restricted_subgraphs(k4, prism):
    assert is_two_connected(k4)
    assert is_two_connected(k4, [0, 1, 3])
    assert not is_two_connected(prism, [0, 6])
    assert not is_two_connected(Graph.from_pairs(2, [(0, 1), (0, 1)]))


def test_connected_components_of_an_edge_subset(prism):
    comps = connected_components(prism, [0, 1, 2, 3, 4, 5])
    assert comps == [frozenset({0, 1, 2}), frozenset({3, 4, 5})]


def test_cycle_and_bond_ranks(k4):
    assert graphic_rank(k4, range(6)) == 3
    assert graphic_rank(k4, [0, 1, 3]) == 2
    assert dual_rank(k4, range(6)) == 3
    # the star at vertex 3 is a bond
    assert dual_rank(k4, [2, 4, 5]) == 2


def test_reduced_form_accepts_cycles(k4):
    c4 = Graph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert is_reduced_form(c4)
    assert is_reduced_form(k4)


def test_canonical_side_and_label(k4):
    assert canonical_side(k4, [1, 2]) == frozenset({0, 3})
    assert canonical_side(k4, [0, 2]) == frozenset({0, 2})
    assert label([2, 0, 1]) == "1_2_3"


def test_networkx_view_keeps_edge_ids(prism):
    G = prism.to_networkx()
    assert G.number_of_nodes() == 6
    assert sorted(k for _, _, k in G.edges(keys=True)) == list(range(9))


def edge_subsets(g: Graph):
    for mask in range(1 << g.m):
        yield frozenset(i for i in range(g.m) if mask >> i & 1)


def test_graphic_rank_is_a_matroid_rank(prism):
    # local submodularity r(A+e) + r(A+f) >= r(A+e+f) + r(A) is equivalent to submodularity
    for g in (Graph.complete(4), Graph.complete(5), prism):
        assert graphic_rank(g, frozenset()) == 0
        for a in edge_subsets(g):
            r = graphic_rank(g, a)
            outside = [e for e in range(g.m) if e not in a]
            plus = {e: graphic_rank(g, a | {e}) for e in outside}
            for e in outside:
                assert plus[e] - r in (0, 1)
            for e, f in combinations(outside, 2):
                assert plus[e] + plus[f] >= graphic_rank(g, a | {e, f}) + r


def test_edges_split_into_both_sides_and_the_cut(prism):
    for g in (Graph.complete(5), prism):
        for k in range(1, g.n):
            for u in combinations(range(g.n), k):
                rest = [v for v in range(g.n) if v not in u]
                inner, outer, cut = induced_edges(g, u), induced_edges(g, rest), delta(g, u)
                assert len(inner) + len(outer) + len(cut) == g.m
                assert not (inner & cut) and not (outer & cut) and not (inner & outer)
