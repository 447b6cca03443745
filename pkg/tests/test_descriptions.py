import pytest

from src.subtour_polytope.config import Limits
from src.subtour_polytope.errors import DomainError, ScaleLimitError
from src.subtour_polytope.geometry.types import Sense, TagKind, qpoint
from src.subtour_polytope.geometry.vertices import enumerate_vertices
from src.subtour_polytope.graph.core import Graph
from src.subtour_polytope.graph.parser import load_graph
from src.subtour_polytope.pipeline.descriptions import (
    DescriptionKind,
    K_description,
    Q_description,
    Q_prime_description,
    canonical_cuts,
    describe,
    full_P,
    kn_minimal_P,
    minimal_P,
    refined_P,
)


def kinds(sys):
    return [c.tag.kind for c in sys]


def test_canonical_cuts_order():
    assert canonical_cuts(4) == [
        frozenset({0}),
        frozenset({0, 1}),
        frozenset({0, 2}),
        frozenset({0, 3}),
        frozenset({0, 1, 2}),
        frozenset({0, 1, 3}),
        frozenset({0, 2, 3}),
    ]
    assert len(canonical_cuts(5)) == 15


def test_full_description_of_k4(k4):
    sys = full_P(k4)
    assert len(sys) == 23
    assert sys.names[:2] == ["nonneg_e1", "nonneg_e2"]
    assert sys.names[12:16] == ["degree_1", "degree_2", "degree_3", "degree_4"]
    assert sys.names[16:19] == ["cut_1", "cut_1_2", "cut_1_3"]
    cut = sys.by_name("cut_1_2")
    assert cut.support == frozenset({1, 2, 3, 4})
    assert (cut.sense, cut.rhs) == (Sense.GE, 2)


def test_full_description_is_limited(k4):
    with pytest.raises(ScaleLimitError):
        full_P(k4, Limits(max_cut_vertices=3))


def test_refined_description_skips_v0(k4):
    sys = refined_P(k4, v0=2)
    assert len(sys) == 20
    assert [c.name for c in sys.by_kind(TagKind.DEGREE)] == ["degree_1", "degree_2", "degree_4"]
    assert [c.name for c in sys.by_kind(TagKind.CUT)] == ["cut_1_2_3", "cut_1_2_4", "cut_1_3_4", "cut_2_3_4"]
    assert sys[-1].name == "card" and sys[-1].rhs == 4
    with pytest.raises(DomainError):
        refined_P(k4, v0=4)


def test_minimal_description(k4, k5):
    assert len(minimal_P(k4)) == 16
    assert len(minimal_P(k4, keep_ub=False)) == 10
    sys = minimal_P(k5)
    cuts = sys.by_kind(TagKind.CUT)
    assert len(cuts) == 10
    # a triangle avoiding vertex 1 is written as its own side
    assert "cut_3_4_5" in [c.name for c in cuts]
    assert len(sys) == 35


def test_kn_minimal_description(k4, k5, prism):
    sys = kn_minimal_P(k5)
    assert TagKind.UB1 not in kinds(sys)
    assert len(sys.by_kind(TagKind.CUT)) == 10
    assert len(kn_minimal_P(k4)) == 13
    with pytest.raises(DomainError):
        kn_minimal_P(prism)


def test_q_family_order(k4):
    sys = Q_description(k4)
    assert len(sys) == 17
    order = kinds(sys)
    assert order == [TagKind.NONNEG] * 6 + [TagKind.UB1] * 6 + [TagKind.SUBGRAPH] * 4 + [TagKind.CARD]
    assert sys.by_name("subgraph_1_2_3").rhs == 2


def test_q_prime_relaxes_degrees(k4):
    sys = Q_prime_description(k4)
    lbs = sys.by_kind(TagKind.DEGREE_LB)
    assert [c.name for c in lbs] == ["degree_lb_1", "degree_lb_2", "degree_lb_3", "degree_lb_4"]
    assert all(c.sense is Sense.GE for c in lbs)
    assert sys[-1].tag.kind is TagKind.CARD


def test_k_description_fixes_tree_size(k4):
    sys = K_description(k4)
    assert sys[-1].rhs == 3
    assert len(enumerate_vertices(sys)) == 16


def test_cycle_polytope_is_the_all_ones_point():
    c4 = Graph.from_pairs(4, [(0, 1), (1, 2), (2, 3), (0, 3)])
    assert enumerate_vertices(Q_description(c4)) == [qpoint([1, 1, 1, 1])]


def test_describe_dispatch(k4):
    assert len(describe(k4, "P-full")) == 23
    assert len(describe(k4, DescriptionKind.P_REFINED, v0=0)) == 20
    assert len(describe(k4, "P-minimal", keep_ub=False)) == 10
    assert len(describe(k4, "P-kn")) == 13
    assert len(describe(k4, "Q")) == 17
    assert len(describe(k4, "Q-prime")) == 21
    assert len(describe(k4, "K")) == 17
    with pytest.raises(ValueError):
        describe(k4, "R")


def test_builders_need_reduced_graphs(graphs_dir):
    g = load_graph(graphs_dir / "bridge.graph")
    for build in (full_P, refined_P, minimal_P, Q_description, Q_prime_description, K_description):
        with pytest.raises(DomainError):
            build(g)
