import random
from fractions import Fraction

import pytest

from src.subtour_polytope.config import Limits
from src.subtour_polytope.errors import DomainError
from src.subtour_polytope.graph.core import Graph
from src.subtour_polytope.graph.mincut import cut_value, global_min_cut

STOER_WAGNER = Limits(exhaustive_mincut_vertices=0)


def test_exhaustive_breaks_ties_lexicographically(k4):
    cut = global_min_cut(k4, [1] * 6)
    assert cut.side == frozenset({0})
    assert cut.value == 3


def test_stoer_wagner_agrees_on_value(k4, k5):
    assert global_min_cut(k4, [1] * 6, STOER_WAGNER).value == 3
    assert global_min_cut(k5, [1] * 10, STOER_WAGNER).value == 4


def test_petersen_uniform_two_thirds(petersen):
    w = [Fraction(2, 3)] * 15
    assert global_min_cut(petersen, w).value == 2
    assert global_min_cut(petersen, w, STOER_WAGNER).value == 2


def test_zero_weight_split_is_found_by_both_methods():
    g = Graph.complete(6)
    w = [0] * 15
    for i in (0, 1, 5, 12, 13, 14):  # triangles 0-1-2 and 3-4-5
        w[i] = 1
    for limits in (None, STOER_WAGNER):
        cut = global_min_cut(g, w, limits)
        assert cut.value == 0
        assert cut.side == frozenset({0, 1, 2})


def test_cut_value_counts_crossing_weight(prism):
    w = [Fraction(1, 2)] * 6 + [1, 1, 1]
    assert cut_value(prism, w, frozenset({0, 1, 2})) == 3
    assert cut_value(prism, w, frozenset({0})) == 2


def test_rejects_negative_or_misshaped_weights(k4):
    with pytest.raises(DomainError):
        global_min_cut(k4, [1, 1, 1, 1, 1, -1])
    with pytest.raises(DomainError):
        global_min_cut(k4, [1, 1])
    with pytest.raises(DomainError):
        global_min_cut(Graph(1), [])


def random_graph(rng: random.Random) -> Graph:
    n = rng.randint(2, 10)
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5]
    return Graph.from_pairs(n, pairs)


def test_stoer_wagner_matches_enumeration_on_random_graphs():
    rng = random.Random(11)
    for _ in range(60):
        g = random_graph(rng)
        w = [Fraction(rng.randint(0, 6), rng.randint(1, 3)) for _ in range(g.m)]
        exact = global_min_cut(g, w)
        fast = global_min_cut(g, w, STOER_WAGNER)
        assert fast.value == exact.value
        assert 0 in fast.side and len(fast.side) < g.n
        assert cut_value(g, w, fast.side) == fast.value
