import pytest

from src.subtour_polytope.errors import DomainError
from src.subtour_polytope.geometry.types import indicator
from src.subtour_polytope.locked.laminar import (
    LaminarFamily,
    crosses,
    is_laminar,
    is_tight,
    laminar_bound_check,
    uncross,
)


def test_crossing_pairs():
    assert crosses(frozenset({0, 1}), frozenset({1, 2}))
    assert not crosses(frozenset({0, 1}), frozenset({0, 1, 2}))
    assert not crosses(frozenset({0}), frozenset({1}))
    assert is_laminar([frozenset({0, 1}), frozenset({0, 1, 2}), frozenset({3})])
    assert not is_laminar([frozenset({0, 1}), frozenset({1, 2})])


def test_family_rejects_crossing_sets():
    with pytest.raises(DomainError):
        LaminarFamily((frozenset({0, 1}), frozenset({1, 2})))


def test_uncross_two_crossing_pairs_on_a_tour(k4):
    # tour 1-2-3-4-1 uses edges 12, 23, 34, 14
    x = indicator(6, [0, 3, 5, 2])
    assert is_tight(k4, x, frozenset({0, 1}))
    assert is_tight(k4, x, frozenset({1, 2}))
    out = uncross(k4, [{0, 1}, {1, 2}], x)
    assert out.sets == (frozenset({0, 1}), frozenset({0, 1, 2}))


def test_uncross_drops_singletons_and_dependent_sets(k4):
    x = indicator(6, [0, 3, 5, 2])
    out = uncross(k4, [{0}, {0, 1}, {0, 1}], x)
    assert out.sets == (frozenset({0, 1}),)


def test_uncross_rejects_loose_sets(k4):
    x = indicator(6, [0, 3, 5, 2])
    with pytest.raises(DomainError):
        uncross(k4, [{0, 2}], x)
    with pytest.raises(DomainError):
        uncross(k4, [{0, 1}], x[:3])


def test_laminar_bound():
    singletons_and_prefixes = [{0}, {1}, {2}, {3}, {0, 1}, {0, 1, 2}]
    assert laminar_bound_check(singletons_and_prefixes, 4)
    with pytest.raises(DomainError):
        laminar_bound_check([{0, 1}, {1, 2}], 4)
    with pytest.raises(DomainError):
        laminar_bound_check([{0, 1, 2, 3}], 4)
