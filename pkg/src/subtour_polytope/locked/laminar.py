"""Laminar families of tight vertex sets and the uncrossing step."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, List, Sequence, Set, Tuple

from ..errors import DomainError
from ..geometry.linalg import rank
from ..graph.core import Graph, VertexSet, induced_edges
from ..rational import ZERO

logger = logging.getLogger(__name__)


def crosses(a: VertexSet, b: VertexSet) -> bool:
    return bool(a & b) and not a <= b and not b <= a


def is_laminar(sets: Iterable[VertexSet]) -> bool:
    items = list(sets)
    return not any(crosses(a, b) for i, a in enumerate(items) for b in items[i + 1:])


@dataclass(frozen=True)
class LaminarFamily:
    sets: Tuple[VertexSet, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        if not is_laminar(self.sets):
            raise DomainError("family is not laminar")

    def __iter__(self) -> Iterator[VertexSet]:
        return iter(self.sets)

    def __len__(self) -> int:
        return len(self.sets)


def _order(s: VertexSet) -> Tuple[int, Tuple[int, ...]]:
    return (len(s), tuple(sorted(s)))


def is_tight(g: Graph, x: Sequence[Fraction], u: VertexSet) -> bool:
    """x(E(U)) = |U| - 1."""
    return sum((x[i] for i in induced_edges(g, u)), ZERO) == len(u) - 1


def tight_rows(g: Graph, x: Sequence[Fraction], sets: Iterable[VertexSet]) -> List[List[Fraction]]:
    """Incidence rows of E(U), restricted to the support of x.

    Off the support the uncrossing identity only holds up to edges with x = 0,
    so the span is measured there.
    """
    supp = [e for e, v in enumerate(x) if v > 0]
    rows = []
    for u in sets:
        inside = induced_edges(g, u)
        rows.append([Fraction(1) if e in inside else ZERO for e in supp])
    return rows


def uncross(g: Graph, family: Iterable[Iterable[int]], x: Sequence[Fraction]) -> LaminarFamily:
    """Replace a family of tight sets by an equivalent laminar one.

    The family is closed under intersection and union of crossing pairs (every
    such set is again tight), singletons and empty sets are dropped, a maximal
    laminar subfamily is taken in (size, lexicographic) order and finally an
    independent subfamily of it.
    """
    if len(x) != g.m:
        raise DomainError(f"point has dimension {len(x)}, graph has {g.m} edges")
    if any(v < 0 for v in x):
        raise DomainError("uncrossing requires a nonnegative point")
    sets = [frozenset(u) for u in family]
    for u in sets:
        if not is_tight(g, x, u):
            raise DomainError(f"set {sorted(u)} is not tight: x(E(U)) != |U| - 1")

    closure: Set[VertexSet] = {u for u in sets if len(u) > 1}
    changed = True
    while changed:
        changed = False
        items = sorted(closure, key=_order)
        for i, a in enumerate(items):
            for b in items[i + 1:]:
                if not crosses(a, b):
                    continue
                for c in (a & b, a | b):
                    if len(c) > 1 and c not in closure and is_tight(g, x, c):
                        closure.add(c)
                        changed = True

    chosen: List[VertexSet] = []
    for s in sorted(closure, key=_order):
        if all(not crosses(s, t) for t in chosen):
            chosen.append(s)

    independent: List[VertexSet] = []
    current = 0
    for s in chosen:
        r = rank(tight_rows(g, x, independent + [s]))
        if r > current:
            independent.append(s)
            current = r

    logger.debug(f"Uncrossed {len(sets)} sets into {len(independent)} laminar sets")
    return LaminarFamily(tuple(independent))


def laminar_bound_check(fam: Iterable[Iterable[int]], ground_size: int) -> bool:
    """|C| <= 2|X| - 1 for a laminar family C over X that excludes X itself."""
    sets = [frozenset(s) for s in fam]
    if not is_laminar(sets):
        raise DomainError("family is not laminar")
    if any(len(s) >= ground_size for s in sets):
        raise DomainError("the ground set itself must not be a member")
    return len(sets) <= 2 * ground_size - 1
