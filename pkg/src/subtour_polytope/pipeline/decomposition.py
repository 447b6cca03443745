"""Point families over E: IC/UC predicates, tree sums and the decomposition of
extreme points of Q(G) into points of the bases polytope K(G).

For an extreme point x of Q(G) the decomposition is
x = (T + x_1 + ... + x_{n-1}) / (n - 1) with T a spanning tree of the graph
(V, {e : x(e) >= 1/(n-1)}) containing every edge with x(e) = 1 and each x_i a
convex combination of spanning trees.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from typing import List, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from ..config import DEFAULT_LIMITS, Limits
from ..errors import DomainError, ScaleLimitError, TheoremViolation
from ..geometry.faces import convex_split_witness, membership, tight_rank
from ..geometry.serialize import point_to_json
from ..geometry.simplex import Direction, lp_solve
from ..geometry.types import ConstraintSystem, QPoint, Sense, TagKind, indicator, is_integral, support
from ..graph.core import EdgeSet, Graph, connected_components, covered_vertices, graphic_rank, require_reduced
from ..rational import ONE, ZERO, RationalLike, to_fraction
from .descriptions import K_description, Q_description

logger = logging.getLogger(__name__)

PointFamily = List[QPoint]


def _check_family(fam: Sequence[Sequence[RationalLike]]) -> List[QPoint]:
    if not fam:
        raise DomainError("empty point family")
    points = [tuple(to_fraction(v) for v in x) for x in fam]
    dims = {len(x) for x in points}
    if len(dims) != 1:
        raise DomainError(f"family members have different dimensions {sorted(dims)}")
    return points


def satisfies_IC(fam: Sequence[Sequence[RationalLike]]) -> bool:
    """For every edge some member differs from 1."""
    points = _check_family(fam)
    return all(any(x[e] != ONE for x in points) for e in range(len(points[0])))


def satisfies_UC(fam: Sequence[Sequence[RationalLike]]) -> bool:
    """For every edge some member is 0."""
    points = _check_family(fam)
    return all(any(x[e] == ZERO for x in points) for e in range(len(points[0])))


def is_hamilton_circuit(g: Graph, x: Sequence[RationalLike]) -> bool:
    xs = [to_fraction(v) for v in x]
    if len(xs) != g.m or any(v not in (ZERO, ONE) for v in xs):
        return False
    edges = support(xs, 1)
    if len(edges) != g.n or any(g.edges[i].is_loop for i in edges):
        return False
    deg = [0] * g.n
    for i in edges:
        e = g.edges[i]
        deg[e.u] += 1
        deg[e.v] += 1
    if any(d != 2 for d in deg):
        return False
    comps = connected_components(g, edges)
    return len(comps) == 1 and len(comps[0]) == g.n


def hamilton_circuits(g: Graph) -> List[QPoint]:
    """Every Hamilton circuit as a 0-1 point, by brute force from vertex 0.

    Each circuit is listed once (one orientation); on parallel edges the lowest id
    is used. Sorted lexicographically.
    """
    if g.n < 3:
        return []
    out = set()
    for perm in permutations(range(1, g.n)):
        if perm[0] > perm[-1]:
            continue
        tour = (0,) + perm
        ids = []
        for a, b in zip(tour, tour[1:] + (0,)):
            i = g.edge_between(a, b)
            if i is None:
                break
            ids.append(i)
        else:
            out.add(indicator(g.m, ids))
    return sorted(out)


def integer_points(sys: ConstraintSystem, limits: Optional[Limits] = None) -> List[QPoint]:
    """All 0-1 members of the system, sorted.

    When a CARD row fixes x(E) only vectors of that weight are scanned.
    """
    limits = limits or DEFAULT_LIMITS
    if sys.dim > limits.max_oracle_edges:
        raise ScaleLimitError(f"0-1 scan limited to {limits.max_oracle_edges} variables, got {sys.dim}")
    card = next((c for c in sys.by_kind(TagKind.CARD) if c.sense is Sense.EQ), None)
    sizes = [int(card.rhs)] if card is not None and card.rhs.denominator == 1 else range(sys.dim + 1)
    found = []
    for k in sizes:
        for ones in combinations(range(sys.dim), k):
            x = indicator(sys.dim, ones)
            if membership(sys, x):
                found.append(x)
    return sorted(found)


def random_spanning_tree(g: Graph, rng: random.Random) -> EdgeSet:
    """Minimum spanning tree under independent uniform edge weights."""
    G = nx.MultiGraph()
    G.add_nodes_from(range(g.n))
    for e in g.edges:
        if not e.is_loop:
            G.add_edge(e.u, e.v, key=e.id, weight=rng.random())
    tree = frozenset(k for _, _, k in nx.minimum_spanning_edges(G, weight="weight", keys=True, data=False))
    if len(tree) != g.n - 1:
        raise DomainError("graph is disconnected; it has no spanning tree")
    return tree


def random_uc_family(
    g: Graph, rng: random.Random, size: Optional[int] = None, max_tries: int = 1000
) -> PointFamily:
    """`size` (default n) random spanning tree vectors, resampled until UC holds."""
    size = g.n if size is None else size
    for _ in range(max_tries):
        fam = [indicator(g.m, random_spanning_tree(g, rng)) for _ in range(size)]
        if satisfies_UC(fam):
            return fam
    raise DomainError(f"no UC family of {size} spanning trees found in {max_tries} draws")


@dataclass(frozen=True)
class SumCheck:
    """Outcome of testing whether a scaled tree sum lies in Q(G).

    `consistent` is False exactly when UC holds but the sum is not a member.
    """

    point: QPoint
    uc: bool
    ic: bool
    member: bool
    violated: Optional[str] = None

    @property
    def consistent(self) -> bool:
        return self.member or not self.uc


def verify_sum_in_Q(
    g: Graph, fam: Sequence[Sequence[RationalLike]], limits: Optional[Limits] = None
) -> SumCheck:
    """Check s = (1/(n-1)) sum(fam) against Q(g) for a family of n points of K(g)."""
    require_reduced(g, "verify_sum_in_Q")
    points = _check_family(fam)
    if len(points) != g.n:
        raise DomainError(f"family has {len(points)} members, expected n = {g.n}")
    k_sys = K_description(g, limits=limits)
    for i, x in enumerate(points):
        check = membership(k_sys, x)
        if not check:
            raise DomainError(f"family member {i} is not in K(G): violates {check.violated}")
    scale = Fraction(1, g.n - 1)
    s = tuple(scale * sum((x[e] for x in points), ZERO) for e in range(g.m))
    q_check = membership(Q_description(g, limits=limits), s)
    result = SumCheck(s, satisfies_UC(points), satisfies_IC(points), q_check.member, q_check.violated)
    if not result.consistent:
        logger.warning(f"UC family sums outside Q(G): violates {q_check.violated}")
    return result


@dataclass(frozen=True)
class WeightedTree:
    weight: Fraction
    edges: EdgeSet


def _as_tree(g: Graph, p: QPoint) -> Optional[EdgeSet]:
    if not is_integral(p) or any(v not in (ZERO, ONE) for v in p):
        return None
    edges = support(p, 1)
    if len(edges) != g.n - 1 or graphic_rank(g, edges) != g.n - 1:
        return None
    return edges


def caratheodory_split(
    g: Graph, y: Sequence[RationalLike], limits: Optional[Limits] = None
) -> List[WeightedTree]:
    """Write y in K(g) as a convex combination of at most m spanning trees.

    Each round optimizes over the minimal face of K(g) containing the current
    point to obtain a tree T, then moves the point away from T as far as K(g)
    allows; the face shrinks every round.
    """
    k_sys = K_description(g, limits=limits)
    p = tuple(to_fraction(v) for v in y)
    check = membership(k_sys, p)
    if not check:
        raise DomainError(f"point is not in K(G): violates {check.violated}")

    out: List[WeightedTree] = []
    mass = ONE
    for _ in range(g.m + 1):
        face = ConstraintSystem(
            k_sys.dim, tuple(c.with_sense(Sense.EQ) if c.is_tight(p) else c for c in k_sys)
        )
        res = lp_solve(face, p, Direction.MAXIMIZE)
        tree = _as_tree(g, res.point) if res.is_optimal else None
        if tree is None:
            raise TheoremViolation(
                "face of K(G) has a vertex that is not a spanning tree",
                {"point": point_to_json(p), "vertex": point_to_json(res.point) if res.point else None},
            )
        t = indicator(g.m, tree)
        if t == p:
            out.append(WeightedTree(mass, tree))
            break
        step = ONE
        for c in k_sys:
            if c.sense is Sense.EQ or c.is_tight(p):
                continue
            a, b = c.as_le()
            at = sum((a.get(i, ZERO) * t[i] for i in range(g.m)), ZERO)
            ap = sum((a.get(i, ZERO) * p[i] for i in range(g.m)), ZERO)
            if b - at > 0:
                step = min(step, (b - ap) / (b - at))
        if step <= 0 or step >= 1:
            raise TheoremViolation("no admissible step away from a tree", {"point": point_to_json(p)})
        out.append(WeightedTree(mass * step, tree))
        mass *= ONE - step
        p = tuple((pi - step * ti) / (ONE - step) for pi, ti in zip(p, t))
    else:
        raise TheoremViolation("convex decomposition did not terminate", {"point": point_to_json(y)})

    target = tuple(to_fraction(v) for v in y)
    total = tuple(sum((wt.weight for wt in out if e in wt.edges), ZERO) for e in range(g.m))
    if total != target or sum((wt.weight for wt in out), ZERO) != ONE:
        raise TheoremViolation("convex combination does not re-sum to the input", {"point": point_to_json(y)})
    logger.debug(f"Split point into {len(out)} spanning trees")
    return out


@dataclass(frozen=True)
class DecompositionClaims:
    a_nonempty: bool
    a_at_least_n: bool
    gx_connected: bool
    e1_acyclic: bool

    @property
    def all_hold(self) -> bool:
        return self.a_nonempty and self.a_at_least_n and self.gx_connected and self.e1_acyclic


@dataclass(frozen=True)
class Decomposition:
    """x = (1/(n-1)) * sum(members) with members in K(G) satisfying IC."""

    point: QPoint
    members: Tuple[QPoint, ...]
    ic: bool
    residual: QPoint
    integral: bool
    tree: Optional[EdgeSet] = None
    claims: Optional[DecompositionClaims] = None
    splits: Tuple[WeightedTree, ...] = ()


def _pack(trees: List[WeightedTree], groups: int, m: int) -> List[QPoint]:
    """Cut the scaled masses (n-1) * weight sequentially into unit groups."""
    out: List[List[Fraction]] = []
    current = [ZERO] * m
    room = ONE
    for wt in trees:
        left = wt.weight * groups
        while left > 0:
            take = min(left, room)
            for e in wt.edges:
                current[e] += take
            left -= take
            room -= take
            if room == 0:
                out.append(current)
                current = [ZERO] * m
                room = ONE
    if room != ONE:
        raise TheoremViolation("tree masses do not fill whole groups", {"room": str(room)})
    return [tuple(x) for x in out]


def _check_extreme(q_sys: ConstraintSystem, x: QPoint) -> None:
    check = membership(q_sys, x)
    if not check:
        raise DomainError(f"point is not in Q(G): violates {check.violated}")
    if tight_rank(q_sys, x) < q_sys.dim:
        y, z = convex_split_witness(q_sys, x)
        raise DomainError(
            "point is not an extreme point of Q(G)",
            {"split": [point_to_json(y), point_to_json(z)]},
        )


def _finish(g: Graph, x: QPoint, members: List[QPoint], k_sys: ConstraintSystem, **extra) -> Decomposition:
    scale = Fraction(1, g.n - 1)
    avg = tuple(scale * sum((mb[e] for mb in members), ZERO) for e in range(g.m))
    residual = tuple(a - b for a, b in zip(x, avg))
    for i, mb in enumerate(members):
        if not membership(k_sys, mb):
            raise TheoremViolation(f"decomposition member {i} is outside K(G)", {"member": point_to_json(mb)})
    ic = satisfies_IC(members)
    if any(residual) or not ic:
        raise TheoremViolation(
            "decomposition does not reproduce the point with IC",
            {"point": point_to_json(x), "residual": point_to_json(residual), "ic": ic},
        )
    return Decomposition(x, tuple(members), ic, residual, **extra)


def decompose_extreme_point(
    g: Graph, x: Sequence[RationalLike], limits: Optional[Limits] = None
) -> Decomposition:
    """Decompose an extreme point of Q(g) into n members of K(g) satisfying IC.

    Raises:
        DomainError: x is outside Q(g) or not extreme (payload holds a split).
        TheoremViolation: a constructive step failed at this instance.
    """
    require_reduced(g, "decompose_extreme_point")
    xs = tuple(to_fraction(v) for v in x)
    q_sys = Q_description(g, limits=limits)
    q_sys.check_point(xs)
    _check_extreme(q_sys, xs)
    k_sys = K_description(g, limits=limits)
    n = g.n

    if is_integral(xs):
        if not is_hamilton_circuit(g, xs):
            raise TheoremViolation("integer extreme point of Q(G) is not a Hamilton circuit", {"point": point_to_json(xs)})
        paths = [indicator(g.m, support(xs, 1) - {e}) for e in sorted(support(xs, 1))]
        return _finish(g, xs, paths, k_sys, integral=True)

    threshold = Fraction(1, n - 1)
    a = sorted((e for e in range(g.m) if xs[e] >= threshold), key=lambda e: (-xs[e], e))
    e1 = support(xs, 1)
    gx = connected_components(g, a)
    claims = DecompositionClaims(
        a_nonempty=bool(a),
        a_at_least_n=len(a) >= n,
        gx_connected=len(gx) == 1 and len(covered_vertices(g, a)) == n,
        e1_acyclic=graphic_rank(g, e1) == len(e1),
    )
    if not claims.all_hold:
        logger.warning(f"Structural claims fail at this point: {claims}")

    uf = UnionFind(range(n))
    tree = set()
    for e in sorted(e1) + [e for e in a if e not in e1]:
        u, v = g.edges[e].ends
        if uf[u] == uf[v]:
            if e in e1:
                raise TheoremViolation("edges with x(e) = 1 contain a cycle", {"point": point_to_json(xs)})
            continue
        uf.union(u, v)
        tree.add(e)
    if len(tree) != n - 1:
        raise TheoremViolation(
            "no spanning tree containing E_1 inside G_x",
            {"point": point_to_json(xs), "A": sorted(a), "E1": sorted(e1)},
        )
    tree_point = indicator(g.m, tree)
    y = tuple(xi - threshold * ti for xi, ti in zip(xs, tree_point))
    if not membership(k_sys, y):
        raise TheoremViolation("x - T/(n-1) is outside K(G)", {"point": point_to_json(xs), "y": point_to_json(y)})
    splits = caratheodory_split(g, y, limits)
    members = [tree_point] + _pack(splits, n - 1, g.m)
    return _finish(
        g, xs, members, k_sys, integral=False, tree=frozenset(tree), claims=claims, splits=tuple(splits)
    )