"""Cross-module property suites run by `verify --suite`.

Every suite checks a structural statement on one graph by exhaustive or
sampled computation and reports the instances where it fails instead of
raising. A suite that exceeds the configured limits is reported as skipped.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional

from ..config import DEFAULT_LIMITS, Limits
from ..errors import DomainError, PolytopeError, ScaleLimitError, TheoremViolation
from ..geometry.faces import membership
from ..geometry.linalg import rank
from ..geometry.serialize import point_to_json
from ..geometry.simplex import lp_solve
from ..geometry.types import TagKind, indicator
from ..geometry.vertices import enumerate_vertices
from ..graph.core import Graph, connected_components, covered_vertices, induced_edges, is_two_connected
from ..locked.core import counting_check_all_partitions
from ..locked.laminar import is_laminar, is_tight, laminar_bound_check, tight_rows, uncross
from ..locked.matroid import edge_subset_disagreements, oracle_disagreements
from .bound import BoundStatus, bound
from .certify import Verdict, certify
from .decomposition import (
    decompose_extreme_point,
    hamilton_circuits,
    integer_points,
    random_spanning_tree,
    random_uc_family,
    verify_sum_in_Q,
)
from .descriptions import K_description, Q_description, Q_prime_description, full_P, minimal_P, refined_P

logger = logging.getLogger(__name__)


@dataclass
class SuiteResult:
    name: str
    passed: bool = True
    checked: int = 0
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)
    skipped: Optional[str] = None

    def fail(self, payload: Dict[str, Any]) -> None:
        self.passed = False
        self.counterexamples.append(payload)


@dataclass
class SuiteContext:
    g: Graph
    limits: Limits = DEFAULT_LIMITS
    seed: int = 0
    samples: int = 100

    def rng(self) -> random.Random:
        return random.Random(self.seed)


def _vs(u) -> List[int]:
    return [v + 1 for v in sorted(u)]


def _subsets(ctx: SuiteContext, lo: int, hi: int):
    if ctx.g.n > ctx.limits.max_cut_vertices:
        raise ScaleLimitError(f"subset scan limited to {ctx.limits.max_cut_vertices} vertices")
    for k in range(lo, hi + 1):
        for u in combinations(range(ctx.g.n), k):
            yield frozenset(u)


def suite_locked_oracle(ctx: SuiteContext, res: SuiteResult) -> None:
    """Graph characterization of locked sets against the matroid definition.

    Induced edge sets are always compared; every other edge subset too when m is small.
    """
    res.checked, found = oracle_disagreements(ctx.g, ctx.limits)
    for u, by_graph, by_oracle in found:
        res.fail({"U": _vs(u), "graph": by_graph, "oracle": by_oracle})
    if ctx.g.m > ctx.limits.max_subset_scan_edges:
        logger.info(f"Edge subset scan skipped: m = {ctx.g.m} over {ctx.limits.max_subset_scan_edges}")
        return
    checked, found = edge_subset_disagreements(ctx.g, ctx.limits)
    res.checked += checked
    for l, by_graph, by_oracle in found:
        res.fail({"L": sorted(l), "graph": by_graph, "oracle": by_oracle})


def suite_complement_count(ctx: SuiteContext, res: SuiteResult) -> None:
    """Vertex counting over all bipartitions against complementary connectivity."""
    g = ctx.g
    for u in _subsets(ctx, 3, g.n - 1):
        inner = induced_edges(g, u)
        if covered_vertices(g, inner) != u or not is_two_connected(g, inner):
            continue
        counting = counting_check_all_partitions(g, u)
        if counting is None:
            continue
        res.checked += 1
        outer = [i for i in range(g.m) if i not in inner]
        connected = len(connected_components(g, outer)) == 1
        if counting != connected:
            res.fail({"U": _vs(u), "counting": counting, "complement_connected": connected})


def _vertex_diff(a, b) -> Dict[str, Any]:
    sa, sb = set(a), set(b)
    return {
        "only_first": [point_to_json(p) for p in sorted(sa - sb)],
        "only_second": [point_to_json(p) for p in sorted(sb - sa)],
    }


def suite_refined_description(ctx: SuiteContext, res: SuiteResult) -> None:
    """Full, refined (every v0) and minimal descriptions share their vertex set."""
    g = ctx.g
    full = enumerate_vertices(full_P(g, ctx.limits), ctx.limits)
    for v0 in g.vertices:
        res.checked += 1
        refined = enumerate_vertices(refined_P(g, v0, limits=ctx.limits), ctx.limits)
        if refined != full:
            res.fail({"description": "P-refined", "v0": v0 + 1, **_vertex_diff(full, refined)})
    res.checked += 1
    minimal = enumerate_vertices(minimal_P(g, limits=ctx.limits), ctx.limits)
    if minimal != full:
        res.fail({"description": "P-minimal", **_vertex_diff(full, minimal)})


def suite_q_chain(ctx: SuiteContext, res: SuiteResult) -> None:
    """P ⊆ Q ⊆ Q' checked on vertices."""
    g = ctx.g
    q_sys = Q_description(g, limits=ctx.limits)
    qp_sys = Q_prime_description(g, limits=ctx.limits)
    for x in enumerate_vertices(full_P(g, ctx.limits), ctx.limits):
        res.checked += 1
        check = membership(q_sys, x)
        if not check:
            res.fail({"inclusion": "P in Q", "point": point_to_json(x), "violated": check.violated})
    for x in enumerate_vertices(q_sys, ctx.limits):
        res.checked += 1
        check = membership(qp_sys, x)
        if not check:
            res.fail({"inclusion": "Q in Q'", "point": point_to_json(x), "violated": check.violated})


def suite_q_integer_points(ctx: SuiteContext, res: SuiteResult) -> None:
    """0-1 points of Q are exactly the Hamilton circuits."""
    g = ctx.g
    points = integer_points(Q_description(g, limits=ctx.limits), ctx.limits)
    tours = hamilton_circuits(g)
    res.checked = len(points) + len(tours)
    if points != tours:
        res.fail({"integer_points": len(points), "hamilton_circuits": len(tours), **_vertex_diff(points, tours)})


def suite_q_certify(ctx: SuiteContext, res: SuiteResult) -> None:
    """Q's description is minimal with SUBGRAPH faces of dimension m - 2 and dim Q = m - 1."""
    g = ctx.g
    cert = certify(Q_description(g, limits=ctx.limits), ctx.limits)
    if cert.dim != g.m - 1:
        res.fail({"dim": cert.dim, "expected": g.m - 1})
    for c in cert:
        if c.verdict is Verdict.IMPLIED_EQUALITY and c.tag.kind is TagKind.CARD:
            continue
        res.checked += 1
        bad = c.verdict is not Verdict.FACET
        if c.tag.kind is TagKind.SUBGRAPH and c.face_dim != g.m - 2:
            bad = True
        if bad:
            res.fail({"constraint": c.name, "verdict": c.verdict.value, "face_dim": c.face_dim})


def suite_k_dimension(ctx: SuiteContext, res: SuiteResult) -> None:
    """dim K = m - 1 and every SUBGRAPH row of K is a facet of dimension m - 2."""
    g = ctx.g
    cert = certify(K_description(g, limits=ctx.limits), ctx.limits)
    res.checked += 1
    if cert.dim != g.m - 1:
        res.fail({"dim": cert.dim, "expected": g.m - 1})
    for c in cert:
        if c.tag.kind is not TagKind.SUBGRAPH:
            continue
        res.checked += 1
        if c.verdict is not Verdict.FACET or c.face_dim != g.m - 2:
            res.fail({"constraint": c.name, "verdict": c.verdict.value, "face_dim": c.face_dim})


def suite_kn_cut_facets(ctx: SuiteContext, res: SuiteResult) -> None:
    """On K_n a cut row of the full description is a facet iff 2 <= |U| <= n - 2."""
    g = ctx.g
    if not g.is_simple or g.m != g.n * (g.n - 1) // 2:
        res.skipped = "graph is not complete"
        return
    cert = certify(full_P(g, ctx.limits), ctx.limits)
    for c in cert:
        if c.tag.kind is not TagKind.CUT:
            continue
        res.checked += 1
        size = len(c.tag.vertices)
        expected = 2 <= size <= g.n - 2
        if (c.verdict is Verdict.FACET) != expected:
            res.fail({"U": _vs(c.tag.vertices), "verdict": c.verdict.value, "expected_facet": expected})


def suite_uncrossing(ctx: SuiteContext, res: SuiteResult) -> None:
    """Uncrossed families are laminar, tight, rank preserving and within 2|X| - 1."""
    g = ctx.g
    rng = ctx.rng()
    for _ in range(ctx.samples):
        x = indicator(g.m, random_spanning_tree(g, rng))
        size = rng.randint(2, min(g.n, 8))
        w = frozenset(rng.sample(range(g.n), size))
        family = [
            frozenset(s)
            for k in range(2, size + 1)
            for s in combinations(sorted(w), k)
            if is_tight(g, x, frozenset(s))
        ]
        if not family:
            continue
        res.checked += 1
        out = uncross(g, family, x)
        payload = {"W": _vs(w), "x": point_to_json(x), "family": [_vs(s) for s in family]}
        if not is_laminar(out.sets) or not all(is_tight(g, x, s) for s in out):
            res.fail({**payload, "problem": "output not laminar and tight"})
            continue
        if rank(tight_rows(g, x, out.sets)) != rank(tight_rows(g, x, family)):
            res.fail({**payload, "problem": "rank changed", "laminar": [_vs(s) for s in out]})
            continue
        if not laminar_bound_check([s for s in out if s != w], len(w)):
            res.fail({**payload, "problem": "laminar bound exceeded"})


def suite_decomposition(ctx: SuiteContext, res: SuiteResult) -> None:
    """Every vertex of Q decomposes into n points of K with IC and exact reconstruction."""
    g = ctx.g
    for x in enumerate_vertices(Q_description(g, limits=ctx.limits), ctx.limits):
        res.checked += 1
        try:
            dec = decompose_extreme_point(g, x, ctx.limits)
        except TheoremViolation as exc:
            res.fail({"point": point_to_json(x), "error": str(exc), **exc.payload})
            continue
        if dec.claims is not None and not dec.claims.all_hold:
            res.fail({"point": point_to_json(x), "claims": vars(dec.claims)})


def suite_uc_sums(ctx: SuiteContext, res: SuiteResult) -> None:
    """Scaled sums of UC spanning tree families land in Q."""
    g = ctx.g
    rng = ctx.rng()
    for _ in range(ctx.samples):
        fam = random_uc_family(g, rng)
        res.checked += 1
        check = verify_sum_in_Q(g, fam, ctx.limits)
        if not check.consistent:
            res.fail(
                {
                    "family": [point_to_json(x) for x in fam],
                    "sum": point_to_json(check.point),
                    "violated": check.violated,
                }
            )


def suite_bound_oracle(ctx: SuiteContext, res: SuiteResult) -> None:
    """The cutting-plane bound equals the LP over the full description."""
    g = ctx.g
    rng = ctx.rng()
    full = full_P(g, ctx.limits)
    weight_sets = [[Fraction(1)] * g.m]
    for _ in range(min(ctx.samples, 20)):
        weight_sets.append([Fraction(rng.randint(1, 20), rng.randint(1, 4)) for _ in range(g.m)])
    for w in weight_sets:
        res.checked += 1
        report = bound(g, w, limits=ctx.limits)
        oracle = lp_solve(full, w)
        if report.status is not BoundStatus.OPTIMAL or report.bound != oracle.value:
            res.fail(
                {
                    "weights": point_to_json(w),
                    "bound": str(report.bound),
                    "status": report.status.value,
                    "oracle": str(oracle.value),
                }
            )


SUITES: Dict[str, Callable[[SuiteContext, SuiteResult], None]] = {
    "locked-oracle": suite_locked_oracle,
    "complement-count": suite_complement_count,
    "refined-description": suite_refined_description,
    "q-chain": suite_q_chain,
    "q-integer-points": suite_q_integer_points,
    "q-certify": suite_q_certify,
    "k-dimension": suite_k_dimension,
    "kn-cut-facets": suite_kn_cut_facets,
    "uncrossing": suite_uncrossing,
    "decomposition": suite_decomposition,
    "uc-sums": suite_uc_sums,
    "bound-oracle": suite_bound_oracle,
}

# numbered selectors, each expanding to the suites that check that statement
SUITE_ALIASES: Dict[str, List[str]] = {
    "thm1.1": ["kn-cut-facets"],
    "thm1.3": ["k-dimension"],
    "thm1.4": ["uncrossing"],
    "lemma2.1": ["complement-count"],
    "lemma2.2": ["locked-oracle"],
    "lemma2.3": ["refined-description"],
    "lemma2.4": ["q-chain", "q-integer-points"],
    "lemma2.5": ["uncrossing"],
    "thm2.6": ["decomposition", "uc-sums"],
    "thm2.10": ["q-certify", "k-dimension"],
}


def resolve_selector(selector: str) -> List[str]:
    """Suite names for `all`, a suite name, or a numbered alias."""
    if selector == "all":
        return list(SUITES)
    if selector in SUITE_ALIASES:
        return list(SUITE_ALIASES[selector])
    if selector in SUITES:
        return [selector]
    choices = ", ".join(list(SUITES) + list(SUITE_ALIASES))
    raise DomainError(f"unknown suite {selector!r}; choose from {choices} or all")


def run_suite(name: str, ctx: SuiteContext) -> SuiteResult:
    if name not in SUITES:
        raise DomainError(f"unknown suite {name!r}; choose from {', '.join(SUITES)} or all")
    res = SuiteResult(name)
    logger.info(f"Running suite {name}")
    try:
        SUITES[name](ctx, res)
    except ScaleLimitError as exc:
        res.skipped = str(exc)
    except TheoremViolation as exc:
        res.fail({"error": str(exc), **exc.payload})
    except PolytopeError as exc:
        res.fail({"error": f"{type(exc).__name__}: {exc}"})
    status = "skipped" if res.skipped else ("pass" if res.passed else "FAIL")
    logger.info(f"Suite {name}: {status} ({res.checked} checked, {len(res.counterexamples)} counterexamples)")
    return res


def run_suites(
    selector: str,
    g: Graph,
    limits: Optional[Limits] = None,
    seed: int = 0,
    samples: int = 100,
) -> List[SuiteResult]:
    ctx = SuiteContext(g, limits or DEFAULT_LIMITS, seed, samples)
    return [run_suite(name, ctx) for name in resolve_selector(selector)]
