import pytest

from src.subtour_polytope.config import Limits
from src.subtour_polytope.errors import DomainError
from src.subtour_polytope.graph.core import Graph
from src.subtour_polytope.pipeline.verify import (
    SUITE_ALIASES,
    SUITES,
    SuiteContext,
    resolve_selector,
    run_suite,
    run_suites,
)


def test_suite_names():
    assert list(SUITES) == [
        "locked-oracle",
        "complement-count",
        "refined-description",
        "q-chain",
        "q-integer-points",
        "q-certify",
        "k-dimension",
        "kn-cut-facets",
        "uncrossing",
        "decomposition",
        "uc-sums",
        "bound-oracle",
    ]


def test_structural_suites_pass_on_k5(k5):
    for name in ("locked-oracle", "complement-count", "q-integer-points", "kn-cut-facets"):
        res = run_suite(name, SuiteContext(k5))
        assert res.passed, name
        assert res.checked > 0


def test_prism_descriptions_agree(prism):
    for name in ("refined-description", "q-chain", "decomposition"):
        res = run_suite(name, SuiteContext(prism))
        assert res.passed, (name, res.counterexamples)


def test_sampled_suites_are_reproducible(k4):
    first = run_suites("uncrossing", k4, seed=5, samples=10)[0]
    second = run_suites("uncrossing", k4, seed=5, samples=10)[0]
    assert first.passed
    assert first.checked == second.checked


def test_q_dimension_claim_fails_on_k4(k4):
    res = run_suite("q-certify", SuiteContext(k4))
    assert not res.passed
    assert {"dim": 2, "expected": 5} in res.counterexamples


def test_two_lobe_graph_is_a_locked_counterexample():
    g = Graph.from_pairs(
        7,
        [
            (0, 1), (1, 2), (0, 2),
            (3, 4), (3, 0), (3, 1), (4, 0), (4, 1),
            (5, 6), (5, 0), (5, 2), (6, 0), (6, 2),
        ],
    )
    res = run_suite("locked-oracle", SuiteContext(g))
    assert not res.passed
    assert {"U": [1, 2, 3], "graph": True, "oracle": False} in res.counterexamples


def test_non_complete_graph_skips_kn_suite(prism):
    res = run_suite("kn-cut-facets", SuiteContext(prism))
    assert res.passed
    assert res.skipped == "graph is not complete"


def test_scale_limits_mark_suites_skipped(k5):
    res = run_suite("q-certify", SuiteContext(k5, Limits(max_vertex_edges=4)))
    assert res.skipped is not None
    assert res.passed


def test_unknown_suite(k4):
    with pytest.raises(DomainError):
        run_suite("nope", SuiteContext(k4))


def test_numbered_aliases_expand_to_suites(k5):
    assert resolve_selector("thm2.6") == ["decomposition", "uc-sums"]
    assert resolve_selector("kn-cut-facets") == ["kn-cut-facets"]
    assert resolve_selector("all") == list(SUITES)
    assert all(set(names) <= set(SUITES) for names in SUITE_ALIASES.values())
    results = run_suites("lemma2.2", k5)
    assert [r.name for r in results] == ["locked-oracle"]
    assert results[0].passed
    with pytest.raises(DomainError):
        resolve_selector("lemma9.9")


def test_locked_oracle_scans_edge_subsets_of_small_graphs(k5, petersen):
    # 15 vertex sets, then the 1023 nonempty edge subsets minus their 15 edge sets
    assert run_suite("locked-oracle", SuiteContext(k5)).checked == 15 + 1008
    res = run_suite("locked-oracle", SuiteContext(petersen))
    assert res.skipped is None


def test_bound_matches_the_full_lp_on_twenty_weight_vectors(k5, prism):
    for g in (k5, prism):
        res = run_suite("bound-oracle", SuiteContext(g, seed=2, samples=20))
        assert res.passed, res.counterexamples
        assert res.checked == 21


def test_every_vertex_of_q_on_k5_decomposes(k5):
    res = run_suite("decomposition", SuiteContext(k5))
    assert res.passed, res.counterexamples
    assert res.checked == 12


def test_uncrossing_on_two_hundred_families():
    res = run_suite("uncrossing", SuiteContext(Graph.complete(8), seed=1, samples=200))
    assert res.passed, res.counterexamples
    assert res.checked > 50


def test_petersen_q_has_no_integer_points(petersen):
    res = run_suite("q-integer-points", SuiteContext(petersen))
    assert res.skipped is None
    assert res.passed
    assert res.checked == 0
