import pytest

from src.subtour_polytope.errors import InfeasibleError
from src.subtour_polytope.geometry.types import ConstraintSystem, LinearConstraint, Sense, TagKind
from src.subtour_polytope.pipeline.certify import Verdict, affine_basis, certify
from src.subtour_polytope.pipeline.descriptions import K_description, Q_description, full_P, kn_minimal_P


def verdicts_by_kind(cert, kind):
    return {c.verdict for c in cert if c.tag.kind is kind}


def test_q_of_k4_is_a_triangle(k4):
    cert = certify(Q_description(k4))
    assert cert.dim == 2
    assert len(cert.vertices) == 3
    assert verdicts_by_kind(cert, TagKind.SUBGRAPH) == {Verdict.IMPLIED_EQUALITY}
    assert cert["card"].verdict is Verdict.IMPLIED_EQUALITY
    assert verdicts_by_kind(cert, TagKind.UB1) == {Verdict.FACET}
    assert verdicts_by_kind(cert, TagKind.NONNEG) == {Verdict.REDUNDANT}
    # opposite edges 12 and 34 lie in the same two tours
    assert cert["ub1_e1"].same_facet_as is None
    assert cert["ub1_e6"].same_facet_as == "ub1_e1"
    assert not cert.is_minimal


def test_facet_witnesses_are_affinely_independent(k4):
    cert = certify(Q_description(k4))
    facet = cert["ub1_e1"]
    assert facet.face_dim == 1
    assert len(facet.witnesses) == 2
    assert all(w[0] == 1 for w in facet.witnesses)


def test_bases_polytope_of_k4_is_minimal(k4):
    cert = certify(K_description(k4))
    assert cert.dim == 5
    assert len(cert.vertices) == 16
    inequalities = [c for c in cert if c.tag.kind is not TagKind.CARD]
    assert len(inequalities) == 16
    assert all(c.verdict is Verdict.FACET for c in inequalities)
    assert cert["card"].verdict is Verdict.IMPLIED_EQUALITY
    assert cert.is_minimal


def test_cut_facets_of_the_full_description_of_k5(k5):
    cert = certify(full_P(k5))
    assert cert.dim == 5
    assert len(cert.vertices) == 12
    for c in cert:
        if c.tag.kind is not TagKind.CUT:
            continue
        size = len(c.tag.vertices)
        expected = Verdict.FACET if size in (2, 3) else Verdict.IMPLIED_EQUALITY
        assert c.verdict is expected, c.name


def test_full_description_of_k4(k4):
    cert = certify(full_P(k4))
    assert len(list(cert)) == 23
    for c in cert.certificates:
        if c.tag.kind is TagKind.CUT:
            size = len(c.tag.vertices)
            expected = Verdict.FACET if size == 2 else Verdict.IMPLIED_EQUALITY
            assert c.verdict is expected, c.name
    assert verdicts_by_kind(cert, TagKind.UB1) == {Verdict.FACET}
    assert cert["nonneg_e1"].verdict is Verdict.REDUNDANT
    assert cert["nonneg_e1"].face_dim == 0
    assert cert.count(Verdict.IMPLIED_EQUALITY) == 4 + 4


def test_kn_minimal_on_k5_is_minimal(k5):
    assert certify(kn_minimal_P(k5)).is_minimal


def test_nonnegativity_is_redundant_on_k4(k4):
    cert = certify(kn_minimal_P(k4))
    assert verdicts_by_kind(cert, TagKind.NONNEG) == {Verdict.REDUNDANT}
    assert not cert.is_minimal


def test_prism_triangles_are_facets(prism):
    cert = certify(Q_description(prism))
    assert cert.dim == 3
    assert cert["subgraph_1_2_3"].verdict is Verdict.FACET
    assert cert["subgraph_4_5_6"].verdict is Verdict.FACET
    five_sets = [c for c in cert if c.tag.kind is TagKind.SUBGRAPH and len(c.tag.vertices) == 5]
    assert len(five_sets) == 6
    assert all(c.verdict is Verdict.IMPLIED_EQUALITY for c in five_sets)


def square(*extra):
    rows = (
        LinearConstraint.make("lo_x1", {0: 1}, Sense.GE, 0),
        LinearConstraint.make("lo_x2", {1: 1}, Sense.GE, 0),
        LinearConstraint.make("hi_x1", {0: 1}, Sense.LE, 1),
        LinearConstraint.make("hi_x2", {1: 1}, Sense.LE, 1),
    )
    return ConstraintSystem(2, rows + tuple(extra))


def test_duplicate_and_non_facet_rows():
    cert = certify(
        square(
            LinearConstraint.make("twice_hi_x1", {0: 2}, Sense.LE, 2),
            LinearConstraint.make("corner", {0: 1, 1: 1}, Sense.LE, 2),
        )
    )
    assert cert.dim == 2
    assert cert["twice_hi_x1"].verdict is Verdict.REDUNDANT
    assert cert["twice_hi_x1"].duplicate_of == "hi_x1"
    assert cert["corner"].verdict is Verdict.REDUNDANT
    assert cert["corner"].face_dim == 0
    assert cert.count(Verdict.FACET) == 4


def test_dependent_equalities():
    rows = (
        LinearConstraint.make("lo_x1", {0: 1}, Sense.GE, 0),
        LinearConstraint.make("lo_x2", {1: 1}, Sense.GE, 0),
        LinearConstraint.make("sum", {0: 1, 1: 1}, Sense.EQ, 1),
        LinearConstraint.make("sum_twice", {0: 2, 1: 2}, Sense.EQ, 2),
    )
    cert = certify(ConstraintSystem(2, rows))
    assert cert.dim == 1
    assert cert["sum"].verdict is Verdict.IMPLIED_EQUALITY
    assert cert["sum_twice"].verdict is Verdict.REDUNDANT
    assert cert["sum_twice"].reason == "dependent equality"
    assert not cert.is_minimal


def test_empty_system_is_infeasible():
    with pytest.raises(InfeasibleError):
        certify(square(LinearConstraint.make("far", {0: 1, 1: 1}, Sense.GE, 3)))


def test_affine_basis():
    pts = [(0, 0), (1, 1), (2, 2), (0, 1)]
    basis = affine_basis([tuple(p) for p in pts])
    assert basis == ((0, 0), (1, 1), (0, 1))
    assert affine_basis([]) == ()
