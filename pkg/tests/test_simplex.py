from fractions import Fraction

import pytest

from src.subtour_polytope.errors import DomainError
from src.subtour_polytope.geometry.linalg import affine_dim, in_row_space, nullspace, rank
from src.subtour_polytope.geometry.simplex import Direction, LPStatus, lp_solve
from src.subtour_polytope.geometry.types import ConstraintSystem, LinearConstraint, Sense


def row(name, coeffs, sense, rhs):
    return LinearConstraint.make(name, coeffs, sense, rhs)


def test_minimize_over_a_simplex_corner():
    sys = ConstraintSystem(
        2,
        (
            row("x1_ge", {0: 1}, Sense.GE, 0),
            row("x2_ge", {1: 1}, Sense.GE, 0),
            row("sum", {0: 1, 1: 1}, Sense.GE, 1),
        ),
    )
    res = lp_solve(sys, [2, 3])
    assert res.status is LPStatus.OPTIMAL
    assert res.value == 2
    assert res.point == (Fraction(1), Fraction(0))


def test_maximize_with_rational_bound():
    sys = ConstraintSystem(1, (row("lo", {0: 1}, Sense.GE, 0), row("hi", {0: 2}, Sense.LE, 3)))
    res = lp_solve(sys, [1], Direction.MAXIMIZE)
    assert res.value == Fraction(3, 2)
    assert res.point == (Fraction(3, 2),)


def test_free_variable_with_negative_lower_bound():
    sys = ConstraintSystem(1, (row("lo", {0: 1}, Sense.GE, -3), row("hi", {0: 1}, Sense.LE, 5)))
    assert lp_solve(sys, [1]).value == -3
    assert lp_solve(sys, [1], Direction.MAXIMIZE).value == 5


def test_equality_rows():
    sys = ConstraintSystem(
        2,
        (
            row("x1_ge", {0: 1}, Sense.GE, 0),
            row("x2_ge", {1: 1}, Sense.GE, 0),
            row("sum", {0: 1, 1: 1}, Sense.EQ, 4),
            row("x1_le", {0: 1}, Sense.LE, 1),
        ),
    )
    res = lp_solve(sys, [0, 1])
    assert res.value == 3
    assert res.point == (Fraction(1), Fraction(3))


def test_infeasible_and_unbounded():
    infeasible = ConstraintSystem(1, (row("lo", {0: 1}, Sense.GE, 2), row("hi", {0: 1}, Sense.LE, 1)))
    assert lp_solve(infeasible, [1]).status is LPStatus.INFEASIBLE
    ray = ConstraintSystem(1, (row("lo", {0: 1}, Sense.GE, 0),))
    res = lp_solve(ray, [1], Direction.MAXIMIZE)
    assert res.status is LPStatus.UNBOUNDED
    assert not res.is_optimal


def test_objective_dimension_is_checked():
    sys = ConstraintSystem(2, ())
    with pytest.raises(DomainError):
        lp_solve(sys, [1])


def test_exact_linear_algebra():
    rows = [[Fraction(1), Fraction(1), Fraction(0)], [Fraction(0), Fraction(1), Fraction(1)]]
    assert rank(rows) == 2
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    d = basis[0]
    assert any(v != 0 for v in d)
    for r in rows:
        assert sum(a * b for a, b in zip(r, d)) == 0
    assert in_row_space(rows, [Fraction(1), Fraction(2), Fraction(1)])
    assert not in_row_space(rows, [Fraction(1), Fraction(0), Fraction(0)])
    assert not in_row_space([], [Fraction(1)])
    assert in_row_space([], [Fraction(0)])


def test_affine_dim():
    square = [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert affine_dim([tuple(map(Fraction, p)) for p in square]) == 2
    assert affine_dim([(Fraction(1), Fraction(2))]) == 0
    with pytest.raises(DomainError):
        affine_dim([])
