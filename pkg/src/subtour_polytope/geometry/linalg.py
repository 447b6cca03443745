"""Exact linear algebra on Fraction data, delegated to sympy."""

from __future__ import annotations

from fractions import Fraction
from typing import List, Sequence

import sympy

from ..errors import DomainError


def _to_sympy(v: Fraction) -> sympy.Rational:
    v = Fraction(v)
    return sympy.Rational(v.numerator, v.denominator)


def _to_fraction(v) -> Fraction:
    r = sympy.Rational(v)
    return Fraction(int(r.p), int(r.q))


def matrix(rows: Sequence[Sequence[Fraction]], width: int | None = None) -> sympy.Matrix:
    if not rows:
        return sympy.zeros(0, width or 0)
    return sympy.Matrix([[_to_sympy(v) for v in row] for row in rows])


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    if not rows or not rows[0]:
        return 0
    return int(matrix(rows).rank())


def nullspace(rows: Sequence[Sequence[Fraction]], width: int) -> List[List[Fraction]]:
    """Basis of {d : row . d = 0 for every row}, as Fraction vectors."""
    if not rows:
        return [[Fraction(int(i == j)) for j in range(width)] for i in range(width)]
    basis = matrix(rows).nullspace()
    return [[_to_fraction(v) for v in vec] for vec in basis]


def affine_dim(points: Sequence[Sequence[Fraction]]) -> int:
    """Dimension of the affine hull: rank of the differences to the first point."""
    if not points:
        raise DomainError("affine dimension of an empty point set is undefined")
    base = points[0]
    diffs = [[a - b for a, b in zip(p, base)] for p in points[1:]]
    return rank(diffs) if diffs else 0


def in_row_space(rows: Sequence[Sequence[Fraction]], row: Sequence[Fraction]) -> bool:
    if not rows:
        return all(v == 0 for v in row)
    return rank(list(rows) + [list(row)]) == rank(rows)
