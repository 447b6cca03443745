"""Vertex enumeration through the Parma Polyhedra Library.

Rows are scaled to integers and handed to ppl as a constraint system; the
points among the minimized generators are the vertices.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import List, Optional

from ppl import C_Polyhedron, Constraint_System, Linear_Expression

from ..config import DEFAULT_LIMITS, Limits
from ..errors import DomainError, ScaleLimitError
from .types import ConstraintSystem, QPoint, Sense

logger = logging.getLogger(__name__)


def constraint_system(sys: ConstraintSystem) -> Constraint_System:
    """Every row as `expr >= 0` or `expr == 0` with integer coefficients."""
    cs = Constraint_System()
    for c in sys:
        coeffs, rhs = c.integer_row()
        row = [0] * sys.dim
        for i, a in coeffs:
            row[i] = a
        if c.sense is Sense.LE:
            cs.insert(Linear_Expression([-a for a in row], rhs) >= 0)
        elif c.sense is Sense.GE:
            cs.insert(Linear_Expression(row, -rhs) >= 0)
        else:
            cs.insert(Linear_Expression(row, -rhs) == 0)
    return cs


def polyhedron(sys: ConstraintSystem) -> C_Polyhedron:
    poly = C_Polyhedron(sys.dim, "universe")
    poly.add_constraints(constraint_system(sys))
    return poly


def enumerate_vertices(sys: ConstraintSystem, limits: Optional[Limits] = None) -> List[QPoint]:
    """Exact vertex set of a bounded polytope, sorted lexicographically.

    Returns an empty list for an empty polytope.
    """
    limits = limits or DEFAULT_LIMITS
    if sys.dim > limits.max_vertex_edges:
        raise ScaleLimitError(f"vertex enumeration limited to {limits.max_vertex_edges} variables, got {sys.dim}")
    if len(sys) > limits.max_vertex_constraints:
        raise ScaleLimitError(
            f"vertex enumeration limited to {limits.max_vertex_constraints} constraints, got {len(sys)}"
        )

    poly = polyhedron(sys)
    if poly.is_empty():
        logger.debug(f"Empty polytope in dimension {sys.dim}")
        return []
    if not poly.is_bounded():
        raise DomainError("system is unbounded; vertex enumeration needs a polytope")

    points = set()
    for gen in poly.minimized_generators():
        if gen.is_point():
            d = int(gen.divisor())
            points.add(tuple(Fraction(int(a), d) for a in gen.coefficients()))
    out = sorted(points)
    logger.debug(f"Enumerated {len(out)} vertices in dimension {sys.dim}")
    return out
