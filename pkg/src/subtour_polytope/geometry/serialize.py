"""Canonical JSON form of constraint systems and the CPLEX LP text writer."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Any, Dict, List, Optional, Sequence

from ..errors import DomainError
from ..rational import ZERO, format_decimal, format_rational, is_exact_decimal, to_fraction
from .simplex import Direction
from .types import ConstraintSystem, ConstraintTag, LinearConstraint, Sense, TagKind

SYSTEM_SCHEMA = "subtour-polytope/system@1"


def point_to_json(x: Sequence[Fraction]) -> List[str]:
    return [format_rational(v) for v in x]


def point_from_json(values: Sequence[Any]) -> tuple:
    return tuple(to_fraction(v) for v in values)


def tag_to_json(tag: ConstraintTag) -> Dict[str, Any]:
    out: Dict[str, Any] = {"kind": tag.kind.value}
    if tag.edge is not None:
        out["edge"] = tag.edge
    if tag.vertex is not None:
        out["vertex"] = tag.vertex + 1
    if tag.vertices is not None:
        out["vertices"] = [v + 1 for v in sorted(tag.vertices)]
    if tag.value is not None:
        out["value"] = tag.value
    return out


def tag_from_json(doc: Dict[str, Any]) -> ConstraintTag:
    return ConstraintTag(
        kind=TagKind(doc["kind"]),
        edge=doc.get("edge"),
        vertex=doc["vertex"] - 1 if "vertex" in doc else None,
        vertices=frozenset(v - 1 for v in doc["vertices"]) if "vertices" in doc else None,
        value=doc.get("value"),
    )


def constraint_to_json(c: LinearConstraint) -> Dict[str, Any]:
    return {
        "name": c.name,
        "coefficients": [[i, format_rational(a)] for i, a in c.coefficients],
        "sense": c.sense.value,
        "rhs": format_rational(c.rhs),
        "tag": tag_to_json(c.tag),
    }


def system_to_json(sys: ConstraintSystem, kind: Optional[str] = None) -> Dict[str, Any]:
    """Exact machine form: rationals as "p/q" strings, edge ids 0-based, vertices 1-based."""
    doc: Dict[str, Any] = {"schema": SYSTEM_SCHEMA}
    if kind is not None:
        doc["kind"] = kind
    doc["dim"] = sys.dim
    doc["constraints"] = [constraint_to_json(c) for c in sys]
    return doc


def system_from_json(doc: Dict[str, Any]) -> ConstraintSystem:
    if doc.get("schema") != SYSTEM_SCHEMA:
        raise DomainError(f"unsupported system document schema {doc.get('schema')!r}")
    rows = []
    for item in doc["constraints"]:
        rows.append(
            LinearConstraint.make(
                item["name"],
                {int(i): to_fraction(a) for i, a in item["coefficients"]},
                Sense(item["sense"]),
                to_fraction(item["rhs"]),
                tag_from_json(item["tag"]),
            )
        )
    return ConstraintSystem(int(doc["dim"]), tuple(rows))


def _var(i: int) -> str:
    return f"x{i + 1}"


def _expression(terms: Sequence[tuple], render) -> str:
    parts = []
    for k, (i, a) in enumerate(terms):
        sign = "-" if a < 0 else "+"
        mag = abs(a)
        body = _var(i) if mag == 1 else f"{render(mag)} {_var(i)}"
        if k == 0:
            parts.append(f"- {body}" if sign == "-" else body)
        else:
            parts.append(f"{sign} {body}")
    return " ".join(parts) if parts else "0"


_LP_SENSE = {Sense.LE: "<=", Sense.GE: ">=", Sense.EQ: "="}


def _row_is_decimal(c: LinearConstraint) -> bool:
    return is_exact_decimal(c.rhs) and all(is_exact_decimal(a) for _, a in c.coefficients)


def emit_lp(
    sys: ConstraintSystem,
    objective: Optional[Sequence[Fraction]] = None,
    direction: Direction = Direction.MINIMIZE,
    title: str = "subtour_polytope",
) -> str:
    """Deterministic LP-format text; row names are the constraint names.

    Rows whose rationals have no finite decimal form are written as a comment
    with the exact "p/q" row followed by the row scaled to integers.
    """
    lines = [f"\\* {title} *\\", "Minimize" if direction is Direction.MINIMIZE else "Maximize"]
    if objective is None:
        objective = [ZERO] * sys.dim
    if len(objective) != sys.dim:
        raise DomainError(f"objective has dimension {len(objective)}, system has {sys.dim}")
    obj = [(i, to_fraction(a)) for i, a in enumerate(objective) if to_fraction(a) != 0]
    if all(is_exact_decimal(a) for _, a in obj):
        lines.append(f" obj: {_expression(obj, format_decimal)}")
    else:
        lines.append(f" \\ obj exact: {_expression(obj, format_rational)}")
        den = 1
        for _, a in obj:
            den = den * a.denominator // gcd(den, a.denominator)
        lines.append(f" obj: {_expression([(i, a * den) for i, a in obj], format_decimal)}")

    lines.append("Subject To")
    for c in sys:
        if _row_is_decimal(c):
            lhs = _expression(c.coefficients, format_decimal)
            lines.append(f" {c.name}: {lhs} {_LP_SENSE[c.sense]} {format_decimal(c.rhs)}")
        else:
            exact = _expression(c.coefficients, format_rational)
            lines.append(f" \\ {c.name} exact: {exact} {_LP_SENSE[c.sense]} {format_rational(c.rhs)}")
            coeffs, rhs = c.integer_row()
            scaled = [(i, Fraction(a)) for i, a in coeffs]
            lines.append(f" {c.name}: {_expression(scaled, format_decimal)} {_LP_SENSE[c.sense]} {rhs}")

    lines.append("Bounds")
    for i in range(sys.dim):
        lines.append(f" {_var(i)} free")
    lines.append("End")
    return "\n".join(lines) + "\n"
