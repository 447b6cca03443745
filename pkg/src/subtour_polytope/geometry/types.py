from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Optional, Sequence, Tuple

from ..errors import DomainError
from ..rational import ZERO, RationalLike, to_fraction

QPoint = Tuple[Fraction, ...]


def qpoint(values: Iterable[RationalLike]) -> QPoint:
    return tuple(to_fraction(v) for v in values)


def indicator(m: int, edges: Iterable[int]) -> QPoint:
    """Characteristic vector of an edge set."""
    s = frozenset(edges)
    return tuple(Fraction(1) if i in s else ZERO for i in range(m))


def support(x: Sequence[Fraction], i: RationalLike = 1) -> FrozenSet[int]:
    """Edges whose coordinate equals i exactly."""
    target = to_fraction(i)
    return frozenset(e for e, v in enumerate(x) if v == target)


def positive_support(x: Sequence[Fraction]) -> FrozenSet[int]:
    return frozenset(e for e, v in enumerate(x) if v > 0)


def is_integral(x: Sequence[Fraction]) -> bool:
    return all(Fraction(v).denominator == 1 for v in x)


class Sense(str, Enum):
    LE = "<="
    GE = ">="
    EQ = "="


class TagKind(str, Enum):
    NONNEG = "NONNEG"
    UB1 = "UB1"
    DEGREE = "DEGREE"
    DEGREE_LB = "DEGREE_LB"
    CUT = "CUT"
    SUBGRAPH = "SUBGRAPH"
    CARD = "CARD"
    CUSTOM = "CUSTOM"


@dataclass(frozen=True)
class ConstraintTag:
    """Structured origin of a constraint: which family and which index."""

    kind: TagKind
    edge: Optional[int] = None
    vertex: Optional[int] = None
    vertices: Optional[FrozenSet[int]] = None
    value: Optional[int] = None

    def describe(self) -> str:
        if self.kind in (TagKind.NONNEG, TagKind.UB1):
            return f"{self.kind.value}(e{self.edge + 1})"
        if self.kind in (TagKind.DEGREE, TagKind.DEGREE_LB):
            return f"{self.kind.value}({self.vertex + 1})"
        if self.kind in (TagKind.CUT, TagKind.SUBGRAPH):
            return f"{self.kind.value}({{{','.join(str(v + 1) for v in sorted(self.vertices or ()))}}})"
        if self.kind is TagKind.CARD:
            return f"CARD({self.value})"
        return self.kind.value


CUSTOM_TAG = ConstraintTag(TagKind.CUSTOM)


@dataclass(frozen=True)
class LinearConstraint:
    """A named rational half-space or hyperplane over R^E.

    `coefficients` is a sorted tuple of (edge id, nonzero coefficient) pairs.
    """

    name: str
    coefficients: Tuple[Tuple[int, Fraction], ...]
    sense: Sense
    rhs: Fraction
    tag: ConstraintTag = CUSTOM_TAG

    @classmethod
    def make(
        cls,
        name: str,
        coefficients: Mapping[int, RationalLike],
        sense: Sense,
        rhs: RationalLike,
        tag: ConstraintTag = CUSTOM_TAG,
    ) -> "LinearConstraint":
        coeffs = []
        for i in sorted(coefficients):
            c = to_fraction(coefficients[i])
            if c != 0:
                coeffs.append((int(i), c))
        return cls(name, tuple(coeffs), Sense(sense), to_fraction(rhs), tag)

    @property
    def coeff_map(self) -> Dict[int, Fraction]:
        return dict(self.coefficients)

    @property
    def support(self) -> FrozenSet[int]:
        return frozenset(i for i, _ in self.coefficients)

    def dense(self, m: int) -> List[Fraction]:
        row = [ZERO] * m
        for i, c in self.coefficients:
            row[i] = c
        return row

    def lhs(self, x: Sequence[Fraction]) -> Fraction:
        return sum((c * x[i] for i, c in self.coefficients), ZERO)

    def slack(self, x: Sequence[Fraction]) -> Fraction:
        """Nonnegative exactly when satisfied (for equalities: minus |residual|)."""
        diff = self.lhs(x) - self.rhs
        if self.sense is Sense.LE:
            return -diff
        if self.sense is Sense.GE:
            return diff
        return -abs(diff)

    def is_satisfied(self, x: Sequence[Fraction]) -> bool:
        return self.slack(x) >= 0

    def is_tight(self, x: Sequence[Fraction]) -> bool:
        return self.lhs(x) == self.rhs

    def as_le(self) -> Tuple[Dict[int, Fraction], Fraction]:
        """(a, b) with the inequality read as a.x <= b; equalities give one side."""
        if self.sense is Sense.GE:
            return {i: -c for i, c in self.coefficients}, -self.rhs
        return dict(self.coefficients), self.rhs

    def normal_form(self) -> Tuple[str, Tuple[Tuple[int, Fraction], ...], Fraction]:
        """Scale-free key: two rows with equal keys define the same set."""
        a, b = self.as_le()
        sense = "=" if self.sense is Sense.EQ else "<="
        items = sorted(a.items())
        if not items:
            return (sense, (), b)
        lead = items[0][1]
        scale = abs(lead) if sense == "<=" else lead
        return (sense, tuple((i, c / scale) for i, c in items), b / scale)

    def integer_row(self) -> Tuple[Tuple[Tuple[int, int], ...], int]:
        """Coefficients and rhs scaled by the common denominator to integers."""
        den = self.rhs.denominator
        for _, c in self.coefficients:
            den = den * c.denominator // gcd(den, c.denominator)
        return tuple((i, int(c * den)) for i, c in self.coefficients), int(self.rhs * den)

    def with_sense(self, sense: Sense) -> "LinearConstraint":
        return LinearConstraint(self.name, self.coefficients, sense, self.rhs, self.tag)


@dataclass(frozen=True)
class ConstraintSystem:
    """An H-representation over R^m with unique constraint names."""

    dim: int
    constraints: Tuple[LinearConstraint, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        seen = set()
        for c in self.constraints:
            if c.name in seen:
                raise DomainError(f"duplicate constraint name {c.name!r}")
            seen.add(c.name)
            for i, _ in c.coefficients:
                if not 0 <= i < self.dim:
                    raise DomainError(f"constraint {c.name!r} uses index {i} outside 0..{self.dim - 1}")

    def __len__(self) -> int:
        return len(self.constraints)

    def __iter__(self) -> Iterator[LinearConstraint]:
        return iter(self.constraints)

    def __getitem__(self, i: int) -> LinearConstraint:
        return self.constraints[i]

    @property
    def names(self) -> List[str]:
        return [c.name for c in self.constraints]

    def index_of(self, name: str) -> int:
        for i, c in enumerate(self.constraints):
            if c.name == name:
                return i
        raise KeyError(name)

    def by_name(self, name: str) -> LinearConstraint:
        return self.constraints[self.index_of(name)]

    def by_kind(self, kind: TagKind) -> List[LinearConstraint]:
        return [c for c in self.constraints if c.tag.kind is kind]

    def without(self, index: int) -> "ConstraintSystem":
        return ConstraintSystem(self.dim, self.constraints[:index] + self.constraints[index + 1:])

    def extended(self, extra: Iterable[LinearConstraint]) -> "ConstraintSystem":
        return ConstraintSystem(self.dim, self.constraints + tuple(extra))

    def check_point(self, x: Sequence[Fraction]) -> None:
        if len(x) != self.dim:
            raise DomainError(f"point has dimension {len(x)}, system has {self.dim}")
