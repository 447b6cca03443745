"""Per-constraint verdicts for a bounded constraint system.

Each row is classified against the vertex set of the polytope it belongs to:
an implied equality holds with equality on every vertex, a facet has a face of
dimension dim - 1, and everything else is decided by an LP redundancy test.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, List, Optional, Tuple

from ..config import Limits
from ..errors import InfeasibleError
from ..geometry.faces import affine_dim, is_redundant
from ..geometry.linalg import in_row_space, rank
from ..geometry.types import ConstraintSystem, ConstraintTag, LinearConstraint, QPoint, Sense
from ..geometry.vertices import enumerate_vertices

logger = logging.getLogger(__name__)

_EQUALITY = "equality"


class Verdict(str, Enum):
    FACET = "Facet"
    IMPLIED_EQUALITY = "ImpliedEquality"
    REDUNDANT = "Redundant"
    IRREDUNDANT_NON_FACET = "IrredundantNonFacet"


@dataclass(frozen=True)
class ConstraintCertificate:
    name: str
    tag: ConstraintTag
    verdict: Verdict
    face_dim: int
    witnesses: Tuple[QPoint, ...] = ()
    same_facet_as: Optional[str] = None
    duplicate_of: Optional[str] = None
    reason: str = ""


@dataclass(frozen=True)
class Certification:
    dim: int
    vertices: Tuple[QPoint, ...]
    certificates: Tuple[ConstraintCertificate, ...] = field(default_factory=tuple)

    def __iter__(self):
        return iter(self.certificates)

    def __getitem__(self, name: str) -> ConstraintCertificate:
        for c in self.certificates:
            if c.name == name:
                return c
        raise KeyError(name)

    def verdicts(self) -> Dict[str, Verdict]:
        return {c.name: c.verdict for c in self.certificates}

    def count(self, verdict: Verdict) -> int:
        return sum(1 for c in self.certificates if c.verdict is verdict)

    @property
    def is_minimal(self) -> bool:
        """No redundant row, every inequality a distinct facet, independent equalities."""
        for c in self.certificates:
            if c.verdict in (Verdict.REDUNDANT, Verdict.IRREDUNDANT_NON_FACET):
                return False
            if c.verdict is Verdict.IMPLIED_EQUALITY and c.reason != _EQUALITY:
                return False
            if c.same_facet_as is not None:
                return False
        return True


def affine_basis(points: List[QPoint]) -> Tuple[QPoint, ...]:
    """Greedy affinely independent subset spanning the hull of `points`."""
    if not points:
        return ()
    chosen = [points[0]]
    diffs: List[List] = []
    for p in points[1:]:
        d = [a - b for a, b in zip(p, points[0])]
        if rank(diffs + [d]) > len(diffs):
            diffs.append(d)
            chosen.append(p)
    return tuple(chosen)


def _augmented(c: LinearConstraint, dim: int) -> List:
    return c.dense(dim) + [c.rhs]


def certify(sys: ConstraintSystem, limits: Optional[Limits] = None) -> Certification:
    """Classify every row of a bounded, nonempty system.

    Raises:
        InfeasibleError: The system has no feasible point.
        ScaleLimitError: The system exceeds the vertex enumeration limits.
    """
    vertices = enumerate_vertices(sys, limits)
    if not vertices:
        raise InfeasibleError("the constraint system is empty; nothing to certify")
    dim = affine_dim(vertices)
    logger.info(f"Certifying {len(sys)} constraints: {len(vertices)} vertices, dimension {dim}")

    certs: List[ConstraintCertificate] = []
    equality_rows: List[List] = []
    seen_forms: Dict[tuple, str] = {}
    facets: Dict[frozenset, str] = {}

    for index, c in enumerate(sys):
        tight_idx = frozenset(k for k, v in enumerate(vertices) if c.is_tight(v))
        tight = [vertices[k] for k in sorted(tight_idx)]
        fdim = affine_dim(tight) if tight else -1
        form = c.normal_form()

        if len(tight_idx) == len(vertices):
            # equalities already spanned by earlier equalities add nothing
            if c.sense is Sense.EQ and in_row_space(equality_rows, _augmented(c, sys.dim)):
                certs.append(
                    ConstraintCertificate(c.name, c.tag, Verdict.REDUNDANT, fdim, reason="dependent equality")
                )
                continue
            if c.sense is Sense.EQ:
                equality_rows.append(_augmented(c, sys.dim))
            reason = _EQUALITY if c.sense is Sense.EQ else "inequality tight on the whole polytope"
            certs.append(
                ConstraintCertificate(
                    c.name, c.tag, Verdict.IMPLIED_EQUALITY, fdim, affine_basis(vertices), reason=reason
                )
            )
            seen_forms.setdefault(form, c.name)
            continue

        if form in seen_forms:
            certs.append(
                ConstraintCertificate(
                    c.name, c.tag, Verdict.REDUNDANT, fdim, duplicate_of=seen_forms[form], reason="duplicate row"
                )
            )
            continue
        seen_forms[form] = c.name

        if fdim == dim - 1:
            same = facets.get(tight_idx)
            if same is None:
                facets[tight_idx] = c.name
            certs.append(
                ConstraintCertificate(c.name, c.tag, Verdict.FACET, fdim, affine_basis(tight), same_facet_as=same)
            )
            continue

        red = is_redundant(sys, index)
        if red.redundant:
            certs.append(ConstraintCertificate(c.name, c.tag, Verdict.REDUNDANT, fdim, reason="implied by the rest"))
        else:
            witness = (red.witness,) if red.witness is not None else ()
            certs.append(
                ConstraintCertificate(
                    c.name, c.tag, Verdict.IRREDUNDANT_NON_FACET, fdim, witness, reason="violated without this row"
                )
            )

    result = Certification(dim, tuple(vertices), tuple(certs))
    logger.info(
        f"{result.count(Verdict.FACET)} facets, {result.count(Verdict.IMPLIED_EQUALITY)} implied equalities, "
        f"{result.count(Verdict.REDUNDANT)} redundant"
    )
    return result
