"""Conversion of results into output documents.

Vertex sets are written 1-based and edge ids 0-based; rationals as "p/q".
"""

from __future__ import annotations

from typing import Iterable, List, Optional, Sequence

from ..errors import PolytopeError
from ..geometry.serialize import point_to_json, tag_to_json
from ..graph.core import Graph
from ..graph.reductions import ReductionTrace
from ..locked.core import LockedEnumeration
from ..pipeline.bound import BoundReport
from ..pipeline.certify import Certification
from ..pipeline.decomposition import Decomposition
from ..pipeline.verify import SuiteResult
from ..rational import format_rational
from .types import (
    BoundDocument,
    CertificateEntry,
    CertifyDocument,
    DecomposeDocument,
    ErrorDocument,
    GraphSummary,
    LockedDocument,
    LockedEntry,
    OracleEntry,
    PooledCutEntry,
    ReduceDocument,
    ReductionStepEntry,
    SplitEntry,
    SuiteEntry,
    VerifyDocument,
    schema_id,
)


def one_based(vertices: Iterable[int]) -> List[int]:
    return [v + 1 for v in sorted(vertices)]


def graph_summary(g: Graph, with_edges: bool = False) -> GraphSummary:
    edges = None
    if with_edges:
        edges = [[e.u + 1, e.v + 1, format_rational(e.weight)] for e in g.edges]
    return GraphSummary(n=g.n, m=g.m, edges=edges)


def reduce_document(original: Graph, reduced: Optional[Graph], trace: ReductionTrace) -> ReduceDocument:
    steps = [
        ReductionStepEntry(
            kind=s.kind.value,
            edge=s.edge,
            kept=s.kept,
            vertex=s.vertex + 1 if s.vertex is not None else None,
        )
        for s in trace.steps
    ]
    return ReduceDocument(
        schema=schema_id("reduce"),
        status=trace.status.value,
        reason=trace.reason,
        original=graph_summary(original),
        reduced=graph_summary(reduced, with_edges=True) if reduced is not None else None,
        steps=steps,
        vertex_map=[v + 1 for v in trace.vertex_map],
        edge_map=list(trace.edge_map),
        bridge_edges=list(trace.bridge_edges),
    )


def locked_document(
    g: Graph, locked: LockedEnumeration, disagreements: Optional[Sequence[tuple]] = None
) -> LockedDocument:
    oracle = None
    if disagreements is not None:
        oracle = [OracleEntry(vertices=one_based(u), graph=a, oracle=b) for u, a, b in disagreements]
    return LockedDocument(
        schema=schema_id("locked"),
        graph=graph_summary(g),
        count=len(locked),
        truncated=locked.truncated,
        subgraphs=[
            LockedEntry(vertices=one_based(h.u), edges=sorted(h.edges), n_h=h.n_h, m_h=h.m_h) for h in locked
        ],
        oracle=oracle,
    )


def certify_document(g: Graph, kind: str, cert: Certification) -> CertifyDocument:
    entries = [
        CertificateEntry(
            name=c.name,
            tag=tag_to_json(c.tag),
            verdict=c.verdict.value,
            face_dim=c.face_dim,
            witnesses=[point_to_json(p) for p in c.witnesses],
            same_facet_as=c.same_facet_as,
            duplicate_of=c.duplicate_of,
            reason=c.reason or None,
        )
        for c in cert
    ]
    return CertifyDocument(
        schema=schema_id("certify"),
        kind=kind,
        graph=graph_summary(g),
        dim=cert.dim,
        vertex_count=len(cert.vertices),
        is_minimal=cert.is_minimal,
        constraints=entries,
    )


def bound_document(
    g: Graph,
    report: BoundReport,
    lifted_point: Optional[Sequence] = None,
    q_report: Optional[BoundReport] = None,
) -> BoundDocument:
    cuts = [
        PooledCutEntry(
            vertices=one_based(c.side),
            violation=format_rational(c.violation),
            classification=c.classification.cls.value,
            failed_condition=c.classification.failed.value if c.classification.failed else None,
            reason=c.classification.reason or None,
            iteration=c.iteration,
        )
        for c in report.cuts
    ]
    return BoundDocument(
        schema=schema_id("bound"),
        graph=graph_summary(g),
        status=report.status.value,
        direction=report.direction.value,
        bound=format_rational(report.bound) if report.bound is not None else None,
        q_bound=format_rational(q_report.bound) if q_report is not None and q_report.bound is not None else None,
        iterations=report.iterations,
        history=[format_rational(v) for v in report.history],
        point=point_to_json(report.point) if report.point is not None else None,
        lifted_point=point_to_json(lifted_point) if lifted_point is not None else None,
        cuts=cuts,
    )


def decompose_document(g: Graph, dec: Decomposition) -> DecomposeDocument:
    claims = None
    if dec.claims is not None:
        claims = {
            "a_nonempty": dec.claims.a_nonempty,
            "a_at_least_n": dec.claims.a_at_least_n,
            "gx_connected": dec.claims.gx_connected,
            "e1_acyclic": dec.claims.e1_acyclic,
        }
    return DecomposeDocument(
        schema=schema_id("decompose"),
        graph=graph_summary(g),
        point=point_to_json(dec.point),
        integral=dec.integral,
        ic=dec.ic,
        members=[point_to_json(x) for x in dec.members],
        residual=point_to_json(dec.residual),
        tree=sorted(dec.tree) if dec.tree is not None else None,
        claims=claims,
        splits=[SplitEntry(weight=format_rational(s.weight), edges=sorted(s.edges)) for s in dec.splits],
    )


def verify_document(g: Graph, results: Sequence[SuiteResult]) -> VerifyDocument:
    suites = [
        SuiteEntry(
            name=r.name, passed=r.passed, checked=r.checked, skipped=r.skipped, counterexamples=r.counterexamples
        )
        for r in results
    ]
    return VerifyDocument(
        schema=schema_id("verify"),
        graph=graph_summary(g),
        passed=all(r.passed for r in results),
        suites=suites,
    )


def error_document(exc: Exception, exit_code: int) -> ErrorDocument:
    payload = getattr(exc, "payload", None) if isinstance(exc, PolytopeError) else None
    return ErrorDocument(
        schema=schema_id("error"),
        error=type(exc).__name__,
        message=str(exc),
        exit_code=exit_code,
        payload=payload or {},
    )
