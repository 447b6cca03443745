from __future__ import annotations

from typing import Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

SCHEMA_PREFIX = "subtour-polytope"


def schema_id(name: str) -> str:
    return f"{SCHEMA_PREFIX}/{name}@1"


class Document(BaseModel):
    """Top-level output document; `schema` names its JSON Schema and version."""

    model_config = ConfigDict(populate_by_name=True)

    schema_name: str = Field(..., alias="schema", description="Versioned document schema id")

    def to_json_dict(self) -> Dict[str, Any]:
        return self.model_dump(mode="json", by_alias=True, exclude_none=True)


class GraphSummary(BaseModel):
    n: int = Field(..., description="Number of vertices")
    m: int = Field(..., description="Number of edges")
    edges: Optional[List[List[Any]]] = Field(
        default=None, description="Edges as [u, v, weight] with 1-based vertices and weight as 'p/q'"
    )


class ReductionStepEntry(BaseModel):
    kind: str = Field(..., description="DeleteLoop, DeleteParallel, ContractSeries or SplitBlock")
    edge: Optional[int] = Field(default=None, description="Original edge id acted on")
    kept: Optional[int] = Field(default=None, description="Original edge id that survives")
    vertex: Optional[int] = Field(default=None, description="Original vertex (1-based)")


class ReduceDocument(Document):
    status: str = Field(..., description="Reduced, InfeasibleBridge or DegenerateSmall")
    reason: Optional[str] = None
    original: GraphSummary
    reduced: Optional[GraphSummary] = None
    steps: List[ReductionStepEntry] = Field(default_factory=list)
    vertex_map: List[int] = Field(default_factory=list, description="Reduced vertex -> original vertex (1-based)")
    edge_map: List[int] = Field(default_factory=list, description="Reduced edge id -> original edge id")
    bridge_edges: List[int] = Field(default_factory=list)


class LockedEntry(BaseModel):
    vertices: List[int] = Field(..., description="U, 1-based")
    edges: List[int] = Field(..., description="E(U), 0-based edge ids")
    n_h: int
    m_h: int


class OracleEntry(BaseModel):
    vertices: List[int]
    graph: bool = Field(..., description="Verdict of the graph characterization")
    oracle: bool = Field(..., description="Verdict of the matroid definition")


class LockedDocument(Document):
    graph: GraphSummary
    count: int
    truncated: bool = False
    subgraphs: List[LockedEntry] = Field(default_factory=list)
    oracle: Optional[List[OracleEntry]] = Field(
        default=None, description="Disagreements between the two locked tests over all vertex sets"
    )


class CertificateEntry(BaseModel):
    name: str
    tag: Dict[str, Any]
    verdict: str = Field(..., description="Facet, ImpliedEquality, Redundant or IrredundantNonFacet")
    face_dim: int
    witnesses: List[List[str]] = Field(default_factory=list)
    same_facet_as: Optional[str] = None
    duplicate_of: Optional[str] = None
    reason: Optional[str] = None


class CertifyDocument(Document):
    kind: str
    graph: GraphSummary
    dim: int = Field(..., description="Affine dimension of the polytope")
    vertex_count: int
    is_minimal: bool
    constraints: List[CertificateEntry] = Field(default_factory=list)


class PooledCutEntry(BaseModel):
    vertices: List[int] = Field(..., description="Canonical side, 1-based")
    violation: str
    classification: str = Field(..., description="FacetLocked, RedundantNonLocked or Unclassified")
    failed_condition: Optional[str] = None
    reason: Optional[str] = None
    iteration: int


class BoundDocument(Document):
    graph: GraphSummary
    status: str
    direction: str
    bound: Optional[str] = None
    q_bound: Optional[str] = None
    iterations: int
    history: List[str] = Field(default_factory=list, description="LP value after each solve")
    point: Optional[List[str]] = None
    lifted_point: Optional[List[str]] = Field(default=None, description="Final point on the original edge set")
    cuts: List[PooledCutEntry] = Field(default_factory=list)


class SplitEntry(BaseModel):
    weight: str
    edges: List[int]


class DecomposeDocument(Document):
    graph: GraphSummary
    point: List[str]
    integral: bool
    ic: bool
    members: List[List[str]]
    residual: List[str]
    tree: Optional[List[int]] = None
    claims: Optional[Dict[str, bool]] = None
    splits: List[SplitEntry] = Field(default_factory=list)


class SuiteEntry(BaseModel):
    name: str
    passed: bool
    checked: int
    skipped: Optional[str] = None
    counterexamples: List[Dict[str, Any]] = Field(default_factory=list)


class VerifyDocument(Document):
    graph: GraphSummary
    passed: bool
    suites: List[SuiteEntry] = Field(default_factory=list)


class ErrorDocument(Document):
    error: str = Field(..., description="Exception class name")
    message: str
    exit_code: int
    payload: Dict[str, Any] = Field(default_factory=dict)
