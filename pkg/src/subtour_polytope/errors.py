from __future__ import annotations

from typing import Optional


class PolytopeError(Exception):
    """Base class for every error raised by the package."""


class GraphParseError(PolytopeError):
    """Malformed edge-list document."""

    def __init__(self, message: str, line_no: Optional[int] = None) -> None:
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class DomainError(PolytopeError):
    """An operation was called outside its precondition.

    `payload` optionally carries a witness (e.g. a convex split of a point that
    was expected to be extreme).
    """

    def __init__(self, message: str, payload: Optional[dict] = None) -> None:
        self.payload = payload or {}
        super().__init__(message)


class ScaleLimitError(PolytopeError):
    """Input exceeds the configured desk-scale limits."""


class InfeasibleError(PolytopeError):
    """The polytope is empty (bridge, disconnected graph, infeasible LP)."""


class TheoremViolation(PolytopeError):
    """A constructive step that should always succeed did not.

    Carries the offending payload so callers can report it as a counterexample.
    """

    def __init__(self, message: str, payload: Optional[dict] = None) -> None:
        self.payload = payload or {}
        super().__init__(message)
