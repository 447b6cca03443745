from __future__ import annotations

import logging
from pathlib import Path
from typing import List, Tuple

from ..errors import GraphParseError
from ..rational import ONE, format_rational, parse_rational
from .core import Edge, Graph

logger = logging.getLogger(__name__)


def _content_lines(text: str) -> List[Tuple[int, List[str]]]:
    out = []
    for no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            out.append((no, line.split()))
    return out


def _parse_int(token: str, line_no: int, what: str) -> int:
    try:
        return int(token)
    except ValueError:
        raise GraphParseError(f"{what} must be an integer, got {token!r}", line_no) from None


def parse_graph(text: str) -> Graph:
    """Parse the edge-list document.

    The first content line is "n m"; then m lines "u v [w]" with 1-based
    vertices and an optional rational weight ("p/q" or an integer).
    '#' starts a comment and blank lines are ignored.
    """
    lines = _content_lines(text)
    if not lines:
        raise GraphParseError("empty document, expected header 'n m'", 1)

    header_no, header = lines[0]
    if len(header) != 2:
        raise GraphParseError("header must be 'n m'", header_no)
    n = _parse_int(header[0], header_no, "n")
    m = _parse_int(header[1], header_no, "m")
    if n < 0 or m < 0:
        raise GraphParseError("n and m must be nonnegative", header_no)

    body = lines[1:]
    if len(body) < m:
        last = len(text.splitlines()) + 1
        raise GraphParseError(f"expected {m} edge lines, found {len(body)}", last)
    if len(body) > m:
        raise GraphParseError(f"expected {m} edge lines, found more", body[m][0])

    edges = []
    for eid, (no, tokens) in enumerate(body):
        if len(tokens) not in (2, 3):
            raise GraphParseError("edge line must be 'u v [w]'", no)
        u = _parse_int(tokens[0], no, "u")
        v = _parse_int(tokens[1], no, "v")
        for x in (u, v):
            if not 1 <= x <= n:
                raise GraphParseError(f"vertex {x} out of range 1..{n}", no)
        weight = ONE
        if len(tokens) == 3:
            try:
                weight = parse_rational(tokens[2])
            except ValueError as e:
                raise GraphParseError(str(e), no) from None
        edges.append(Edge(eid, u - 1, v - 1, weight))

    g = Graph(n, tuple(edges))
    logger.debug(f"Parsed graph with n={g.n}, m={g.m}")
    return g


def load_graph(path: Path) -> Graph:
    return parse_graph(Path(path).read_text(encoding="utf-8"))


def format_graph(g: Graph, *, with_weights: bool | None = None) -> str:
    """Inverse of `parse_graph`; weights are written when any differs from 1."""
    if with_weights is None:
        with_weights = any(e.weight != ONE for e in g.edges)
    lines = [f"{g.n} {g.m}"]
    for e in g.edges:
        line = f"{e.u + 1} {e.v + 1}"
        if with_weights:
            line += f" {format_rational(e.weight)}"
        lines.append(line)
    return "\n".join(lines) + "\n"
