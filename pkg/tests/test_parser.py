from fractions import Fraction

import pytest

from src.subtour_polytope.errors import GraphParseError
from src.subtour_polytope.graph.parser import format_graph, load_graph, parse_graph


def test_comments_blank_lines_and_weights():
    g = parse_graph("# triangle\n\n3 3\n1 2\n2 3   # middle\n1 3 1/2\n")
    assert g.n == 3 and g.m == 3
    assert [(e.u, e.v) for e in g.edges] == [(0, 1), (1, 2), (0, 2)]
    assert g.edges[2].weight == Fraction(1, 2)
    assert g.edges[0].weight == 1


def test_decimal_weights_are_exact():
    g = parse_graph("2 1\n1 2 0.1\n")
    assert g.edges[0].weight == Fraction(1, 10)


def test_vertex_out_of_range_reports_line():
    with pytest.raises(GraphParseError) as info:
        parse_graph("3 2\n1 2\n2 4\n")
    assert info.value.line_no == 3
    assert "line 3" in str(info.value)


def test_edge_count_mismatch():
    with pytest.raises(GraphParseError, match="expected 3 edge lines"):
        parse_graph("3 3\n1 2\n2 3\n")
    with pytest.raises(GraphParseError, match="found more"):
        parse_graph("3 1\n1 2\n2 3\n")


def test_bad_tokens():
    with pytest.raises(GraphParseError):
        parse_graph("3 x\n")
    with pytest.raises(GraphParseError):
        parse_graph("2 1\n1 2 abc\n")
    with pytest.raises(GraphParseError):
        parse_graph("2 1\n1 2 3 4\n")
    with pytest.raises(GraphParseError):
        parse_graph("")


def test_format_writes_weights_only_when_needed(graphs_dir):
    k4 = load_graph(graphs_dir / "k4.graph")
    assert format_graph(k4).splitlines()[:2] == ["4 6", "1 2"]
    weighted = load_graph(graphs_dir / "k4_subdivided.graph")
    text = format_graph(weighted)
    assert text.splitlines()[1] == "1 2 3"
    assert parse_graph(text) == weighted


def test_corpus_graphs_load(graphs_dir):
    sizes = {p.stem: (g.n, g.m) for p in graphs_dir.glob("*.graph") for g in [load_graph(p)]}
    assert sizes["k5"] == (5, 10)
    assert sizes["petersen"] == (10, 15)
    assert sizes["prism"] == (6, 9)
    assert sizes["w5"] == (6, 10)
