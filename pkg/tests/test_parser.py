"""
Graph file parsing and serialization.
"""
from fractions import Fraction

import pytest

from kirchhoff.exceptions import GraphFormatError, GraphValidationError, InputError
from kirchhoff.graph import load_graph, parse_graph, serialize_graph

from conftest import CASE_STUDY_TEXT


def test_case_study_parses(case_study):
    assert case_study.nodes == ("S", "T", "a", "b", "c")
    assert len(case_study.edges) == 9
    assert case_study.start == "S"
    assert case_study.terminal == "T"
    assert [e.id for e in case_study.edges] == list(range(9))


def test_parallel_edges_keep_distinct_ids(case_study):
    c_t = [e for e in case_study.edges if e.joins("c", "T")]
    assert [(e.id, e.cost) for e in c_t] == [(7, 6), (8, 3)]


def test_costs_are_exact_decimals():
    g = parse_graph("start S\nterminal T\nedge S T 0.1\n")
    assert g.edges[0].cost == Fraction(1, 10)


def test_rational_cost_token():
    g = parse_graph("start S\nterminal T\nedge S T 2/3\n")
    assert g.edges[0].cost == Fraction(2, 3)


def test_comments_and_blank_lines_are_ignored():
    text = "# header\n\nstart S   # the source\nterminal T\n  edge S T 1  # only edge\n"
    g = parse_graph(text)
    assert len(g.edges) == 1


def test_node_directive_adds_isolated_node():
    g = parse_graph("node X\nstart S\nterminal T\nedge S T 1\n")
    assert "X" in g.nodes


@pytest.mark.parametrize("text, line, fragment", [
    ("start S\nterminal T\nedge S T 1\nedge S S 2\n", 4, "self-loop"),
    ("start S\nterminal T\nedge S T -1\n", 3, "non-positive cost"),
    ("start S\nterminal T\nedge S T 0\n", 3, "non-positive cost"),
    ("start S\nterminal T\nedge S T abc\n", 3, "non-numeric cost"),
    ("start S\nterminal T\nedge S T inf\n", 3, "non-numeric cost"),
    ("start S\nterminal T\nedge S -> T 1\n", 3, "directed edges are not supported"),
    ("start S\nterminal T\narc S T 1\n", 3, "directed edges are not supported"),
    ("node a\nnode a\nstart S\nterminal T\nedge S T 1\n", 2, "duplicate node declaration"),
    ("start S\nstart T\nterminal T\n", 2, "duplicate start"),
    ("start S\nterminal T\nvertex Q\n", 3, "unknown directive"),
    ("start S\nterminal T\nedge S T\n", 3, "expected 'edge"),
    ("start Q\nterminal T\nedge S T 1\n", 1, "unknown endpoint"),
])
def test_format_errors_carry_line_numbers(text, line, fragment):
    with pytest.raises(GraphFormatError) as excinfo:
        parse_graph(text)
    assert excinfo.value.line == line
    assert fragment in str(excinfo.value)
    assert str(excinfo.value).startswith(f"line {line}:")


def test_missing_start_and_terminal():
    with pytest.raises(GraphFormatError, match="missing start"):
        parse_graph("terminal T\nedge S T 1\n")
    with pytest.raises(GraphFormatError, match="missing terminal"):
        parse_graph("start S\nedge S T 1\n")


def test_start_equals_terminal():
    with pytest.raises(GraphFormatError, match="same node"):
        parse_graph("start S\nterminal S\nedge S T 1\n")


def test_disconnected_terminal_is_a_validation_error():
    with pytest.raises(GraphValidationError) as excinfo:
        parse_graph("start S\nterminal T\nedge S a 1\nedge T b 1\n")
    assert "terminal unreachable from start" in excinfo.value.violations


def test_errors_are_input_errors():
    with pytest.raises(InputError):
        parse_graph("start S\nterminal T\nedge S T -1\n")


def test_serialize_is_canonical(case_study):
    text = serialize_graph(case_study)
    lines = text.splitlines()
    assert lines[:7] == ["node S", "node T", "node a", "node b", "node c", "start S", "terminal T"]
    assert lines[7] == "edge S a 2"
    assert lines[-1] == "edge c T 3"
    assert text.endswith("\n")


def test_serialize_then_parse_preserves_graph(case_study):
    again = parse_graph(serialize_graph(case_study))
    assert again == case_study


def test_serialize_non_terminating_cost_as_fraction():
    g = parse_graph("start S\nterminal T\nedge S T 1/3\nedge S T 2.5\n")
    text = serialize_graph(g)
    assert "edge S T 1/3" in text
    assert "edge S T 2.5" in text


def test_load_graph_returns_raw_text(case_study_path):
    g, text = load_graph(case_study_path)
    assert text == CASE_STUDY_TEXT
    assert len(g.edges) == 9


def test_load_missing_file(tmp_path):
    with pytest.raises(OSError):
        load_graph(tmp_path / "missing.graph")
