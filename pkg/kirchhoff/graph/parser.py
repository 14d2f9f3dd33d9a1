"""
Graph file format: parsing and serialization.

Format (UTF-8, line oriented, '#' starts a comment):

    node <name>                 optional, nodes are also declared by edges
    start <name>                exactly one
    terminal <name>             exactly one
    edge <name> <name> <cost>   cost is a positive decimal (or p/q)
"""
import logging
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

from ..exceptions import GraphFormatError, GraphValidationError
from ..utils.numbers import format_cost, to_exact
from ..utils.text_helpers import is_valid_name, split_tokens, strip_comment
from .models import Edge, WeightedMultiGraph
from .validation import validate

logger = logging.getLogger(__name__)

_DIRECTED_KEYWORDS = {"arc", "directed", "digraph"}
_DIRECTED_ARROWS = {"->", "<-", "=>"}


def _parse_cost(token: str, line_no: int) -> Fraction:
    try:
        cost = to_exact(token)
    except (ValueError, ZeroDivisionError):
        raise GraphFormatError(line_no, f"non-numeric cost '{token}'")
    if cost <= 0:
        raise GraphFormatError(line_no, f"non-positive cost '{token}' (costs must be > 0)")
    return cost


def _check_name(name: str, line_no: int) -> str:
    if not is_valid_name(name):
        raise GraphFormatError(line_no, f"invalid node name '{name}'")
    return name


def parse_graph(text: str) -> WeightedMultiGraph:
    """
    Parse and validate a graph file.

    Args:
        text: File contents

    Returns:
        Validated WeightedMultiGraph with edge ids in file order

    Raises:
        GraphFormatError: syntax or semantic error, with line number
        GraphValidationError: start and terminal are not connected
    """
    declared: Dict[str, int] = {}
    seen: Dict[str, int] = {}
    edges: List[Edge] = []
    start: Optional[Tuple[str, int]] = None
    terminal: Optional[Tuple[str, int]] = None

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = strip_comment(raw)
        if not line:
            continue

        tokens = split_tokens(line)
        directive = tokens[0]

        if directive in _DIRECTED_KEYWORDS or any(t in _DIRECTED_ARROWS for t in tokens):
            raise GraphFormatError(line_no, "directed edges are not supported")

        if directive == "node":
            if len(tokens) != 2:
                raise GraphFormatError(line_no, "expected 'node <name>'")
            name = _check_name(tokens[1], line_no)
            if name in declared:
                raise GraphFormatError(
                    line_no,
                    f"duplicate node declaration '{name}' (first declared on line {declared[name]})"
                )
            declared[name] = line_no
            seen.setdefault(name, line_no)

        elif directive in ("start", "terminal"):
            if len(tokens) != 2:
                raise GraphFormatError(line_no, f"expected '{directive} <name>'")
            name = _check_name(tokens[1], line_no)
            previous = start if directive == "start" else terminal
            if previous is not None:
                raise GraphFormatError(
                    line_no,
                    f"duplicate {directive} directive (first on line {previous[1]})"
                )
            if directive == "start":
                start = (name, line_no)
            else:
                terminal = (name, line_no)

        elif directive == "edge":
            if len(tokens) != 4:
                raise GraphFormatError(line_no, "expected 'edge <name> <name> <cost>'")
            u = _check_name(tokens[1], line_no)
            v = _check_name(tokens[2], line_no)
            if u == v:
                raise GraphFormatError(line_no, f"self-loop on node '{u}' is not allowed")
            cost = _parse_cost(tokens[3], line_no)
            edges.append(Edge(len(edges), u, v, cost))
            seen.setdefault(u, line_no)
            seen.setdefault(v, line_no)

        else:
            raise GraphFormatError(line_no, f"unknown directive '{directive}'")

    if start is None:
        raise GraphFormatError(0, "missing start directive")
    if terminal is None:
        raise GraphFormatError(0, "missing terminal directive")
    if start[0] == terminal[0]:
        raise GraphFormatError(terminal[1], f"start and terminal are the same node '{start[0]}'")

    for name, line_no in (start, terminal):
        if name not in seen:
            raise GraphFormatError(
                line_no,
                f"unknown endpoint '{name}': not declared by a node or edge directive"
            )

    graph = WeightedMultiGraph(tuple(seen), tuple(edges), start[0], terminal[0])

    outcome = validate(graph)
    if not outcome.is_valid:
        raise GraphValidationError(outcome.violations)

    logger.debug(f"Parsed graph: {len(graph.nodes)} nodes, {len(graph.edges)} edges")
    return graph


def serialize_graph(g: WeightedMultiGraph) -> str:
    """
    Serialize a graph: nodes (sorted), start, terminal, edges (by id).
    """
    lines = [f"node {n}" for n in g.nodes]
    lines.append(f"start {g.start}")
    lines.append(f"terminal {g.terminal}")
    lines.extend(f"edge {e.u} {e.v} {format_cost(e.cost)}" for e in g.edges)
    return "\n".join(lines) + "\n"


def load_graph(path: Union[str, Path]) -> Tuple[WeightedMultiGraph, str]:
    """
    Read and parse a graph file.

    Returns:
        Tuple of (graph, raw text)

    Raises:
        OSError: file cannot be read
    """
    text = Path(path).read_text(encoding="utf-8")
    return parse_graph(text), text
