"""
DOT export of a graph, optionally annotated with a circuit solution.
"""
import logging
from fractions import Fraction
from typing import Optional

import pydot

from ..config.settings import ZERO_TOLERANCE
from ..graph.models import WeightedMultiGraph
from ..utils.numbers import Number, format_cost
from ..utils.text_helpers import dot_quote
from .circuit_solver import CircuitSolution
from .simplifier import SimplifyConfig, zero_current_edges

logger = logging.getLogger(__name__)


def _annotation(value: Number) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return f"{float(value):.6g}"


def export_dot(
    g: WeightedMultiGraph,
    solution: Optional[CircuitSolution] = None,
    zero_tolerance: float = ZERO_TOLERANCE
) -> str:
    """
    Render an undirected DOT graph.

    Edge labels show the cost. With a solution, edge labels also show the
    current, node labels show the potential and zero-current edges are dashed.

    Args:
        g: Graph to render
        solution: Optional solved circuit of g
        zero_tolerance: Relative tolerance for dashed edges (Float64 only)

    Returns:
        DOT text
    """
    dot = pydot.Dot(graph_name="G", graph_type="graph")

    for node in g.nodes:
        label = node
        if solution is not None and node in solution.potentials:
            label = f"{node} (V={_annotation(solution.potentials[node])})"
        attrs = {"label": dot_quote(label)}
        if node in (g.start, g.terminal):
            attrs["shape"] = "doublecircle"
        dot.add_node(pydot.Node(dot_quote(node), **attrs))

    dashed = set()
    if solution is not None:
        cfg = SimplifyConfig(number_mode=solution.number_mode, zero_tolerance=zero_tolerance)
        dashed = zero_current_edges(solution, cfg)

    for e in g.edges:
        label = format_cost(e.cost)
        attrs = {}
        if solution is not None:
            label += f" | I={_annotation(solution.currents[e.id])}"
        if e.id in dashed:
            attrs["style"] = "dashed"
        a, b = e.endpoints
        dot.add_edge(pydot.Edge(dot_quote(a), dot_quote(b), label=dot_quote(label), **attrs))

    logger.debug(f"DOT export: {len(g.nodes)} nodes, {len(g.edges)} edges, {len(dashed)} dashed")
    return dot.to_string()
