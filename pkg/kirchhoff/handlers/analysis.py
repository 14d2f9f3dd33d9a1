"""
Graph analysis handlers: analyze and export-dot.
"""
import argparse
import logging

from ..graph import compute_levels
from ..services.circuit_solver import solve_circuit
from ..services.dot_export import export_dot
from ..services.potential_geometry import analyze_graph, estimate_voltage
from ..services.report_formatter import analyze_document, to_json
from ..utils.text_helpers import text_digest
from .common import (
    add_graph_argument,
    add_output_option,
    add_voltage_options,
    emit,
    number_mode,
    read_graph,
    voltage_policy
)

logger = logging.getLogger(__name__)


def handle_analyze(args: argparse.Namespace) -> int:
    """Levels, inter-level costs, voltage estimate and potential columns as JSON."""
    g, text = read_graph(args.graph)
    policy = voltage_policy(args)
    mode = number_mode(args)

    levels = compute_levels(g)
    solution = None
    if args.solve:
        _, estimate = estimate_voltage(g, levels, policy)
        solution = solve_circuit(g, estimate.v_max, mode)

    analysis = analyze_graph(g, levels, policy, solution)
    emit(to_json(analyze_document(g, analysis, text_digest(text), mode)), args.out)
    return 0


def handle_export_dot(args: argparse.Namespace) -> int:
    """DOT rendering, annotated with the solved circuit when --annotate is set."""
    g, _ = read_graph(args.graph)

    solution = None
    if args.annotate:
        _, estimate = estimate_voltage(g, compute_levels(g), voltage_policy(args))
        solution = solve_circuit(g, estimate.v_max, number_mode(args))

    emit(export_dot(g, solution), args.out)
    return 0


def register(subparsers) -> None:
    analyze = subparsers.add_parser("analyze", help="Level structure and voltage estimate")
    add_graph_argument(analyze)
    add_voltage_options(analyze)
    analyze.add_argument("--solve", action="store_true", help="Attach solved potentials to the columns")
    add_output_option(analyze)
    analyze.set_defaults(handler=handle_analyze)

    dot = subparsers.add_parser("export-dot", help="Render the graph as DOT")
    add_graph_argument(dot)
    add_voltage_options(dot)
    dot.add_argument("--annotate", action="store_true", help="Annotate potentials and currents")
    add_output_option(dot)
    dot.set_defaults(handler=handle_export_dot)
