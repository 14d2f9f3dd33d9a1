"""
Circuit solve handler.
"""
import argparse
import logging

from ..graph import compute_levels
from ..services.circuit_solver import solve_circuit
from ..services.potential_geometry import estimate_voltage
from ..services.report_formatter import solve_document, to_json
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


def handle_solve(args: argparse.Namespace) -> int:
    """Potentials, edge currents, residuals and effective resistance as JSON."""
    g, text = read_graph(args.graph)
    _, estimate = estimate_voltage(g, compute_levels(g), voltage_policy(args))
    solution = solve_circuit(g, estimate.v_max, number_mode(args))
    emit(to_json(solve_document(g, solution, text_digest(text))), args.out)
    return 0


def register(subparsers) -> None:
    solve = subparsers.add_parser("solve", help="Solve the resistor network")
    add_graph_argument(solve)
    add_voltage_options(solve)
    add_output_option(solve)
    solve.set_defaults(handler=handle_solve)
