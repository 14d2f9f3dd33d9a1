"""
Simplification handlers: simplify and compare.
"""
import argparse
import logging
from pathlib import Path

from ..exceptions import UsageError
from ..graph import serialize_graph
from ..services.pathfinder import compare
from ..services.report_formatter import (
    compare_document,
    format_comparison_table,
    simplify_document,
    to_json
)
from ..services.simplifier import simplify
from ..utils.text_helpers import text_digest
from .common import (
    add_graph_argument,
    add_output_option,
    add_simplify_options,
    emit,
    read_graph,
    simplify_config
)

logger = logging.getLogger(__name__)


def handle_simplify(args: argparse.Namespace) -> int:
    """
    Remove zero-current edges.

    The simplified graph goes to --out (stdout otherwise); the JSON report goes
    to --report, or to stdout when the graph went to --out.
    """
    g, text = read_graph(args.graph)
    report = simplify(g, simplify_config(args))

    for warning in report.warnings:
        logger.warning(f"⚠️  {warning}")

    emit(serialize_graph(report.simplified), args.out)

    document = to_json(simplify_document(report, text_digest(text)))
    if args.report is not None:
        emit(document, args.report)
    elif args.out is not None:
        emit(document)
    return 0


def handle_compare(args: argparse.Namespace) -> int:
    """
    Compare shortest paths.

    With one graph it is simplified first; with two they are compared as given.
    """
    if len(args.graphs) > 2:
        raise UsageError("compare takes one or two graph files")

    cfg = simplify_config(args)
    g, text = read_graph(args.graphs[0])
    other_digest = None

    if len(args.graphs) == 1:
        comparison = simplify(g, cfg).comparison
    else:
        other, other_text = read_graph(args.graphs[1])
        other_digest = text_digest(other_text)
        comparison = compare(g, other, cfg.path_count_cap)

    if args.json == "-":
        emit(to_json(compare_document(comparison, text_digest(text), cfg.number_mode, other_digest)))
        return 0

    emit(format_comparison_table(comparison))
    if args.json is not None:
        emit(to_json(compare_document(comparison, text_digest(text), cfg.number_mode, other_digest)), args.json)
    return 0


def register(subparsers) -> None:
    simplify_parser = subparsers.add_parser("simplify", help="Remove zero-current edges")
    add_graph_argument(simplify_parser)
    add_simplify_options(simplify_parser)
    add_output_option(simplify_parser, "Simplified graph file (default: stdout)")
    simplify_parser.add_argument("--report", type=Path, help="JSON report file")
    simplify_parser.set_defaults(handler=handle_simplify)

    compare_parser = subparsers.add_parser("compare", help="Compare shortest paths before and after")
    compare_parser.add_argument("graphs", nargs="+", type=Path, metavar="graph", help="One or two graph files")
    add_simplify_options(compare_parser)
    compare_parser.add_argument(
        "--json",
        nargs="?",
        const="-",
        type=_json_target,
        help="Also write the JSON report to a file ('-' or no value: print JSON instead of the table)"
    )
    compare_parser.set_defaults(handler=handle_compare)


def _json_target(value: str):
    return value if value == "-" else Path(value)
