"""
Shared option groups and I/O for the subcommand handlers.
"""
import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Optional, Tuple

from ..config.settings import DEFAULT_NUMBER_MODE, DEFAULT_VMAX_POLICY, PATH_COUNT_CAP, ZERO_TOLERANCE
from ..exceptions import UsageError
from ..graph import WeightedMultiGraph, load_graph
from ..services.potential_geometry import VmaxPolicy, VmaxPolicyKind
from ..services.simplifier import SimplifyConfig
from ..utils.numbers import NumberMode, to_exact

logger = logging.getLogger(__name__)


# ============ Option groups ============

def add_graph_argument(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("graph", type=Path, help="Graph file")


def add_voltage_options(parser: argparse.ArgumentParser) -> None:
    """--vmax, --vmax-policy and --exact"""
    parser.add_argument("--vmax", help="Explicit V_max (0 < V_max < ST); implies --vmax-policy explicit")
    parser.add_argument(
        "--vmax-policy",
        choices=[kind.value for kind in VmaxPolicyKind],
        help=f"V_max policy (default: {DEFAULT_VMAX_POLICY})"
    )
    parser.add_argument("--exact", action="store_true", help="Solve in exact rational arithmetic")


def add_simplify_options(parser: argparse.ArgumentParser) -> None:
    """Voltage options plus --tol and --path-cap"""
    add_voltage_options(parser)
    parser.add_argument(
        "--tol",
        type=float,
        help=f"Relative zero-current tolerance, 0 <= t < 1 (default: {ZERO_TOLERANCE})"
    )
    parser.add_argument(
        "--path-cap",
        type=int,
        default=PATH_COUNT_CAP,
        help=f"Simple-path enumeration cap (default: {PATH_COUNT_CAP})"
    )


def add_output_option(parser: argparse.ArgumentParser, help_text: str = "Output file (default: stdout)") -> None:
    parser.add_argument("--out", type=Path, help=help_text)


# ============ Argument interpretation ============

def parse_vmax(text: str) -> Fraction:
    try:
        return to_exact(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"invalid --vmax value '{text}'")


def voltage_policy(args: argparse.Namespace) -> VmaxPolicy:
    """
    Resolve the V_max policy from --vmax/--vmax-policy and the settings default.

    Raises:
        UsageError: explicit policy without --vmax, or --vmax with another policy
    """
    name = args.vmax_policy
    if name is None:
        name = VmaxPolicyKind.EXPLICIT.value if args.vmax is not None else DEFAULT_VMAX_POLICY

    if name == VmaxPolicyKind.EXPLICIT.value:
        if args.vmax is None:
            raise UsageError("--vmax-policy explicit requires --vmax")
        return VmaxPolicy.explicit(parse_vmax(args.vmax))

    if args.vmax is not None:
        raise UsageError(f"--vmax conflicts with --vmax-policy {name}")
    return VmaxPolicy.parse(name)


def number_mode(args: argparse.Namespace) -> NumberMode:
    if args.exact:
        return NumberMode.EXACT_RATIONAL
    return NumberMode.parse(DEFAULT_NUMBER_MODE)


def simplify_config(args: argparse.Namespace) -> SimplifyConfig:
    tolerance = ZERO_TOLERANCE if args.tol is None else args.tol
    if not (0 <= tolerance < 1):
        raise UsageError(f"--tol must satisfy 0 <= t < 1 (got {tolerance})")
    if args.path_cap < 1:
        raise UsageError(f"--path-cap must be >= 1 (got {args.path_cap})")
    return SimplifyConfig(
        vmax_policy=voltage_policy(args),
        number_mode=number_mode(args),
        zero_tolerance=tolerance,
        path_count_cap=args.path_cap
    )


# ============ I/O ============

def read_graph(path: Path) -> Tuple[WeightedMultiGraph, str]:
    """Load a graph file; OSError and GraphFormatError propagate"""
    g, text = load_graph(path)
    logger.info(f"📥 Loaded {path}: {len(g.nodes)} nodes, {len(g.edges)} edges")
    return g, text


def emit(text: str, path: Optional[Path] = None) -> None:
    """Write text to a file, or to stdout when no path is given"""
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    path.write_text(text, encoding="utf-8")
    logger.info(f"💾 Wrote {path}")
