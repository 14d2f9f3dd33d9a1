"""
Command-line entry point: subcommand dispatch and exit codes.

Exit codes: 0 success, 1 input or usage error, 2 numerical failure.
"""
import argparse
import logging
import sys
from typing import List, Optional

from .config.settings import LOG_FILE, TOOL_NAME, TOOL_VERSION
from .exceptions import KirchhoffError, UsageError
from .utils.logging_helpers import setup_logging

logger = logging.getLogger(__name__)

LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")


class _ArgumentParser(argparse.ArgumentParser):
    """Raises UsageError instead of exiting with status 2"""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def build_parser() -> argparse.ArgumentParser:
    from .handlers import analysis, circuit, simplification

    parser = _ArgumentParser(
        prog=TOOL_NAME,
        description="Simplify weighted graphs with Kirchhoff's circuit laws."
    )
    parser.add_argument("--version", action="version", version=f"{TOOL_NAME} {TOOL_VERSION}")
    parser.add_argument("--log-level", type=str.upper, choices=LOG_LEVELS, help="Console log level")

    subparsers = parser.add_subparsers(dest="command", metavar="command", required=True)
    analysis.register(subparsers)
    circuit.register(subparsers)
    simplification.register(subparsers)
    return parser


def run(argv: Optional[List[str]] = None) -> int:
    """
    Parse arguments and run one subcommand.

    Args:
        argv: Arguments without the program name (defaults to sys.argv[1:])

    Returns:
        Process exit code
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.log_level:
            setup_logging(args.log_level, LOG_FILE or None)

        logger.debug(f"Running '{args.command}'")
        return args.handler(args)

    except SystemExit as e:
        # --help and --version
        return e.code if isinstance(e.code, int) else 0
    except KirchhoffError as e:
        logger.debug(f"{type(e).__name__}: {e}")
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except (OSError, UnicodeDecodeError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1
