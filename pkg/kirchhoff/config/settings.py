"""
Configuration management - loads and validates environment variables
"""
import os
import sys
from pathlib import Path

from dotenv import load_dotenv

env_path = Path(__file__).resolve().parent.parent.parent / ".env"
load_dotenv(dotenv_path=env_path)


def _warn(message: str) -> None:
    print(f"⚠️  Warning: {message}", file=sys.stderr)


# ============================================
# Solver Defaults
# ============================================

DEFAULT_VMAX_POLICY = os.getenv("KIRCHHOFF_VMAX_POLICY", "half").strip().lower()
if DEFAULT_VMAX_POLICY not in ("half", "int"):
    _warn(f"Invalid KIRCHHOFF_VMAX_POLICY ({DEFAULT_VMAX_POLICY}), using half")
    DEFAULT_VMAX_POLICY = "half"

DEFAULT_NUMBER_MODE = os.getenv("KIRCHHOFF_NUMBER_MODE", "float").strip().lower()
if DEFAULT_NUMBER_MODE not in ("float", "exact"):
    _warn(f"Invalid KIRCHHOFF_NUMBER_MODE ({DEFAULT_NUMBER_MODE}), using float")
    DEFAULT_NUMBER_MODE = "float"

try:
    ZERO_TOLERANCE = float(os.getenv("KIRCHHOFF_ZERO_TOLERANCE", "1e-9"))
except ValueError:
    _warn("KIRCHHOFF_ZERO_TOLERANCE must be a number, using 1e-9")
    ZERO_TOLERANCE = 1e-9

if not (0 <= ZERO_TOLERANCE < 1):
    _warn(f"Invalid KIRCHHOFF_ZERO_TOLERANCE ({ZERO_TOLERANCE}), using 1e-9")
    ZERO_TOLERANCE = 1e-9

try:
    SINGULAR_PIVOT_RTOL = float(os.getenv("KIRCHHOFF_SINGULAR_PIVOT_RTOL", "1e-13"))
except ValueError:
    _warn("KIRCHHOFF_SINGULAR_PIVOT_RTOL must be a number, using 1e-13")
    SINGULAR_PIVOT_RTOL = 1e-13

if SINGULAR_PIVOT_RTOL <= 0:
    _warn(f"Invalid KIRCHHOFF_SINGULAR_PIVOT_RTOL ({SINGULAR_PIVOT_RTOL}), using 1e-13")
    SINGULAR_PIVOT_RTOL = 1e-13

# ============================================
# Path Enumeration
# ============================================

try:
    PATH_COUNT_CAP = int(os.getenv("KIRCHHOFF_PATH_COUNT_CAP", "1000000"))
except ValueError:
    _warn("KIRCHHOFF_PATH_COUNT_CAP must be an integer, using 1000000")
    PATH_COUNT_CAP = 1_000_000

if PATH_COUNT_CAP < 1:
    _warn(f"Invalid KIRCHHOFF_PATH_COUNT_CAP ({PATH_COUNT_CAP}), using 1000000")
    PATH_COUNT_CAP = 1_000_000

# ============================================
# Logging
# ============================================

LOG_LEVEL = os.getenv("KIRCHHOFF_LOG_LEVEL", "WARNING").strip().upper()
if LOG_LEVEL not in ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"):
    _warn(f"Invalid KIRCHHOFF_LOG_LEVEL ({LOG_LEVEL}), using WARNING")
    LOG_LEVEL = "WARNING"

LOG_FILE = os.getenv("KIRCHHOFF_LOG_FILE", "").strip()

# ============================================
# Tool Identity
# ============================================

TOOL_NAME = "kirchhoff-simplify"
TOOL_VERSION = "1.0.0"

# ============================================
# Export all settings
# ============================================

__all__ = [
    'DEFAULT_VMAX_POLICY',
    'DEFAULT_NUMBER_MODE',
    'ZERO_TOLERANCE',
    'SINGULAR_PIVOT_RTOL',
    'PATH_COUNT_CAP',
    'LOG_LEVEL',
    'LOG_FILE',
    'TOOL_NAME',
    'TOOL_VERSION'
]
