"""
Kirchhoff-law graph simplifier: treat a weighted graph as a resistor network,
drive it between start and terminal, and drop the edges that carry no current.
"""
from .config.settings import TOOL_NAME, TOOL_VERSION

__version__ = TOOL_VERSION

__all__ = ["TOOL_NAME", "TOOL_VERSION", "__version__"]
