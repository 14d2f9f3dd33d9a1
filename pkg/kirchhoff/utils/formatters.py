"""
Data formatting utilities.
"""
from fractions import Fraction
from typing import Any, List, Sequence

from .numbers import Number, NumberMode, fraction_text


def json_number(value: Number, mode: NumberMode) -> Any:
    """
    Convert a number to its JSON form.

    Float64 values are emitted as plain floats. ExactRational values are emitted
    as {"fraction": "p/q", "decimal": float} so the exact value survives.

    Args:
        value: Number to convert
        mode: Number mode the value was computed in

    Returns:
        JSON-serializable value
    """
    if mode is NumberMode.EXACT_RATIONAL and isinstance(value, (Fraction, int)):
        exact = Fraction(value)
        return {"fraction": fraction_text(exact), "decimal": float(exact)}
    return float(value)


def json_optional(value, mode: NumberMode) -> Any:
    """json_number that passes None through"""
    if value is None:
        return None
    return json_number(value, mode)


def format_value(value: Number, digits: int = 6) -> str:
    """Human-readable number, exact fractions shown as p/q"""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator} (≈{float(value):.{digits}g})"
    if isinstance(value, float):
        return f"{value:.{digits}g}"
    return str(value)


def format_edge(u: str, v: str) -> str:
    """Format an undirected edge"""
    return f"{u}-{v}"


def format_table(headers: Sequence[str], rows: List[Sequence[Any]]) -> str:
    """Format rows as a plain text table with aligned columns"""
    cells = [[str(h) for h in headers]] + [[str(c) for c in row] for row in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(headers))]

    lines = []
    for idx, row in enumerate(cells):
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
        if idx == 0:
            lines.append("  ".join("-" * w for w in widths))
    return "\n".join(lines)
