"""
Number-mode handling: lossless decimal to rational conversion and back.
"""
import math
from decimal import Decimal
from enum import Enum
from fractions import Fraction
from typing import Optional, Union

Number = Union[int, float, Fraction]


class NumberMode(str, Enum):
    """Arithmetic used by the circuit solver"""

    FLOAT64 = "float"
    EXACT_RATIONAL = "exact"

    @classmethod
    def parse(cls, value: Union[str, "NumberMode"]) -> "NumberMode":
        if isinstance(value, NumberMode):
            return value
        try:
            return cls(str(value).strip().lower())
        except ValueError:
            raise ValueError(f"unknown number mode '{value}' (expected float or exact)")


def to_exact(value: Union[Number, Decimal, str]) -> Fraction:
    """
    Convert a value to a Fraction without loss.

    Floats are read through their shortest decimal repr, so 0.1 becomes 1/10
    rather than its binary expansion.

    Raises:
        ValueError: value is not finite or not numeric
    """
    if isinstance(value, bool):
        raise ValueError(f"not a number: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if not math.isfinite(value):
            raise ValueError(f"not a finite number: {value!r}")
        return Fraction(repr(value))
    if isinstance(value, Decimal):
        if not value.is_finite():
            raise ValueError(f"not a finite number: {value!r}")
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if text.lower().lstrip("+-") in ("inf", "infinity", "nan"):
            raise ValueError(f"not a finite number: {value!r}")
        return Fraction(text)
    raise ValueError(f"not a number: {value!r}")


def convert(value: Number, mode: NumberMode) -> Number:
    """Convert a value into the arithmetic of the given mode"""
    if mode is NumberMode.EXACT_RATIONAL:
        return to_exact(value)
    return float(value)


def finite_decimal(value: Fraction) -> Optional[str]:
    """
    Render a rational as its exact decimal expansion.

    Returns:
        Shortest decimal string, or None when the expansion does not terminate
    """
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return None

    places = max(twos, fives)
    scaled = abs(value.numerator) * 10 ** places // value.denominator
    digits = str(scaled)
    sign = "-" if value < 0 else ""
    if places == 0:
        return sign + digits

    digits = digits.rjust(places + 1, "0")
    whole, frac = digits[:-places], digits[-places:].rstrip("0")
    return sign + whole + ("." + frac if frac else "")


def format_cost(value: Number) -> str:
    """Format a cost token for the graph file format"""
    if isinstance(value, float):
        return repr(value)
    exact = to_exact(value)
    text = finite_decimal(exact)
    if text is None:
        return f"{exact.numerator}/{exact.denominator}"
    return text


def fraction_text(value: Fraction) -> str:
    """Always 'p/q', also for integers"""
    return f"{value.numerator}/{value.denominator}"
