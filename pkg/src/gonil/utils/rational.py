"""Exact text codec for rationals.

Rationals travel as strings such as ``"3"``, ``"-1/2"``. Floats are refused
at every entry point so no binary rounding ever reaches the arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Any

from gonil.exceptions import InputError


def parse_rational(value: Any, pointer: str = "") -> Fraction:
    """Parses an int or a ``"p/q"`` string.

    Args:
        value: The raw value.
        pointer: Where the value came from, used in error reports.

    Raises:
        InputError: If ``value`` is a float, a decimal string or not a rational.
    """
    if isinstance(value, bool):
        raise InputError("Expected a rational", errors={"field": pointer, "value": value})
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float) or (
        isinstance(value, str) and any(c in value for c in ".eE")
    ):
        raise InputError(
            "floats forbidden; write 1/2",
            errors={"field": pointer, "value": str(value)},
        )
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            pass
    raise InputError("Malformed rational", errors={"field": pointer, "value": str(value)})


def parse_vector(values: Any, pointer: str = "") -> tuple[Fraction, ...]:
    """Parses a JSON list, or comma-separated text, of rationals."""
    if isinstance(values, str):
        values = [v for v in values.split(",") if v.strip()]
    if not isinstance(values, list):
        raise InputError("Expected a list of rationals", errors={"field": pointer})
    return tuple(parse_rational(v, f"{pointer}/{i}") for i, v in enumerate(values))


def format_rational(value: Fraction) -> str:
    return str(value)
