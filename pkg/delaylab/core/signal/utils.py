"""
Utilities for exact time values.
"""
import re
from fractions import Fraction
from typing import Union

from delaylab.core.signal.enum import Bit

TimeLike = Union[int, str, Fraction]

RATIONAL_PATTERN = re.compile(r"^-?\d+(?:/\d+)?$")


def as_time(value: TimeLike) -> Fraction:
    """Coerce ints, ``p/q`` strings and Fractions to an exact time.

    Floats and decimal strings are rejected to avoid silent rounding.
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("a boolean is not a time value")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not RATIONAL_PATTERN.match(text):
            raise ValueError(f"Invalid rational literal: {value!r}")
        if "/" in text and int(text.split("/")[1]) == 0:
            raise ValueError(f"Zero denominator in {value!r}")
        return Fraction(text)
    raise TypeError(f"Unsupported time value {value!r} of type {type(value).__name__}")


def format_time(t: Fraction) -> str:
    """Render a time as an integer or ``p/q``."""
    if t.denominator == 1:
        return str(t.numerator)
    return f"{t.numerator}/{t.denominator}"


def as_bit(value) -> Bit:
    if value in (0, 1) and not isinstance(value, float):
        return Bit(int(value))
    raise ValueError(f"Invalid bit value: {value!r}")
