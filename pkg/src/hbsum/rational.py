"""Exact rational helpers: text round-trip and floor/fraction splitting.

Rationals are :class:`fractions.Fraction` throughout; Fraction already keeps
values in lowest terms with a positive denominator.
"""
from __future__ import annotations

import re
from fractions import Fraction
from typing import NamedTuple, Union

RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


class FloorSplit(NamedTuple):
    floor: int
    frac: Fraction


def to_rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction or ``"num/den"`` string to a Fraction.

    Floats are rejected: every value in this package must be exact.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def parse_rational(text: str) -> Fraction:
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise ValueError(f"not a rational of the form num/den: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise ValueError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(value: Fraction | int) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def floor_split(x: RationalLike) -> FloorSplit:
    """Split ``x`` into its mathematical floor and a fractional part in [0, 1)."""
    x = to_rational(x)
    fl = x.numerator // x.denominator
    return FloorSplit(fl, x - fl)


def is_integer(x: Fraction) -> bool:
    return x.denominator == 1
