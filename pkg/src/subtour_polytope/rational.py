"""Exact rational helpers shared by the parser, geometry and report layers."""

from __future__ import annotations

from fractions import Fraction
from typing import Union

RationalLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_fraction(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" / "p" / decimal strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # YAML floats: take the decimal literal, not the binary value
        return Fraction(str(value))
    text = str(value).strip()
    if not text:
        raise ValueError("Empty rational")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"Not a rational: {value!r}") from e


def parse_rational(text: str) -> Fraction:
    return to_fraction(text)


def format_rational(value: Fraction) -> str:
    """Render as "p" when integral, otherwise "p/q"."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def is_exact_decimal(value: Fraction) -> bool:
    """True iff the denominator has no prime factors other than 2 and 5."""
    d = Fraction(value).denominator
    for p in (2, 5):
        while d % p == 0:
            d //= p
    return d == 1


def format_decimal(value: Fraction) -> str:
    """Finite decimal rendering; caller must check `is_exact_decimal` first."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    sign = "-" if value < 0 else ""
    value = abs(value)
    digits = 0
    scaled = value
    while scaled.denominator != 1:
        scaled *= 10
        digits += 1
    whole = str(scaled.numerator).rjust(digits + 1, "0")
    return f"{sign}{whole[:-digits]}.{whole[-digits:]}"
