"""Exact integer and rational arithmetic with lossless JSON encoding.

Integers are Python's arbitrary-precision ``int``; rationals are
``fractions.Fraction``, which keeps values in lowest terms with a positive
denominator.  Layer counts grow geometrically, so everything downstream
assumes these types never overflow or round.

JSON conventions: integers travel as decimal strings, rationals as
``{"num": "<decimal>", "den": "<decimal>"}``.  Floats never appear.
"""

from __future__ import annotations

from fractions import Fraction

RationalLike = Fraction | int


def as_rational(value: RationalLike, den: int = 1) -> Fraction:
    """Build a rational, normalized to lowest terms with positive denominator."""
    return Fraction(value, den) if den != 1 else Fraction(value)


def rational_add(a: RationalLike, b: RationalLike) -> Fraction:
    return Fraction(a) + Fraction(b)


def rational_mul(a: RationalLike, b: RationalLike) -> Fraction:
    return Fraction(a) * Fraction(b)


def rational_div(a: RationalLike, b: RationalLike) -> Fraction:
    """Exact division; division by zero raises ZeroDivisionError."""
    return Fraction(a) / Fraction(b)


def int_to_json(n: int) -> str:
    """Encode an integer as a decimal string."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected int, got {type(n).__name__}")
    return str(n)


def int_from_json(text: str) -> int:
    """Decode a decimal-string integer; rejects anything non-canonical."""
    if not isinstance(text, str):
        raise ValueError(f"integer field must be a string, got {type(text).__name__}")
    stripped = text[1:] if text.startswith("-") else text
    if not stripped.isdigit():
        raise ValueError(f"not a decimal integer: {text!r}")
    return int(text)


def rational_to_json(q: RationalLike) -> dict[str, str]:
    """Encode a rational as {"num", "den"} decimal strings, lowest terms."""
    q = Fraction(q)
    return {"num": str(q.numerator), "den": str(q.denominator)}


def rational_from_json(obj: dict) -> Fraction:
    """Decode a {"num", "den"} object; normalizes on the way in."""
    if not isinstance(obj, dict) or set(obj) != {"num", "den"}:
        raise ValueError(f"not a rational object: {obj!r}")
    num = int_from_json(obj["num"])
    den = int_from_json(obj["den"])
    return Fraction(num, den)
