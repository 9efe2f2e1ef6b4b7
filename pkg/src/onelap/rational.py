"""Text round-tripping for exact rationals."""

from __future__ import annotations

from fractions import Fraction


def fmt_rat(q) -> str:
    """``p/q``, or ``p`` when the denominator is 1; the sign sits on the numerator."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rat(text: str) -> Fraction:
    """Accept ``p/q``, integers and finite decimals, converted exactly."""
    return Fraction(text.strip())


def fmt_float(v: float) -> str:
    return f"{v:.12g}"
