"""Exact rational scalars and combinatorial primitives.

Everything in this package is computed over the rationals with zero
tolerance; the ground scalar is :class:`fractions.Fraction`, which is
arbitrary precision and canonical (reduced, positive denominator) after
every operation.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial

Rational = Fraction

__all__ = [
    "Rational",
    "PartsMismatch",
    "parse_rational",
    "format_rational",
    "pochhammer",
    "factorial",
    "multinomial",
]


class PartsMismatch(ValueError):
    """Raised when multinomial parts do not sum to the declared total."""


def parse_rational(text: str) -> Rational:
    """Parse a rational from its canonical "num/den" string form.

    The denominator part is optional ("672" and "672/1" are the same
    value). Whitespace around the string is ignored.
    """
    return Fraction(text.strip())


def format_rational(value: Rational) -> str:
    """Serialize a rational as "num/den", omitting "/1" denominators."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def pochhammer(alpha, n: int) -> Rational:
    """Shifted factorial alpha*(alpha+1)*...*(alpha+n-1), with empty product 1.

    For a nonpositive integer alpha = -m the result is 0 exactly when n > m.
    """
    if n < 0:
        raise ValueError(f"pochhammer order must be nonnegative, got {n}")
    result = Fraction(1)
    alpha = Fraction(alpha)
    for q in range(n):
        result *= alpha + q
        if result == 0:
            break
    return result


def multinomial(total: int, parts) -> Rational:
    """Multinomial coefficient total! / prod(part!).

    The parts must be nonnegative and sum to ``total``.
    """
    parts = list(parts)
    if any(part < 0 for part in parts):
        raise PartsMismatch(f"negative part in {parts}")
    if sum(parts) != total:
        raise PartsMismatch(f"parts {parts} do not sum to {total}")
    result = factorial(total)
    for part in parts:
        result //= factorial(part)
    return Fraction(result)
