"""Exact scalars and binomial coefficients.

Every coefficient in the package is a :class:`fractions.Fraction`; there is
no floating point anywhere.
"""

from __future__ import annotations

import math
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]


def binomial(n: int, k: int) -> int:
    """C(n, k), extended by zero outside 0 <= k <= n."""
    if n < 0 or k < 0 or k > n:
        return 0
    return math.comb(n, k)


def to_rational(value: RationalLike) -> Fraction:
    """Coerce ints, Fractions and "p/q" strings to a Fraction.

    Floats are refused: they would silently break exactness.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        text = value.strip()
        if not text or any(c in text for c in ".eE_"):
            raise ValueError(f"not a rational literal: {value!r}")
        return Fraction(text)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"cannot convert {type(value).__name__} to a rational")


def format_rational(value: Fraction | int) -> str:
    """Render as "p/q", or "p" when the denominator is 1."""
    return str(Fraction(value))
