"""Exact binomial-type coefficients over the rationals.

Everything downstream (series, moment sequences, triangles) is built on
`fractions.Fraction`, which already gives lowest-terms normalization, a
positive denominator, and the ``p/q`` / ``n`` string form used by the
serialization layer.  This module adds the coefficient functions that the
rest of the package leans on: binomials with an arbitrary rational upper
argument, falling factorials, and multinomials.
"""

from __future__ import annotations

import math
from fractions import Fraction

Rational = Fraction

RationalLike = Fraction | int


def falling_factorial(c: RationalLike, j: int) -> Fraction:
    """Product c (c-1) ... (c-j+1) with j factors; empty product is 1.

    >>> falling_factorial(4, 2)
    Fraction(12, 1)
    >>> falling_factorial(Fraction(1, 2), 2)
    Fraction(-1, 4)
    >>> falling_factorial(Fraction(7, 3), 0)
    Fraction(1, 1)
    """
    if j < 0:
        raise ValueError("falling_factorial needs j >= 0")
    out = Fraction(1)
    c = Fraction(c)
    for i in range(j):
        out *= c - i
    return out


def binomial_generalized(c: RationalLike, j: int) -> Fraction:
    """Binomial coefficient with rational upper argument, zero for j < 0.

    >>> binomial_generalized(4, 2)
    Fraction(6, 1)
    >>> binomial_generalized(Fraction(1, 2), 2)
    Fraction(-1, 8)
    >>> binomial_generalized(-1, 3)
    Fraction(-1, 1)
    >>> binomial_generalized(5, -1)
    Fraction(0, 1)
    """
    if j < 0:
        return Fraction(0)
    return falling_factorial(c, j) / math.factorial(j)


def multinomial(n: int, parts: tuple[int, ...]) -> int:
    """Number of ways to split n labelled items into blocks of the given sizes.

    >>> multinomial(4, (2, 1, 1))
    12
    """
    if any(k < 0 for k in parts):
        raise ValueError("multinomial parts must be nonnegative")
    if sum(parts) != n:
        raise ValueError(f"multinomial parts {parts} do not sum to {n}")
    out = math.factorial(n)
    for k in parts:
        out //= math.factorial(k)
    return out
