"""Rational powers of an exponential array via the binomial matrix series.

Writing M for the materialized block and I for the identity, the power
with exponent c is sum_j binom(c, j) (M - I)^j.  Since M - I is
strictly lower triangular on an (N+1) x (N+1) block, the sum terminates
at j = N, and each entry is a polynomial in c of degree at most n - k,
so integer exponents pin down the rational case by interpolation.

`general_power` works on the materialized matrix; `power_pair` lifts
the result back to a (gamma, alpha) pair, reading gamma off column 0
and alpha off column 1 of the powered associated block.  The two
routes are independent and are cross-checked in the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arrays import EXPONENTIAL, FlavorMismatchError, RiordanArray, Triangle
from .coefficients import binomial_generalized
from .series import Series
from .umbra import Umbra

_Block = list[list[Fraction]]


def _require_exponential(array: RiordanArray) -> None:
    if array.flavor != EXPONENTIAL:
        raise FlavorMismatchError("generalized powers act on exponential arrays")


def _matmul(a: _Block, b: _Block) -> _Block:
    return [
        [sum(a[n][j] * b[j][k] for j in range(k, n + 1)) for k in range(n + 1)]
        for n in range(len(a))
    ]


def _powered_block(block: _Block, c: Fraction) -> _Block:
    size = len(block)
    lowered = [
        [block[n][k] - (1 if n == k else 0) for k in range(n + 1)] for n in range(size)
    ]
    acc = [[Fraction(1 if n == k else 0) for k in range(n + 1)] for n in range(size)]
    power = acc
    for j in range(1, size):
        power = _matmul(power, lowered)
        if all(x == 0 for row in power for x in row):
            break
        w = binomial_generalized(c, j)
        if w:
            acc = [
                [acc[n][k] + w * power[n][k] for k in range(n + 1)]
                for n in range(len(acc))
            ]
    return acc


def general_power(array: RiordanArray, c) -> Triangle:
    """The c-th power of the array's full (N+1)-row block, as a triangle.

    >>> from .arrays import pascal_array
    >>> [str(x) for x in general_power(pascal_array(3), Fraction(1, 2)).row(3)]
    ['1/8', '3/4', '3/2', '1']
    """
    _require_exponential(array)
    c = Fraction(c)
    block = [
        [array.entry(n, k) for k in range(n + 1)] for n in range(array.order + 1)
    ]
    return Triangle(EXPONENTIAL, _powered_block(block, c))


def _associated_block(alpha: Umbra, size: int) -> _Block:
    # The (augmentation, alpha) block with `size` rows.  Column 0 is
    # (1, 0, 0, ...), so rows up to order+1 need only alpha's moments.
    n_ord = alpha.order
    cols: list[tuple[Fraction, ...]] = [Series.one(n_ord).coeffs]
    f = alpha.egf()
    power = Series.one(n_ord)
    for _ in range(1, size):
        power = power * f
        cols.append(power.coeffs)
    block: _Block = []
    for n in range(size):
        row = [Fraction(int(n == 0))]
        for k in range(1, n + 1):
            row.append(
                math.factorial(n) // math.factorial(k) * cols[k][n - k]
            )
        block.append(row)
    return block


def power_pair(array: RiordanArray, c) -> RiordanArray:
    """Lift the powered matrix back to a (gamma, alpha) pair.

    gamma's moments are column 0 of the powered block of the array
    itself; alpha's moment m is entry (m+1, 1) of the powered
    associated block, divided by m+1.  The associated block is taken
    one row deeper so alpha comes back at the array's own order.
    """
    _require_exponential(array)
    c = Fraction(c)
    powered = general_power(array, c)
    gamma = Umbra([powered.entry(n, 0) for n in range(array.order + 1)])
    assoc = _powered_block(_associated_block(array.alpha, array.order + 2), c)
    alpha = Umbra([assoc[m + 1][1] / (m + 1) for m in range(array.order + 1)])
    return RiordanArray(EXPONENTIAL, gamma, alpha)


@dataclass(frozen=True)
class AdditivityReport:
    c1: Fraction
    c2: Fraction
    status: str
    mismatches: tuple[tuple[int, int, str, str], ...]

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def additivity_check(array: RiordanArray, c1, c2) -> AdditivityReport:
    """Compare the (c1+c2) power against the product of the c1 and c2 powers."""
    _require_exponential(array)
    c1, c2 = Fraction(c1), Fraction(c2)
    combined = general_power(array, c1 + c2)
    product = general_power(array, c1).matmul(general_power(array, c2))
    mismatches = []
    for n in range(len(combined)):
        for k in range(n + 1):
            a, b = combined.entry(n, k), product.entry(n, k)
            if a != b:
                mismatches.append((n, k, str(a), str(b)))
    status = "pass" if not mismatches else "fail"
    return AdditivityReport(c1, c2, status, tuple(mismatches))
