"""Entry recursions driven by the A-sequence.

Every normalized array satisfies three recursions: a column recursion
weighted by the moments of alpha, a row recursion (Rogers' form)
weighted by the moments of the Abel umbra of alpha, and a second row
recursion whose weights come from k uncorrelated copies of that umbra.
Each checker evaluates the right-hand side from the weights and nearby
entries and reports it next to the directly computed entry, term by
term, rather than returning a bare boolean.

Exponential flavor, with entry d and weight moments w:

    colrec:  d(n,k) = (n/k) sum_i binom(n-1, i)   w_i d(n-1-i, k-1),  w = alpha
    rowrec:  d(n,k) = (n/k) sum_i binom(k-1+i, i) w_i d(n-1, k-1+i),  w = A
    rowrec2: d(n,k) = binom(n,k) sum_i w_i d(n-k, i),                 w = k.A

Ordinary flavor: the same sums with every weight w_i replaced by
w_i / i! and the outer binomial factors dropped.  The index i runs over
0..n-k throughout.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .arrays import EXPONENTIAL, RiordanArray
from .umbra import Umbra, abel_umbra, dot_int


def a_sequence(array: RiordanArray) -> Umbra:
    """The A-sequence: moments of the Abel umbra of the array's alpha.

    >>> from .arrays import ballot_array
    >>> a_sequence(ballot_array(5)).moments
    (Fraction(1, 1), Fraction(1, 1), Fraction(2, 1), Fraction(6, 1), Fraction(24, 1), Fraction(120, 1))
    """
    return abel_umbra(array.alpha, array.alpha)


@dataclass(frozen=True)
class RecursionTerm:
    i: int
    weight: Fraction
    entry: Fraction

    @property
    def product(self) -> Fraction:
        return self.weight * self.entry


@dataclass(frozen=True)
class RecursionReport:
    rule: str
    n: int
    k: int
    lhs: Fraction
    rhs: Fraction
    terms: tuple[RecursionTerm, ...]

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs

    def to_json(self) -> str:
        return json.dumps(
            {
                "rule": self.rule,
                "n": self.n,
                "k": self.k,
                "lhs": str(self.lhs),
                "rhs": str(self.rhs),
                "terms": [
                    {"i": t.i, "weight": str(t.weight), "entry": str(t.entry)}
                    for t in self.terms
                ],
            },
            separators=(",", ":"),
        )


def _check_indices(array: RiordanArray, n: int, k: int) -> None:
    if not 1 <= k <= n <= array.order:
        raise IndexError(
            f"need 1 <= k <= n <= {array.order}, got (n, k) = ({n}, {k})"
        )


def _report(rule: str, array: RiordanArray, n: int, k: int, terms) -> RecursionReport:
    terms = tuple(terms)
    rhs = sum((t.product for t in terms), Fraction(0))
    return RecursionReport(rule, n, k, array.entry(n, k), rhs, terms)


def check_colrec(array: RiordanArray, n: int, k: int) -> RecursionReport:
    """Column recursion: weights are the moments of alpha."""
    _check_indices(array, n, k)
    a = array.alpha.moments
    exponential = array.flavor == EXPONENTIAL
    terms = []
    for i in range(n - k + 1):
        if exponential:
            w = Fraction(n, k) * math.comb(n - 1, i) * a[i]
        else:
            w = a[i] / math.factorial(i)
        terms.append(RecursionTerm(i, w, array.entry(n - 1 - i, k - 1)))
    return _report("colrec", array, n, k, terms)


def check_rowrec(array: RiordanArray, n: int, k: int) -> RecursionReport:
    """Row recursion (Rogers' form): weights are the A-sequence moments."""
    _check_indices(array, n, k)
    a = a_sequence(array).moments
    exponential = array.flavor == EXPONENTIAL
    terms = []
    for i in range(n - k + 1):
        if exponential:
            w = Fraction(n, k) * math.comb(k - 1 + i, i) * a[i]
        else:
            w = a[i] / math.factorial(i)
        terms.append(RecursionTerm(i, w, array.entry(n - 1, k - 1 + i)))
    return _report("rowrec", array, n, k, terms)


def check_rowrec2(array: RiordanArray, n: int, k: int) -> RecursionReport:
    """Second row recursion: weights from k uncorrelated copies of the A-umbra.

    The k-fold moments are produced by dot_int on the A-umbra, i.e. by
    raising its generating function to the k-th power, never from a
    table of precomputed constants.
    """
    _check_indices(array, n, k)
    a = dot_int(k, a_sequence(array)).moments
    exponential = array.flavor == EXPONENTIAL
    outer = Fraction(math.comb(n, k))
    terms = []
    for i in range(n - k + 1):
        if exponential:
            w = outer * a[i]
        else:
            w = a[i] / math.factorial(i)
        terms.append(RecursionTerm(i, w, array.entry(n - k, i)))
    return _report("rowrec2", array, n, k, terms)
