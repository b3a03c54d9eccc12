"""Moment sequences and the operations that combine them.

An `Umbra` is a finite moment sequence a_0 = 1, a_1, ..., a_N together
with its exponential generating function f(z) = 1 + sum a_n z^n / n!.
Two umbrae are interchangeable exactly when their moment sequences agree
(value semantics), and distinct arguments to an operation are always
treated as uncorrelated: mixed moments factor.

The operations come in two families.  Left dot products rescale the
"number of summands": an integer k gives f**k, a rational c goes through
exp(c log f), and a general moment sequence g gives g evaluated at log f.
Composition substitutes z f_a(z) into g, which is the triangle-building
primitive.  On top of those sit the Abel-type moments and the involution
they generate, which encode compositional inversion at the moment level.
"""

from __future__ import annotations

import functools
import json
import math
import re
from fractions import Fraction

from .series import OrderMismatchError, Series, revert_newton


class Umbra:
    """A truncated moment sequence with a_0 = 1.

    >>> u = Umbra([1, 1, 2, 5])
    >>> u.moment(3)
    Fraction(5, 1)
    >>> u.egf().coeffs
    (Fraction(1, 1), Fraction(1, 1), Fraction(1, 1), Fraction(5, 6))
    """

    __slots__ = ("_moments",)

    def __init__(self, moments, order: int | None = None):
        ms = [Fraction(m) for m in moments]
        if order is not None:
            if len(ms) > order + 1:
                ms = ms[: order + 1]
            else:
                ms += [Fraction(0)] * (order + 1 - len(ms))
        if not ms or ms[0] != 1:
            raise ValueError("moment 0 must be 1")
        object.__setattr__(self, "_moments", tuple(ms))

    @property
    def moments(self) -> tuple[Fraction, ...]:
        return self._moments

    @property
    def order(self) -> int:
        return len(self._moments) - 1

    def moment(self, n: int) -> Fraction:
        if not 0 <= n <= self.order:
            raise IndexError(f"moment {n} outside truncation order {self.order}")
        return self._moments[n]

    def __eq__(self, other) -> bool:
        return isinstance(other, Umbra) and self._moments == other._moments

    def __hash__(self) -> int:
        return hash(self._moments)

    def __setattr__(self, name, value):
        raise AttributeError("Umbra is immutable")

    def __repr__(self) -> str:
        return f"Umbra([{', '.join(str(m) for m in self._moments)}])"

    def egf(self) -> Series:
        return Series([m / math.factorial(n) for n, m in enumerate(self._moments)])

    @classmethod
    def from_egf(cls, f: Series) -> "Umbra":
        if f[0] != 1:
            raise ValueError("an umbra's generating function has constant term 1")
        return cls([math.factorial(n) * c for n, c in enumerate(f.coeffs)])

    def to_json(self) -> str:
        return json.dumps(
            {"moments": [str(m) for m in self._moments], "order": self.order},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "Umbra":
        data = json.loads(text)
        u = cls([Fraction(m) for m in data["moments"]])
        if u.order != data["order"]:
            raise ValueError("order field disagrees with moment count")
        return u


def _check_orders(u: Umbra, v: Umbra) -> None:
    if u.order != v.order:
        raise OrderMismatchError(f"umbra orders differ: {u.order} vs {v.order}")


# -- named umbrae -----------------------------------------------------------

_DELTA = re.compile(r"^delta\((\d+)\)$")


@functools.lru_cache(maxsize=None)
def named(name: str, order: int) -> Umbra:
    """Look up a named umbra at a given truncation order.

    >>> named("bell", 5).moments
    (Fraction(1, 1), Fraction(1, 1), Fraction(2, 1), Fraction(5, 1), Fraction(15, 1), Fraction(52, 1))
    >>> named("delta(2)", 4).moments
    (Fraction(1, 1), Fraction(0, 1), Fraction(1, 1), Fraction(0, 1), Fraction(0, 1))
    """
    if name == "augmentation":
        return Umbra([1], order=order)
    if name == "unity":
        return Umbra([1] * (order + 1))
    if name == "singleton":
        return Umbra([1, 1], order=order)
    if name == "bernoulli":
        # z / (e^z - 1), built as the reciprocal of (e^z - 1)/z
        quotient = Series(
            [Fraction(1, math.factorial(n + 1)) for n in range(order + 1)]
        )
        return Umbra.from_egf(quotient.reciprocal())
    if name == "bell":
        expm1 = Series(
            [0] + [Fraction(1, math.factorial(n)) for n in range(1, order + 1)]
        )
        return Umbra.from_egf(expm1.exp())
    if name == "boolean-unity":
        return Umbra([math.factorial(n) for n in range(order + 1)])
    if name == "catalan":
        return Umbra(
            [math.factorial(n) * math.comb(2 * n, n) // (n + 1) for n in range(order + 1)]
        )
    m = _DELTA.match(name)
    if m:
        k = int(m.group(1))
        if k < 1:
            raise ValueError("delta(k) needs k >= 1")
        return Umbra([1] + [int(n == k) for n in range(1, order + 1)])
    raise ValueError(f"unknown umbra name: {name!r}")


def named_umbrae() -> tuple[str, ...]:
    """Names accepted by `named` (delta takes an integer argument)."""
    return (
        "augmentation",
        "unity",
        "singleton",
        "bernoulli",
        "bell",
        "boolean-unity",
        "catalan",
        "delta(k)",
    )


# -- dot products and composition -------------------------------------------


@functools.lru_cache(maxsize=None)
def dot_int(k: int, a: Umbra) -> Umbra:
    """k distinct uncorrelated copies added together: generating function f**k."""
    return Umbra.from_egf(a.egf() ** k)


def dot_rational(c, a: Umbra) -> Umbra:
    """Fractional number of copies, via exp(c log f)."""
    return Umbra.from_egf(a.egf().pow_rational(Fraction(c)))


def dot(g: Umbra, a: Umbra) -> Umbra:
    """A g-distributed number of copies of a: generating function f_g(log f_a)."""
    _check_orders(g, a)
    return Umbra.from_egf(g.egf().compose(a.egf().log()))


def scale(a: Umbra, c) -> Umbra:
    """Multiply the underlying variable by the constant c: moment n picks up c**n."""
    c = Fraction(c)
    return Umbra([c**n * m for n, m in enumerate(a.moments)])


def sum_umbrae(u: Umbra, v: Umbra) -> Umbra:
    """Sum of two uncorrelated umbrae: generating functions multiply."""
    _check_orders(u, v)
    return Umbra.from_egf(u.egf() * v.egf())


def derivative(a: Umbra) -> Umbra:
    """Moment n becomes n * a_{n-1}; the generating function is 1 + z f_a(z)."""
    return Umbra([1] + [n * a.moment(n - 1) for n in range(1, a.order + 1)])


def _elevated(a: Umbra) -> Series:
    # z * f_a(z) at a's order; the top moment falls off the truncation.
    f = a.egf()
    return Series([0] + list(f.coeffs[: a.order]))


def compose_umbra(g: Umbra, a: Umbra) -> Umbra:
    """Composition: substitute z f_a(z) into g's generating function.

    The Catalan series C satisfies 1/(1 - z C) = C, so composing the
    all-factorials umbra with the Catalan umbra reproduces the latter:

    >>> N = 4
    >>> compose_umbra(named("boolean-unity", N), named("catalan", N)) == named("catalan", N)
    True
    """
    _check_orders(g, a)
    return Umbra.from_egf(g.egf().compose(_elevated(a)))


# -- Abel moments, the inversion umbra, and the involution -------------------


def abel_moment(g: Umbra, a: Umbra, n: int) -> Fraction:
    """The n-th Abel-type moment E[g (g - n.a)^(n-1)].

    Powers of g stay correlated with the leading factor, while a is
    uncorrelated with g, so expanding the binomial gives

        sum_{j=0}^{n-1} C(n-1, j) g_{j+1} m_{n-1-j}

    with m the moments of (-n).a.  The n = 0 case is the empty-product
    convention: it is defined to be 1.
    """
    _check_orders(g, a)
    if n < 0:
        raise ValueError("abel_moment needs n >= 0")
    if n == 0:
        return Fraction(1)
    if n > g.order:
        raise IndexError(f"moment {n} outside truncation order {g.order}")
    m = dot_int(-n, a).moments
    return sum(
        math.comb(n - 1, j) * g.moment(j + 1) * m[n - 1 - j] for j in range(n)
    )


@functools.lru_cache(maxsize=None)
def abel_umbra(g: Umbra, a: Umbra | None = None) -> Umbra:
    """The umbra whose n-th moment is abel_moment(g, a, n).

    With one argument it is the diagonal case abel_umbra(a, a), whose
    moments form the A-sequence of the associated triangle.
    """
    if a is None:
        a = g
    return Umbra([abel_moment(g, a, n) for n in range(g.order + 1)])


def lagrange_involution(g: Umbra, a: Umbra | None = None) -> Umbra:
    """Minus one dot the Abel umbra; applied twice it restores the umbra.

    >>> cat = named("catalan", 6)
    >>> lagrange_involution(lagrange_involution(cat)) == cat
    True
    """
    return dot_int(-1, abel_umbra(g, a))


def compositional_inverse(a: Umbra) -> Series:
    """The compositional inverse of z f_a(z), as a plain series.

    Computed two ways, by Newton reversion and as z times the
    generating function of lagrange_involution(a, a); the routes must
    agree or the call fails.
    """
    reverted = revert_newton(_elevated(a))
    shifted = _elevated(lagrange_involution(a, a))
    if reverted != shifted:
        raise ArithmeticError("reversion and involution routes disagree")
    return reverted
