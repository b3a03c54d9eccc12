"""Truncated formal power series with exact rational coefficients.

A `Series` is a dense coefficient vector of length ``order + 1`` over
`fractions.Fraction`, i.e. the class of a power series modulo
``z**(order+1)``.  All operations stay exact; nothing is ever rounded.
Binary operations insist that both operands were truncated at the same
order, because silently mixing truncation depths is how wrong tails
sneak into downstream triangles.

Compositional inversion is deliberately implemented twice, by different
algorithms (`revert_newton` and `revert_lagrange`), so each can serve as
an oracle for the other.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Iterable, Sequence


class OrderMismatchError(ValueError):
    """Raised when two series truncated at different orders are combined."""


def _as_fraction(x) -> Fraction:
    if isinstance(x, float):
        raise TypeError("series coefficients must be exact (int, Fraction, or string)")
    return Fraction(x)


class Series:
    """A power series truncated at a fixed order.

    >>> f = Series([1, 1, 1], order=4)       # 1 + z + z^2, padded to order 4
    >>> (f * f).coeffs
    (Fraction(1, 1), Fraction(2, 1), Fraction(3, 1), Fraction(2, 1), Fraction(1, 1))
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable, order: int | None = None):
        cs = [_as_fraction(c) for c in coeffs]
        if order is not None:
            if order < 0:
                raise ValueError("order must be >= 0")
            if len(cs) > order + 1:
                cs = cs[: order + 1]
            else:
                cs += [Fraction(0)] * (order + 1 - len(cs))
        elif not cs:
            raise ValueError("empty coefficient list and no order given")
        object.__setattr__(self, "_coeffs", tuple(cs))

    # -- basic structure -------------------------------------------------

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def __getitem__(self, n: int) -> Fraction:
        return self._coeffs[n]

    def __eq__(self, other) -> bool:
        return isinstance(other, Series) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Series is immutable")

    def __repr__(self) -> str:
        return f"Series([{', '.join(str(c) for c in self._coeffs)}])"

    def _check_order(self, other: "Series") -> None:
        if self.order != other.order:
            raise OrderMismatchError(
                f"series orders differ: {self.order} vs {other.order}"
            )

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls([], order=order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls([1], order=order)

    @classmethod
    def identity(cls, order: int) -> "Series":
        """The series z."""
        return cls([0, 1], order=order)

    def truncated(self, order: int) -> "Series":
        """Re-truncate; extending pads with zeros (the tail is unknown but zero here)."""
        return Series(self._coeffs, order=order)

    # -- ring operations -------------------------------------------------

    def __add__(self, other: "Series") -> "Series":
        self._check_order(other)
        return Series([a + b for a, b in zip(self._coeffs, other._coeffs)])

    def __sub__(self, other: "Series") -> "Series":
        self._check_order(other)
        return Series([a - b for a, b in zip(self._coeffs, other._coeffs)])

    def __neg__(self) -> "Series":
        return Series([-a for a in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, Series):
            self._check_order(other)
            return Series(_mul(list(self._coeffs), list(other._coeffs), self.order))
        return Series([_as_fraction(other) * a for a in self._coeffs])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, scalar):
        return Series([a / _as_fraction(scalar) for a in self._coeffs])

    def __pow__(self, k: int) -> "Series":
        if not isinstance(k, int):
            raise TypeError("use pow_rational for non-integer exponents")
        base = self
        if k < 0:
            base, k = self.reciprocal(), -k
        out = Series.one(self.order)
        for _ in range(k):
            out = out * base
        return out

    def reciprocal(self) -> "Series":
        """Multiplicative inverse; requires a nonzero constant term."""
        if self._coeffs[0] == 0:
            raise ValueError("reciprocal needs a nonzero constant term")
        return Series(_reciprocal(list(self._coeffs), self.order))

    # -- composition and transcendental maps ------------------------------

    def compose(self, inner: "Series") -> "Series":
        """Substitute `inner` (which must have zero constant term) into self."""
        self._check_order(inner)
        if inner._coeffs[0] != 0:
            raise ValueError("composition needs inner constant term 0")
        return Series(_compose(list(self._coeffs), list(inner._coeffs), self.order))

    def log(self) -> "Series":
        """Logarithm of a series with constant term 1.

        Solved from f g' = f', one coefficient at a time:
        g_n = f_n - (1/n) sum_{k=1}^{n-1} k g_k f_{n-k}.
        """
        if self._coeffs[0] != 1:
            raise ValueError("log needs constant term 1")
        f = self._coeffs
        n_max = self.order
        g = [Fraction(0)] * (n_max + 1)
        for n in range(1, n_max + 1):
            s = sum(k * g[k] * f[n - k] for k in range(1, n) if g[k] and f[n - k])
            g[n] = f[n] - Fraction(s) / n
        return Series(g)

    def exp(self) -> "Series":
        """Exponential of a series with constant term 0.

        From g' = f' g: n g_n = sum_{k=1}^{n} k f_k g_{n-k}, with g_0 = 1.
        """
        if self._coeffs[0] != 0:
            raise ValueError("exp needs constant term 0")
        f = self._coeffs
        n_max = self.order
        g = [Fraction(0)] * (n_max + 1)
        g[0] = Fraction(1)
        for n in range(1, n_max + 1):
            s = sum(k * f[k] * g[n - k] for k in range(1, n + 1) if f[k] and g[n - k])
            g[n] = Fraction(s) / n
        return Series(g)

    def pow_rational(self, c) -> "Series":
        """f**c for rational c, always routed through exp(c log f).

        Kept as a single code path even for integer c so that agreement
        with the repeated-multiplication route stays a real cross-check.
        """
        c = _as_fraction(c)
        return (c * self.log()).exp()

    # -- serialization -----------------------------------------------------

    def to_json(self) -> str:
        """JSON array of exact rational strings, index = power of z."""
        return json.dumps([str(c) for c in self._coeffs], separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "Series":
        data = json.loads(text)
        if not isinstance(data, list) or not data:
            raise ValueError("series JSON must be a nonempty array of rational strings")
        return cls([Fraction(s) for s in data])


# -- low-level kernels on plain coefficient lists --------------------------


def _mul(a: list[Fraction], b: list[Fraction], n: int) -> list[Fraction]:
    out = [Fraction(0)] * (n + 1)
    for i, ai in enumerate(a):
        if not ai:
            continue
        for j in range(n + 1 - i):
            bj = b[j]
            if bj:
                out[i + j] += ai * bj
    return out


def _reciprocal(f: list[Fraction], n: int) -> list[Fraction]:
    inv0 = 1 / f[0]
    out = [inv0] + [Fraction(0)] * n
    for m in range(1, n + 1):
        s = sum(f[k] * out[m - k] for k in range(1, m + 1) if f[k])
        out[m] = -inv0 * s
    return out


def _compose(f: list[Fraction], g: list[Fraction], n: int) -> list[Fraction]:
    # Horner evaluation of f at g; caller guarantees g[0] == 0.
    acc = [Fraction(0)] * (n + 1)
    acc[0] = f[n]
    for k in range(n - 1, -1, -1):
        acc = _mul(acc, g, n)
        acc[0] += f[k]
    return acc


def _check_revertible(f: Series) -> None:
    if f.order < 1:
        raise ValueError("reversion needs order >= 1")
    if f[0] != 0 or f[1] == 0:
        raise ValueError("reversion needs f(0) = 0 and a nonzero linear coefficient")


def revert_newton(f: Series) -> Series:
    """Compositional inverse by Newton iteration with precision doubling.

    Starting from g = z / f_1, each step g <- g - (f(g) - z) / f'(g) is
    evaluated at twice the previous truncation order, so the number of
    full-precision compositions stays logarithmic in the order.

    >>> f = Series([0, 1, -1], order=5)      # z - z^2
    >>> revert_newton(f).coeffs[1:]          # Catalan numbers appear
    (Fraction(1, 1), Fraction(1, 1), Fraction(2, 1), Fraction(5, 1), Fraction(14, 1))
    """
    _check_revertible(f)
    n = f.order
    fc = list(f.coeffs)
    fprime = [(k + 1) * fc[k + 1] for k in range(n)] + [Fraction(0)]
    g = [Fraction(0), 1 / fc[1]] + [Fraction(0)] * (n - 1)
    prec = 1
    while prec < n:
        prec = min(2 * prec, n)
        err = _compose(fc, g, prec)
        err[1] -= 1
        dfg = _compose(fprime, g, prec)
        corr = _mul(err, _reciprocal(dfg, prec), prec)
        for i in range(prec + 1):
            g[i] -= corr[i]
    return Series(g, order=n)


def revert_lagrange(f: Series) -> Series:
    """Compositional inverse by Lagrange inversion.

    With f = z h, the nth inverse coefficient is [z^(n-1)] h^(-n) / n;
    the negative powers of h are built up one multiplication at a time.
    """
    _check_revertible(f)
    n = f.order
    h = list(f.coeffs[1:]) + [Fraction(0)]
    r = _reciprocal(h, n)
    out = [Fraction(0)] * (n + 1)
    power = [Fraction(1)] + [Fraction(0)] * n
    for m in range(1, n + 1):
        power = _mul(power, r, n)
        out[m] = power[m - 1] / m
    return Series(out)


# -- functional aliases matching the operation names used in the docs ------


def add(f: Series, g: Series) -> Series:
    return f + g


def mul(f: Series, g: Series) -> Series:
    return f * g


def compose(f: Series, g: Series) -> Series:
    return f.compose(g)


def log_unit(f: Series) -> Series:
    return f.log()


def exp_zero(f: Series) -> Series:
    return f.exp()


def pow_int(f: Series, k: int) -> Series:
    return f**k


def pow_rational(f: Series, c) -> Series:
    return f.pow_rational(c)
