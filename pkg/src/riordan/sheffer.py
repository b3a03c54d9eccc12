"""Sheffer polynomial sequences attached to an array.

Row n of an array, read as coefficients, is the polynomial
s_n(x) = sum_k entry(n, k) x^k.  These sequences compose umbrally in
exact mirror of matrix multiplication, and satisfy a binomial-type
identity in two variables (a convolution-type one in the ordinary
flavor).  The bivariate checks here are done by full expansion into an
(x, y) coefficient grid, not by sampling, so a pass is a proof at the
checked degrees.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .arrays import EXPONENTIAL, FlavorMismatchError, RiordanArray
from .umbra import named


class Polynomial:
    """Dense univariate polynomial over the rationals.

    >>> p = Polynomial([0, 2, -3, 1])
    >>> str(p)
    'x^3 - 3x^2 + 2x'
    >>> p(Fraction(4))
    Fraction(24, 1)
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs):
        cs = [Fraction(c) for c in coeffs]
        while len(cs) > 1 and cs[-1] == 0:
            cs.pop()
        if not cs:
            cs = [Fraction(0)]
        object.__setattr__(self, "_coeffs", tuple(cs))

    @property
    def coeffs(self) -> tuple[Fraction, ...]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coefficient(self, k: int) -> Fraction:
        return self._coeffs[k] if k <= self.degree else Fraction(0)

    @classmethod
    def monomial(cls, k: int) -> "Polynomial":
        return cls([0] * k + [1])

    def __eq__(self, other) -> bool:
        return isinstance(other, Polynomial) and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash(self._coeffs)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(self.degree, other.degree)
        return Polynomial(
            [self.coefficient(k) + other.coefficient(k) for k in range(n + 1)]
        )

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(self.degree, other.degree)
        return Polynomial(
            [self.coefficient(k) - other.coefficient(k) for k in range(n + 1)]
        )

    def __neg__(self) -> "Polynomial":
        return Polynomial([-c for c in self._coeffs])

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            out = [Fraction(0)] * (self.degree + other.degree + 1)
            for i, a in enumerate(self._coeffs):
                if not a:
                    continue
                for j, b in enumerate(other._coeffs):
                    if b:
                        out[i + j] += a * b
            return Polynomial(out)
        return Polynomial([Fraction(other) * c for c in self._coeffs])

    def __rmul__(self, other):
        return self.__mul__(other)

    def __call__(self, x) -> Fraction:
        x = Fraction(x)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * x + c
        return acc

    def __repr__(self) -> str:
        return f"Polynomial([{', '.join(str(c) for c in self._coeffs)}])"

    def __str__(self) -> str:
        return self.render()

    def render(self) -> str:
        """Descending-power form, e.g. 'x^3 - 3x^2 + 2x'."""
        pieces = []
        for k in range(self.degree, -1, -1):
            c = self._coeffs[k]
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = str(mag)
            else:
                power = "x" if k == 1 else f"x^{k}"
                if mag == 1:
                    body = power
                elif mag.denominator == 1:
                    body = f"{mag}{power}"
                else:
                    body = f"({mag}){power}"
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(pieces) if pieces else "0"

    def to_json(self) -> str:
        return json.dumps([str(c) for c in self._coeffs], separators=(",", ":"))


def sheffer_sequence(array: RiordanArray, n_max: int) -> list[Polynomial]:
    """Rows of the array as polynomials: s_n(x) = sum_k entry(n, k) x^k.

    >>> from .arrays import pascal_array
    >>> [str(p) for p in sheffer_sequence(pascal_array(4), 2)]
    ['1', 'x + 1', 'x^2 + 2x + 1']
    """
    if n_max > array.order:
        raise ValueError(f"n_max {n_max} exceeds truncation order {array.order}")
    return [
        Polynomial([array.entry(n, k) for k in range(n + 1)]) for n in range(n_max + 1)
    ]


def umbral_compose(
    first: RiordanArray, second: RiordanArray, n_max: int
) -> list[Polynomial]:
    """Substitute the second array's sequence into the first array's rows.

    The result's coefficient triangle equals the triangle of
    multiply(first, second), which is what makes the polynomial picture
    a faithful copy of the matrix group.
    """
    if first.flavor != second.flavor:
        raise FlavorMismatchError("umbral composition needs matching flavors")
    if n_max > first.order or n_max > second.order:
        raise ValueError("n_max exceeds a truncation order")
    inner = sheffer_sequence(second, n_max)
    out = []
    for n in range(n_max + 1):
        acc = Polynomial([0])
        for k in range(n + 1):
            c = first.entry(n, k)
            if c:
                acc = acc + c * inner[k]
        out.append(acc)
    return out


# -- the two-variable identity ----------------------------------------------

_Grid = dict[tuple[int, int], Fraction]


def _prune(grid: _Grid) -> _Grid:
    return {key: v for key, v in grid.items() if v != 0}

def _grid_accumulate(grid: _Grid, px: Polynomial, qy: Polynomial, w: Fraction) -> None:
    # grid += w * px(x) * qy(y)
    for i, a in enumerate(px.coeffs):
        if not a:
            continue
        for j, b in enumerate(qy.coeffs):
            if b:
                grid[(i, j)] = grid.get((i, j), Fraction(0)) + w * a * b


def _shifted_grid(p: Polynomial) -> _Grid:
    # p(x + y) expanded over monomials x^i y^(m-i)
    grid: _Grid = {}
    for m, c in enumerate(p.coeffs):
        if not c:
            continue
        for i in range(m + 1):
            key = (i, m - i)
            grid[key] = grid.get(key, Fraction(0)) + c * math.comb(m, i)
    return _prune(grid)


@dataclass(frozen=True)
class ShefferIdentityReport:
    flavor: str
    n_max: int
    status: str
    mismatches: tuple[tuple[int, str, str, str], ...]

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def sheffer_identity_check(array: RiordanArray, n_max: int) -> ShefferIdentityReport:
    """Verify the two-variable identity for every n up to n_max.

    Exponential: s_n(x+y) = sum_k binom(n,k) s_k(x) p_{n-k}(y), with p
    the sequence of the associated array (gamma replaced by
    augmentation).  Ordinary: the row polynomial evaluated with
    z^k -> sum_{i<=k} x^i y^(k-i) equals sum_k s_k(x) p_{n-k}(y).
    Both sides are expanded fully over x, y and compared exactly.
    """
    if n_max > array.order:
        raise ValueError(f"n_max {n_max} exceeds truncation order {array.order}")
    s = sheffer_sequence(array, n_max)
    assoc = RiordanArray(array.flavor, named("augmentation", array.order), array.alpha)
    p = sheffer_sequence(assoc, n_max)

    mismatches: list[tuple[int, str, str, str]] = []
    for n in range(n_max + 1):
        rhs: _Grid = {}
        for k in range(n + 1):
            w = Fraction(math.comb(n, k)) if array.flavor == EXPONENTIAL else Fraction(1)
            _grid_accumulate(rhs, s[k], p[n - k], w)
        rhs = _prune(rhs)
        if array.flavor == EXPONENTIAL:
            lhs = _shifted_grid(s[n])
        else:
            lhs = {}
            for k, c in enumerate(s[n].coeffs):
                if not c:
                    continue
                for i in range(k + 1):
                    key = (i, k - i)
                    lhs[key] = lhs.get(key, Fraction(0)) + c
            lhs = _prune(lhs)
        for key in sorted(set(lhs) | set(rhs)):
            a = lhs.get(key, Fraction(0))
            b = rhs.get(key, Fraction(0))
            if a != b:
                mismatches.append((n, f"x^{key[0]}*y^{key[1]}", str(a), str(b)))
    status = "pass" if not mismatches else "fail"
    return ShefferIdentityReport(array.flavor, n_max, status, tuple(mismatches))
