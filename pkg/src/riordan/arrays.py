"""Riordan arrays: lower-triangular matrices built from a pair of umbrae.

An array is determined by a flavor and a pair (gamma, alpha).  Writing
f_g and f_a for the generating functions, the (n, k) entry is

    exponential:  (n!/k!) [z^(n-k)] f_g(z) f_a(z)^k
    ordinary:              [z^(n-k)] f_g(z) f_a(z)^k

so column k of the exponential array stores the moments of gamma plus k
uncorrelated copies of alpha, spread by binom(n, k).  Entries are always
recomputed from the pair; the materialized `Triangle` is plumbing for
rendering and for literal matrix arithmetic, never the source of truth.

The two flavors share the pair-level formulas for product, inverse, and
action, but their matrices differ by factorial factors, so mixing them
is a hard error rather than a silent coercion.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .series import OrderMismatchError, Series
from .umbra import (
    Umbra,
    abel_umbra,
    compose_umbra,
    dot,
    dot_int,
    lagrange_involution,
    named,
    scale,
    sum_umbrae,
)

EXPONENTIAL = "exp"
ORDINARY = "ord"

_FLAVOR_ALIASES = {
    "exp": EXPONENTIAL,
    "exponential": EXPONENTIAL,
    "ord": ORDINARY,
    "ordinary": ORDINARY,
}


class FlavorMismatchError(ValueError):
    """Raised when arrays or triangles of different flavors are combined."""


def normalize_flavor(flavor: str) -> str:
    try:
        return _FLAVOR_ALIASES[flavor]
    except KeyError:
        raise ValueError(f"unknown flavor {flavor!r}; use 'exp' or 'ord'") from None


class Triangle:
    """A materialized ragged lower-triangular block of rationals."""

    __slots__ = ("_flavor", "_rows")

    def __init__(self, flavor: str, rows):
        flavor = normalize_flavor(flavor)
        frozen = []
        for n, row in enumerate(rows):
            row = tuple(Fraction(x) for x in row)
            if len(row) != n + 1:
                raise ValueError(f"row {n} must have {n + 1} entries, got {len(row)}")
            frozen.append(row)
        object.__setattr__(self, "_flavor", flavor)
        object.__setattr__(self, "_rows", tuple(frozen))

    @property
    def flavor(self) -> str:
        return self._flavor

    @property
    def rows(self) -> tuple[tuple[Fraction, ...], ...]:
        return self._rows

    def __len__(self) -> int:
        return len(self._rows)

    def row(self, n: int) -> tuple[Fraction, ...]:
        return self._rows[n]

    def entry(self, n: int, k: int) -> Fraction:
        if k > n:
            return Fraction(0)
        return self._rows[n][k]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Triangle)
            and self._flavor == other._flavor
            and self._rows == other._rows
        )

    def __hash__(self) -> int:
        return hash((self._flavor, self._rows))

    def __setattr__(self, name, value):
        raise AttributeError("Triangle is immutable")

    def __repr__(self) -> str:
        return f"Triangle({self._flavor!r}, {len(self._rows)} rows)"

    def truncated(self, rows: int) -> "Triangle":
        if rows > len(self._rows):
            raise ValueError(f"only {len(self._rows)} rows available")
        return Triangle(self._flavor, self._rows[:rows])

    @classmethod
    def identity(cls, rows: int, flavor: str = EXPONENTIAL) -> "Triangle":
        return cls(flavor, [[int(i == n) for i in range(n + 1)] for n in range(rows)])

    def matmul(self, other: "Triangle") -> "Triangle":
        """Literal lower-triangular matrix product, row count preserved."""
        if self._flavor != other._flavor:
            raise FlavorMismatchError("cannot multiply triangles of different flavors")
        if len(self._rows) != len(other._rows):
            raise ValueError("triangle sizes differ")
        out = []
        for n in range(len(self._rows)):
            out.append(
                [
                    sum(self._rows[n][j] * other._rows[j][k] for j in range(k, n + 1))
                    for k in range(n + 1)
                ]
            )
        return Triangle(self._flavor, out)

    # -- serialization ------------------------------------------------------

    def to_json(self) -> str:
        return json.dumps(
            {"flavor": self._flavor, "rows": [[str(x) for x in r] for r in self._rows]},
            separators=(",", ":"),
        )

    @classmethod
    def from_json(cls, text: str) -> "Triangle":
        data = json.loads(text)
        return cls(data["flavor"], [[Fraction(x) for x in row] for row in data["rows"]])

    def to_csv(self) -> str:
        return "\n".join(",".join(str(x) for x in row) for row in self._rows)


@dataclass(frozen=True)
class SubgroupReport:
    """Which of the recognized subgroups an array belongs to, at its order.

    Membership is moment-sequence equality up to the truncation order
    (the exact notion is an infinite condition).  Stabilizers of umbrae
    other than unity and the singleton are not decided here.
    """

    appell: bool
    associated: bool
    bell: bool
    stochastic: bool
    singleton_stabilizer: bool
    general_stabilizer: str = "not checked"

    def names(self) -> tuple[str, ...]:
        out = []
        for flag, label in (
            (self.appell, "appell"),
            (self.associated, "associated"),
            (self.bell, "bell"),
            (self.stochastic, "stochastic"),
            (self.singleton_stabilizer, "singleton-stabilizer"),
        ):
            if flag:
                out.append(label)
        return tuple(out)


class RiordanArray:
    """A flavor together with the defining pair (gamma, alpha).

    >>> p = pascal_array(6)
    >>> p.entry(4, 2)
    Fraction(6, 1)
    >>> [str(x) for x in ballot_array(6).triangle(5).row(4)]
    ['14', '14', '9', '4', '1']
    """

    def __init__(self, flavor: str, gamma: Umbra, alpha: Umbra):
        if gamma.order != alpha.order:
            raise OrderMismatchError(
                f"gamma and alpha orders differ: {gamma.order} vs {alpha.order}"
            )
        self._flavor = normalize_flavor(flavor)
        self._gamma = gamma
        self._alpha = alpha
        self._cols: dict[int, tuple[Fraction, ...]] = {}

    @property
    def flavor(self) -> str:
        return self._flavor

    @property
    def gamma(self) -> Umbra:
        return self._gamma

    @property
    def alpha(self) -> Umbra:
        return self._alpha

    @property
    def order(self) -> int:
        return self._gamma.order

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, RiordanArray)
            and self._flavor == other._flavor
            and self._gamma == other._gamma
            and self._alpha == other._alpha
        )

    def __hash__(self) -> int:
        return hash((self._flavor, self._gamma, self._alpha))

    def __repr__(self) -> str:
        return f"RiordanArray({self._flavor!r}, gamma={self._gamma!r}, alpha={self._alpha!r})"

    def _check_compatible(self, other: "RiordanArray") -> None:
        if self._flavor != other._flavor:
            raise FlavorMismatchError(
                f"flavors differ: {self._flavor} vs {other._flavor}"
            )
        if self.order != other.order:
            raise OrderMismatchError(f"orders differ: {self.order} vs {other.order}")

    # -- entries ------------------------------------------------------------

    def _col(self, k: int) -> tuple[Fraction, ...]:
        # coefficients of f_gamma * f_alpha^k, memoized per column
        cached = self._cols.get(k)
        if cached is not None:
            return cached
        if k == 0:
            col = self._gamma.egf().coeffs
        else:
            prev = Series(self._col(k - 1))
            col = (prev * self._alpha.egf()).coeffs
        self._cols[k] = col
        return col

    def entry(self, n: int, k: int) -> Fraction:
        if n > self.order or k > self.order or n < 0 or k < 0:
            raise IndexError(f"entry ({n},{k}) outside truncation order {self.order}")
        if k > n:
            return Fraction(0)
        c = self._col(k)[n - k]
        if self._flavor == ORDINARY:
            return c
        return math.factorial(n) // math.factorial(k) * c

    def triangle(self, rows: int | None = None) -> Triangle:
        if rows is None:
            rows = self.order + 1
        if rows > self.order + 1:
            raise ValueError(f"cannot materialize {rows} rows at order {self.order}")
        return Triangle(
            self._flavor,
            [[self.entry(n, k) for k in range(n + 1)] for n in range(rows)],
        )

    # -- group structure ------------------------------------------------------

    def multiply(self, other: "RiordanArray") -> "RiordanArray":
        """Group product in pair form: compose into self, then add pointwise.

        The product pair is (gamma + sigma.beta.der(alpha), alpha + rho.beta.der(alpha)),
        whose triangle equals the literal matrix product of the two triangles.
        """
        self._check_compatible(other)
        g = sum_umbrae(self._gamma, compose_umbra(other.gamma, self._alpha))
        a = sum_umbrae(self._alpha, compose_umbra(other.alpha, self._alpha))
        return RiordanArray(self._flavor, g, a)

    def __mul__(self, other: "RiordanArray") -> "RiordanArray":
        return self.multiply(other)

    def inverse(self) -> "RiordanArray":
        """Group inverse: apply the Lagrange involution to both components."""
        return RiordanArray(
            self._flavor,
            lagrange_involution(self._gamma, self._alpha),
            lagrange_involution(self._alpha, self._alpha),
        )

    # -- fundamental-theorem action -------------------------------------------

    def act(self, eta: Umbra) -> Umbra:
        """Apply the array to an umbra: the result is gamma + eta.beta.der(alpha).

        For exponential arrays the n-th moment of the result is row n of
        the matrix dotted with eta's moment column; for ordinary arrays
        the same holds after the factorial reweighting of `act_values`.
        """
        if eta.order != self.order:
            raise OrderMismatchError(f"orders differ: {eta.order} vs {self.order}")
        return sum_umbrae(self._gamma, compose_umbra(eta, self._alpha))

    def act_values(self, values) -> list[Fraction]:
        """Matrix-vector action on a raw column in this flavor's convention.

        Exponential: the column is a moment sequence.  Ordinary: input
        entry k is a_k/k! for an umbra a, and output entry n is scaled
        by 1/n! the same way, so the returned list is exactly
        triangle-times-column in both flavors.
        """
        vals = [Fraction(v) for v in values]
        if len(vals) != self.order + 1:
            raise ValueError(f"column must have {self.order + 1} values")
        if self._flavor == ORDINARY:
            eta = Umbra([math.factorial(k) * v for k, v in enumerate(vals)])
            out = self.act(eta)
            return [m / math.factorial(n) for n, m in enumerate(out.moments)]
        return list(self.act(Umbra(vals)).moments)

    def row_sums(self) -> list[Fraction]:
        """Row sums via the action on the all-ones column."""
        return self.act_values([1] * (self.order + 1))

    # -- classification ---------------------------------------------------------

    def classify(self) -> SubgroupReport:
        eps = named("augmentation", self.order)
        one_plus_z = Series([1, 1], order=self.order)
        elevated = Series([0] + list(self._alpha.egf().coeffs[: self.order]))
        chi_shift = Umbra.from_egf(one_plus_z * (Series.one(self.order) + elevated).reciprocal())
        return SubgroupReport(
            appell=self._alpha == eps,
            associated=self._gamma == eps,
            bell=self._gamma == self._alpha,
            stochastic=all(s == 1 for s in self.row_sums()),
            singleton_stabilizer=self._gamma == chi_shift,
        )


def identity_array(order: int, flavor: str = EXPONENTIAL) -> RiordanArray:
    eps = named("augmentation", order)
    return RiordanArray(flavor, eps, eps)


# -- the standard families used throughout the tests and the catalog --------


def pascal_array(order: int, flavor: str = EXPONENTIAL) -> RiordanArray:
    """Binomial coefficients in either flavor.

    Exponentially this is (unity, augmentation); ordinarily it is the
    pair (boolean-unity, boolean-unity), and both have entries binom(n, k).
    """
    if normalize_flavor(flavor) == EXPONENTIAL:
        return RiordanArray(flavor, named("unity", order), named("augmentation", order))
    bu = named("boolean-unity", order)
    return RiordanArray(flavor, bu, bu)


def stirling2_array(order: int) -> RiordanArray:
    """Stirling numbers of the second kind: (augmentation, -1.bernoulli)."""
    return RiordanArray(
        EXPONENTIAL,
        named("augmentation", order),
        dot_int(-1, named("bernoulli", order)),
    )


def stirling1_array(order: int) -> RiordanArray:
    """Signed Stirling numbers of the first kind: (augmentation, bernoulli.singleton)."""
    return RiordanArray(
        EXPONENTIAL,
        named("augmentation", order),
        dot(named("bernoulli", order), named("singleton", order)),
    )


def ballot_array(order: int) -> RiordanArray:
    """The ordinary Catalan array: both components the catalan umbra."""
    cat = named("catalan", order)
    return RiordanArray(ORDINARY, cat, cat)


def double_catalan_array(order: int) -> RiordanArray:
    """The ordinary array with both components 2.catalan."""
    c2 = dot_int(2, named("catalan", order))
    return RiordanArray(ORDINARY, c2, c2)


def chebyshev_array(order: int) -> RiordanArray:
    """The ordinary inverse of the double catalan array: both components -2.singleton."""
    m2 = dot_int(-2, named("singleton", order))
    return RiordanArray(ORDINARY, m2, m2)
