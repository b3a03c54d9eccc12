"""An executable catalog of classical triangle identities.

Each named identity pins a statement about one of the standard arrays
(Pascal, both Stirlings, the Catalan family) to an elementary
arithmetic route: a closed-form binomial expression, a recurrence, or a
direct summation.  Running one produces a report listing every compared
value as an (input, lhs, rhs) witness, so a failure is a concrete
counterexample rather than a boolean.

The left side of a witness is always the value produced by the array
machinery; the right side comes from the elementary route computed
here (Fibonacci by the additive recurrence, Catalan and the binomial
forms by integer arithmetic, Bell from its generating function).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from fractions import Fraction

from .arrays import (
    RiordanArray,
    Triangle,
    ballot_array,
    chebyshev_array,
    double_catalan_array,
    pascal_array,
    stirling1_array,
    stirling2_array,
)
from .coefficients import binomial_generalized
from .recursions import a_sequence, check_colrec, check_rowrec, check_rowrec2
from .sheffer import Polynomial, sheffer_sequence, umbral_compose
from .umbra import dot, dot_int, named, scale


@dataclass(frozen=True)
class Witness:
    input: str
    lhs: str
    rhs: str

    @property
    def ok(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class IdentityReport:
    name: str
    n_max: int
    status: str
    witnesses: tuple[Witness, ...]

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def failures(self) -> tuple[Witness, ...]:
        return tuple(w for w in self.witnesses if not w.ok)

    def to_json(self) -> str:
        return json.dumps(
            {
                "name": self.name,
                "n_max": self.n_max,
                "status": self.status,
                "witnesses": [
                    {"input": w.input, "lhs": w.lhs, "rhs": w.rhs}
                    for w in self.witnesses
                ],
            },
            separators=(",", ":"),
        )


# -- elementary sequences used on the right-hand sides ------------------------


def _fibonacci(m: int) -> int:
    a, b = 0, 1
    for _ in range(m):
        a, b = b, a + b
    return a


def _catalan(m: int) -> int:
    return math.comb(2 * m, m) // (m + 1)


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


def _cycle(pattern, length: int) -> list[int]:
    return [pattern[i % len(pattern)] for i in range(length)]


# -- the individual checks ----------------------------------------------------


def _pascal_rowsum(n_max, order):
    R = pascal_array(order)
    return [
        Witness(
            f"n={n}",
            str(sum(R.entry(n, k) for k in range(n + 1))),
            str(2**n),
        )
        for n in range(n_max + 1)
    ]


def _stirling_bell(n_max, order):
    R = stirling2_array(order)
    bell = named("bell", order)
    return [
        Witness(
            f"n={n}",
            str(sum(R.entry(n, k) for k in range(n + 1))),
            str(bell.moment(n)),
        )
        for n in range(n_max + 1)
    ]


def _stirling_inverse(n_max, order):
    s1 = stirling1_array(order)
    s2 = stirling2_array(order)
    prod = s1.triangle(n_max + 1).matmul(s2.triangle(n_max + 1))
    eye = Triangle.identity(n_max + 1)
    out = [
        Witness(f"(s.S) row {n}", _csv(prod.row(n)), _csv(eye.row(n)))
        for n in range(n_max + 1)
    ]
    composed = umbral_compose(s2, s1, n_max)
    out.extend(
        Witness(f"sum_k S({n},k)(x)_k", str(composed[n]), str(Polynomial.monomial(n)))
        for n in range(n_max + 1)
    )
    return out


def _stirling1_altsum(n_max, order):
    R = stirling1_array(order)
    return [
        Witness(f"n={n}", str(sum(R.entry(n, k) for k in range(n + 1))), "0")
        for n in range(2, n_max + 1)
    ]


def _recursion_sweep(check, n_max, order, extra=None):
    R = stirling2_array(order)
    out = list(extra(R, n_max) if extra else [])
    for n in range(1, n_max + 1):
        for k in range(1, n + 1):
            r = check(R, n, k)
            out.append(Witness(f"n={n},k={k}", str(r.lhs), str(r.rhs)))
    return out


def _stirling2_colrec(n_max, order):
    return _recursion_sweep(check_colrec, n_max, order)


def _stirling2_rowrec(n_max, order):
    def cauchy_similarity(R, n_max):
        lhs = a_sequence(R)
        rhs = dot_int(-1, dot(named("bernoulli", order), named("singleton", order)))
        yield Witness(
            "A-sequence = -1.bernoulli.singleton",
            _csv(lhs.moments[: n_max + 1]),
            _csv(rhs.moments[: n_max + 1]),
        )

    return _recursion_sweep(check_rowrec, n_max, order, cauchy_similarity)


def _stirling2_rowrec2(n_max, order):
    return _recursion_sweep(check_rowrec2, n_max, order)


def _ballot_formula(n_max, order):
    R = ballot_array(order)
    return [
        Witness(
            f"n={n},k={k}",
            str(R.entry(n, k)),
            str(Fraction(k + 1, n + 1) * math.comb(2 * n - k, n)),
        )
        for n in range(n_max + 1)
        for k in range(n + 1)
    ]


def _catalan_rowsum(n_max, order):
    R = ballot_array(order)
    return [
        Witness(
            f"n={n}",
            str(sum(R.entry(n, k) for k in range(n + 1))),
            str(_catalan(n + 1)),
        )
        for n in range(n_max + 1)
    ]


def _catalan_convolution(n_max, order):
    R = ballot_array(order)
    out = []
    for n in range(n_max + 1):
        conv = sum(_catalan(i) * _catalan(n - i) for i in range(n + 1))
        out.append(Witness(f"n={n}", str(R.entry(n + 1, 1)), str(conv)))
        out.append(Witness(f"n={n} closed", str(R.entry(n + 1, 1)), str(_catalan(n + 1))))
    return out


def _cat2_factor(n_max, order):
    b = ballot_array(order)
    p = pascal_array(order, "ord")
    d = double_catalan_array(order)
    pair = b.multiply(p).triangle(n_max + 1)
    literal = b.triangle(n_max + 1).matmul(p.triangle(n_max + 1))
    target = d.triangle(n_max + 1)
    out = []
    for n in range(n_max + 1):
        out.append(Witness(f"row {n} pair form", _csv(pair.row(n)), _csv(target.row(n))))
        out.append(
            Witness(f"row {n} matrix form", _csv(literal.row(n)), _csv(target.row(n)))
        )
    return out


def _cat2_entry(n_max, order):
    R = double_catalan_array(order)
    return [
        Witness(
            f"n={n},k={k}",
            str(R.entry(n, k)),
            str(Fraction(k + 1, n + 1) * math.comb(2 * n + 2, n - k)),
        )
        for n in range(n_max + 1)
        for k in range(n + 1)
    ]


def _cheb_polynomials(n_max: int) -> list[Polynomial]:
    x_minus_2 = Polynomial([-2, 1])
    seq = [Polynomial([1]), x_minus_2]
    while len(seq) < n_max + 1:
        seq.append(x_minus_2 * seq[-1] - seq[-2])
    return seq[: n_max + 1]


def _cheb_coeffs(n_max, order):
    computed = sheffer_sequence(chebyshev_array(order), n_max)
    recursion = _cheb_polynomials(n_max)
    out = []
    for n in range(n_max + 1):
        closed = Polynomial(
            [(-1) ** (n - k) * math.comb(n + k + 1, n - k) for k in range(n + 1)]
        )
        out.append(Witness(f"s_{n} closed form", str(computed[n]), str(closed)))
        out.append(Witness(f"s_{n} recursion", str(computed[n]), str(recursion[n])))
    return out


def _periodic(pattern, base):
    def check(n_max, order):
        R = double_catalan_array(order)
        values = R.act_values(_cycle(pattern, order + 1))
        return [
            Witness(f"n={n}", str(values[n]), str(base**n)) for n in range(n_max + 1)
        ]

    return check


def _nat_4n(n_max, order):
    R = double_catalan_array(order)
    return [
        Witness(
            f"n={n}",
            str(sum(R.entry(n, k) * (k + 1) for k in range(n + 1))),
            str(4**n),
        )
        for n in range(n_max + 1)
    ]


def _fib_5n(n_max, order):
    R = double_catalan_array(order)
    return [
        Witness(
            f"n={n}",
            str(sum(R.entry(n, k) * _fibonacci(2 * k + 2) for k in range(n + 1))),
            str(5**n),
        )
        for n in range(n_max + 1)
    ]


def _fib_even_inverse(n_max, order):
    out = []
    for n in range(n_max + 1):
        total = sum(
            (
                binomial_generalized(n + k + 2, n - k)
                - binomial_generalized(n + k + 1, n - k - 1)
            )
            * Fraction(-5) ** k
            for k in range(n + 1)
        )
        out.append(
            Witness(f"n={n}", str((-1) ** n * total), str(_fibonacci(2 * n + 2)))
        )
    return out


def _fib_odd(n_max, order):
    out = []
    for n in range(n_max + 1):
        total = sum(
            (
                binomial_generalized(n + k + 2, n - k)
                - binomial_generalized(n + k, n - k - 2)
            )
            * Fraction(-5) ** k
            for k in range(n + 1)
        )
        out.append(
            Witness(f"n={n}", str((-1) ** n * total), str(_fibonacci(2 * n + 1)))
        )
    return out


def _inv_pascal(n_max, order):
    p = pascal_array(order, "ord")
    inv = p.inverse()
    out = [
        Witness(
            f"n={n},k={k}",
            str(inv.entry(n, k)),
            str((-1) ** (n - k) * math.comb(n, k)),
        )
        for n in range(n_max + 1)
        for k in range(n + 1)
    ]
    prod = p.triangle(n_max + 1).matmul(inv.triangle(n_max + 1))
    eye = Triangle.identity(n_max + 1, "ord")
    out.extend(
        Witness(f"(P.P^-1) row {n}", _csv(prod.row(n)), _csv(eye.row(n)))
        for n in range(n_max + 1)
    )
    return out


def _cat2_inverse_factor(n_max, order):
    inv = double_catalan_array(order).inverse().triangle(n_max + 1)
    chi = named("singleton", order)
    neg_pascal = RiordanArray("ord", dot_int(-1, chi), dot_int(-1, chi))
    neg_ballot = RiordanArray("ord", scale(chi, -1), scale(chi, -1))
    factored = neg_pascal.triangle(n_max + 1).matmul(neg_ballot.triangle(n_max + 1))
    direct = chebyshev_array(order).triangle(n_max + 1)
    out = []
    for n in range(n_max + 1):
        out.append(Witness(f"row {n} factored", _csv(inv.row(n)), _csv(factored.row(n))))
        out.append(Witness(f"row {n} direct", _csv(inv.row(n)), _csv(direct.row(n))))
    return out


def _cheb_action(n_max, order):
    composed = umbral_compose(double_catalan_array(order), chebyshev_array(order), n_max)
    return [
        Witness(f"n={n}", str(composed[n]), str(Polynomial.monomial(n)))
        for n in range(n_max + 1)
    ]


_CATALOG: dict[str, object] = {
    "pascal-rowsum": _pascal_rowsum,
    "stirling-bell": _stirling_bell,
    "stirling-inverse": _stirling_inverse,
    "stirling1-altsum": _stirling1_altsum,
    "stirling2-colrec": _stirling2_colrec,
    "stirling2-rowrec": _stirling2_rowrec,
    "stirling2-rowrec2": _stirling2_rowrec2,
    "ballot-formula": _ballot_formula,
    "catalan-rowsum": _catalan_rowsum,
    "catalan-convolution": _catalan_convolution,
    "cat2-factor": _cat2_factor,
    "cat2-entry": _cat2_entry,
    "cheb-coeffs": _cheb_coeffs,
    "periodic-2": _periodic((1, 0, -1, 0), 2),
    "periodic-3": _periodic((1, 1, 0, -1, -1, 0), 3),
    "nat-4n": _nat_4n,
    "fib-5n": _fib_5n,
    "fib-even-inverse": _fib_even_inverse,
    "fib-odd": _fib_odd,
    "inv-pascal": _inv_pascal,
    "cat2-inverse-factor": _cat2_inverse_factor,
    "cheb-action": _cheb_action,
}


def catalog() -> list[str]:
    """The fixed list of identity names, in catalog order."""
    return list(_CATALOG)


def run(name: str, n_max: int, order: int | None = None) -> IdentityReport:
    """Execute one catalog identity up to n_max with exact arithmetic.

    The internal truncation order defaults to n_max + 2, which leaves
    room for the checks that reach one row past n_max.

    >>> run("nat-4n", 2).witnesses[-1]
    Witness(input='n=2', lhs='16', rhs='16')
    """
    if name not in _CATALOG:
        raise ValueError(f"unknown identity {name!r}; see catalog()")
    if n_max < 0:
        raise ValueError("n_max must be >= 0")
    if order is None:
        order = n_max + 2
    elif order < n_max + 1:
        raise ValueError(f"order {order} too small for n_max {n_max}")
    witnesses = tuple(_CATALOG[name](n_max, order))
    status = "pass" if all(w.ok for w in witnesses) else "fail"
    return IdentityReport(name, n_max, status, witnesses)
