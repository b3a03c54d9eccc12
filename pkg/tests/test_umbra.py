import math
from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from riordan import (
    OrderMismatchError,
    Series,
    Umbra,
    abel_moment,
    abel_umbra,
    compose_umbra,
    compositional_inverse,
    derivative,
    dot,
    dot_int,
    dot_rational,
    lagrange_involution,
    named,
    named_umbrae,
    scale,
    sum_umbrae,
)

import oracles

rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)


@st.composite
def umbrae(draw, min_order=1, max_order=7):
    order = draw(st.integers(min_order, max_order))
    return Umbra([1] + [draw(rationals) for _ in range(order)])


@st.composite
def umbra_tuples(draw, count=2, min_order=1, max_order=6):
    order = draw(st.integers(min_order, max_order))
    return tuple(
        Umbra([1] + [draw(rationals) for _ in range(order)]) for _ in range(count)
    )


def shifted_egf(a):
    """z f_a(z) as a series of the same order (top coefficient dropped)."""
    return Series([0] + list(a.egf().coeffs[:-1]))


# ------------------------------------------------------------ construction


def test_moment_zero_must_be_one():
    with pytest.raises(ValueError):
        Umbra([2, 1])
    with pytest.raises(ValueError):
        Umbra([], order=3)


def test_order_keyword_and_bounds():
    u = Umbra([1, 5], order=3)
    assert u.moments == (1, 5, 0, 0)
    with pytest.raises(IndexError):
        u.moment(4)
    with pytest.raises(IndexError):
        u.moment(-1)


@given(umbrae())
def test_egf_round_trip(u):
    assert Umbra.from_egf(u.egf()) == u


def test_from_egf_requires_unit_constant():
    with pytest.raises(ValueError):
        Umbra.from_egf(Series([2, 1]))


@given(umbrae())
def test_json_round_trip(u):
    assert Umbra.from_json(u.to_json()) == u


def test_json_order_field_checked():
    with pytest.raises(ValueError):
        Umbra.from_json('{"moments":["1","2"],"order":5}')


def test_mismatched_orders_rejected():
    with pytest.raises(OrderMismatchError):
        sum_umbrae(Umbra([1, 1]), Umbra([1, 1, 1]))


# ------------------------------------------------------------ named table


def test_named_against_elementary_oracles():
    N = 8
    assert named("augmentation", N).moments == (1,) + (0,) * N
    assert named("unity", N).moments == (1,) * (N + 1)
    assert named("singleton", N).moments == (1, 1) + (0,) * (N - 1)
    assert named("boolean-unity", N).moments == tuple(
        math.factorial(n) for n in range(N + 1)
    )
    assert named("bernoulli", N).moments == tuple(
        oracles.bernoulli_number(n) for n in range(N + 1)
    )
    assert named("bell", N).moments == tuple(
        oracles.bell_number(n) for n in range(N + 1)
    )
    assert named("catalan", N).moments == tuple(
        math.factorial(n) * oracles.catalan_number(n) for n in range(N + 1)
    )


def test_named_delta():
    assert named("delta(3)", 5).moments == (1, 0, 0, 1, 0, 0)
    assert named("delta(1)", 4) == named("singleton", 4)
    with pytest.raises(ValueError):
        named("delta(0)", 4)


def test_named_unknown_and_listing():
    with pytest.raises(ValueError):
        named("mystery", 4)
    names = named_umbrae()
    for expected in ("augmentation", "unity", "singleton", "bernoulli",
                     "bell", "boolean-unity", "catalan"):
        assert expected in names


# ------------------------------------------------------------ dot products


@given(umbrae(), st.integers(0, 4))
def test_dot_int_is_egf_power(u, k):
    got = dot_int(k, u).egf().coeffs
    assert got == tuple(oracles.brute_pow(list(u.egf().coeffs), k, u.order))


@given(umbrae(), st.integers(0, 4))
def test_dot_int_matches_iterated_binomial_convolution(u, k):
    assert list(dot_int(k, u).moments) == oracles.ksum_moments(u.moments, k)


@given(umbrae())
def test_additive_inverse_cancels(u):
    assert sum_umbrae(u, dot_int(-1, u)) == named("augmentation", u.order)
    assert dot_int(1, u) == u


def test_doubled_catalan_moments():
    assert dot_int(2, named("catalan", 3)).moments == (1, 2, 10, 84)


@given(umbrae(), st.integers(-3, 3))
def test_dot_rational_extends_dot_int(u, k):
    assert dot_rational(k, u) == dot_int(k, u)


@given(umbrae())
def test_dot_rational_half_round_trip(u):
    half = dot_rational(Fraction(1, 2), u)
    assert dot_rational(Fraction(1, 2), dot_int(2, u)) == u
    assert sum_umbrae(half, half) == u


@given(st.fractions(min_value=-3, max_value=3, max_denominator=4), st.integers(1, 8))
def test_dot_rational_on_unity_gives_powers(c, order):
    got = dot_rational(c, named("unity", order))
    assert got.moments == tuple(Fraction(c) ** n for n in range(order + 1))


@given(umbrae())
def test_unity_is_two_sided_dot_identity(u):
    one = named("unity", u.order)
    assert dot(one, u) == u
    assert dot(u, one) == u


def test_singleton_and_bell_are_mutually_inverse():
    N = 7
    assert dot(named("singleton", N), named("bell", N)) == named("unity", N)
    assert dot(named("bell", N), named("singleton", N)) == named("unity", N)


@given(umbrae())
def test_dot_singleton_gives_falling_factorial_moments(u):
    got = dot(u, named("singleton", u.order))
    expected = tuple(
        sum(oracles.stirling1(n, k) * u.moment(k) for k in range(n + 1))
        for n in range(u.order + 1)
    )
    assert got.moments == expected


@given(umbrae())
def test_dot_boolean_unity_gives_rising_factorial_moments(u):
    got = dot(u, named("boolean-unity", u.order))
    for n in range(u.order + 1):
        poly = [Fraction(1)]
        for j in range(n):
            poly = [
                (poly[i - 1] if i else 0) + j * (poly[i] if i < len(poly) else 0)
                for i in range(len(poly) + 1)
            ]
        assert got.moment(n) == sum(c * u.moment(i) for i, c in enumerate(poly))


@given(umbra_tuples(count=3, max_order=5))
def test_dot_is_associative(triple):
    g, h, a = triple
    assert dot(dot(g, h), a) == dot(g, dot(h, a))


# ------------------------------------------------- scale, sum, derivative


@given(umbrae(), rationals)
def test_scale_moments(u, c):
    got = scale(u, c)
    assert got.moments == tuple(Fraction(c) ** n * m for n, m in enumerate(u.moments))
    assert scale(u, 1) == u


@given(umbrae(), rationals, rationals)
def test_scale_composes(u, c, d):
    assert scale(scale(u, c), d) == scale(u, c * d)


@given(umbra_tuples())
def test_sum_is_binomial_convolution(pair):
    a, b = pair
    got = sum_umbrae(a, b)
    for n in range(a.order + 1):
        expected = sum(
            math.comb(n, i) * a.moment(i) * b.moment(n - i) for i in range(n + 1)
        )
        assert got.moment(n) == expected
    assert sum_umbrae(b, a) == got
    assert sum_umbrae(a, named("augmentation", a.order)) == a


@given(umbrae())
def test_derivative_shifts_moments(u):
    got = derivative(u)
    assert got.moment(0) == 1
    for n in range(1, u.order + 1):
        assert got.moment(n) == n * u.moment(n - 1)


def test_derivative_named_facts():
    N = 6
    assert derivative(named("augmentation", N)) == named("singleton", N)
    assert derivative(dot_int(-1, named("bernoulli", N))) == named("unity", N)
    assert derivative(named("boolean-unity", N)) == named("boolean-unity", N)


# -------------------------------------------------------------- composition


@given(umbra_tuples())
def test_compose_umbra_is_egf_substitution(pair):
    g, a = pair
    got = compose_umbra(g, a).egf().coeffs
    inner = [Fraction(0)] + list(a.egf().coeffs[:-1])
    assert got == tuple(
        oracles.brute_compose(list(g.egf().coeffs), inner, a.order)
    )


@given(umbrae())
def test_compose_with_augmentation_is_identity(u):
    assert compose_umbra(u, named("augmentation", u.order)) == u


@given(umbra_tuples(max_order=5))
def test_compose_moment_formula(pair):
    g, a = pair
    got = compose_umbra(g, a)
    for n in range(a.order + 1):
        expected = sum(
            math.comb(n, k)
            * g.moment(k)
            * oracles.ksum_moments(a.moments, k)[n - k]
            for k in range(n + 1)
        )
        assert got.moment(n) == expected


@given(umbra_tuples())
def test_derivative_equation(pair):
    g, a = pair
    lhs = compose_umbra(derivative(g), a).egf()
    inner = shifted_egf(a)
    rhs = Series.one(a.order) + inner * compose_umbra(g, a).egf()
    assert lhs == rhs


# ----------------------------------------------- Abel moments and inversion


def test_abel_moment_edge_cases():
    u = named("bell", 5)
    eps = named("augmentation", 5)
    assert abel_moment(u, eps, 3) == u.moment(3)
    assert abel_moment(u, u, 0) == 1
    with pytest.raises(ValueError):
        abel_moment(u, u, -1)
    with pytest.raises(IndexError):
        abel_moment(u, u, 6)


def test_abel_umbra_named_facts():
    N = 7
    cat = named("catalan", N)
    fac = named("boolean-unity", N)
    assert abel_umbra(cat, cat) == fac
    assert abel_umbra(fac, fac) == named("singleton", N)
    assert abel_umbra(cat) == abel_umbra(cat, cat)


def test_abel_umbra_cauchy_fact():
    N = 6
    alpha = dot_int(-1, named("bernoulli", N))
    got = abel_umbra(alpha)
    assert got.moments == tuple(oracles.cauchy_number(n) for n in range(N + 1))


def test_involution_named_facts():
    N = 6
    two_cat = dot_int(2, named("catalan", N))
    neg_two_chi = dot_int(-2, named("singleton", N))
    assert lagrange_involution(two_cat) == neg_two_chi
    assert neg_two_chi.egf() == Series([1, 1], order=N).reciprocal() ** 2

    flipped = scale(named("singleton", N), -1)
    assert lagrange_involution(named("catalan", N)) == flipped
    assert lagrange_involution(flipped) == named("catalan", N)

    alpha = dot_int(-1, named("bernoulli", N))
    log_shift = dot(named("bernoulli", N), named("singleton", N))
    assert lagrange_involution(alpha) == log_shift
    assert log_shift.moments == tuple(
        Fraction((-1) ** n * math.factorial(n), n + 1) for n in range(N + 1)
    )
    assert abel_umbra(log_shift) == named("bernoulli", N)


@given(umbrae())
def test_involution_round_trip(u):
    assert lagrange_involution(lagrange_involution(u)) == u
    assert dot_int(-1, abel_umbra(u)) == lagrange_involution(u)


@given(umbrae(max_order=6))
def test_moment_scaling_exchange(a):
    kappa = abel_umbra(a)
    for n in range(1, a.order + 1):
        for k in range(1, n + 1):
            lhs = n * dot_int(k, a).moment(n - k)
            rhs = k * dot_int(n, kappa).moment(n - k)
            assert lhs == rhs


@given(umbra_tuples(count=3, max_order=6))
def test_abel_identity(triple):
    g, s, a = triple
    total = sum_umbrae(g, s)
    for n in range(a.order + 1):
        expected = sum(
            math.comb(n, k)
            * sum_umbrae(g, dot_int(k, a)).moment(n - k)
            * abel_moment(s, a, k)
            for k in range(n + 1)
        )
        assert total.moment(n) == expected


@given(umbra_tuples())
def test_inversion_theorem(pair):
    g, a = pair
    comp = compose_umbra(g, lagrange_involution(a))
    for n in range(1, a.order + 1):
        assert comp.moment(n) == abel_moment(g, a, n)


# ---------------------------------------------------- compositional inverse


def test_inverse_of_augmentation_is_identity():
    got = compositional_inverse(named("augmentation", 5))
    assert got == Series.identity(5)


def test_inverse_recovers_catalan():
    N = 6
    alpha = dot(named("singleton", N), dot_int(-1, named("unity", N)))
    assert alpha.egf() == Series([1, -1], order=N)
    got = compositional_inverse(alpha)
    assert got == shifted_egf(named("catalan", N))


@given(umbrae())
def test_inverse_composes_to_identity(u):
    inv = compositional_inverse(u)
    assert shifted_egf(u).compose(inv) == Series.identity(u.order)
    assert inv.compose(shifted_egf(u)) == Series.identity(u.order)
