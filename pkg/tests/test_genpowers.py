import random
from fractions import Fraction

import pytest

from riordan import (
    FlavorMismatchError,
    Triangle,
    additivity_check,
    general_power,
    identity_array,
    pascal_array,
    power_pair,
    stirling2_array,
)

import oracles


def iterated(array, c):
    triangle = Triangle.identity(array.order + 1)
    for _ in range(c):
        triangle = triangle.matmul(array.triangle())
    return triangle


def test_integer_powers_match_iterated_products():
    rng = random.Random(53)
    for array in (pascal_array(6), stirling2_array(6), oracles.random_array(rng, "exp", 6)):
        for c in range(5):
            assert general_power(array, c) == iterated(array, c)


def test_negative_power_is_inverse():
    array = pascal_array(5)
    assert general_power(array, -1) == array.inverse().triangle()


def test_half_pascal_rows():
    got = general_power(pascal_array(3), Fraction(1, 2))
    assert [list(r) for r in got.rows] == [
        [1],
        [Fraction(1, 2), 1],
        [Fraction(1, 4), 1, 1],
        [Fraction(1, 8), Fraction(3, 4), Fraction(3, 2), 1],
    ]


def test_half_pascal_squares_back():
    array = pascal_array(6)
    half = power_pair(array, Fraction(1, 2))
    assert (half * half).triangle() == array.triangle()
    assert general_power(half, 2) == array.triangle()


def test_power_pair_matches_general_power():
    rng = random.Random(59)
    for _ in range(3):
        array = oracles.random_array(rng, "exp", 6)
        for c in (Fraction(2, 3), Fraction(-1, 2), 3):
            assert power_pair(array, c).triangle() == general_power(array, c)


def test_power_pair_at_one_is_identity_map():
    array = pascal_array(5)
    again = power_pair(array, 1)
    assert again.gamma == array.gamma
    assert again.alpha == array.alpha


def test_additivity():
    rng = random.Random(61)
    array = oracles.random_array(rng, "exp", 6)
    for _ in range(5):
        c1 = oracles.random_fraction(rng)
        c2 = oracles.random_fraction(rng)
        report = additivity_check(array, c1, c2)
        assert report.ok
        assert report.status == "pass"
        assert report.mismatches == ()
        assert (report.c1, report.c2) == (c1, c2)


def test_entries_interpolate_from_integer_powers():
    # each entry is a polynomial in c of degree <= n - k, so the values
    # at c = 0..n-k determine the value at any rational c
    rng = random.Random(67)
    array = oracles.random_array(rng, "exp", 5)
    c = Fraction(5, 7)
    got = general_power(array, c)
    powers = [general_power(array, j) for j in range(array.order + 1)]
    for n in range(array.order + 1):
        for k in range(n + 1):
            points = [(j, powers[j].entry(n, k)) for j in range(n - k + 1)]
            assert got.entry(n, k) == oracles.lagrange_interpolate(points, c)


def test_powers_of_identity_are_identity():
    eye = identity_array(4)
    assert general_power(eye, Fraction(7, 3)) == eye.triangle()


def test_ordinary_flavor_rejected():
    with pytest.raises(FlavorMismatchError):
        general_power(pascal_array(3, "ord"), 2)
    with pytest.raises(FlavorMismatchError):
        power_pair(pascal_array(3, "ord"), 2)
    with pytest.raises(FlavorMismatchError):
        additivity_check(pascal_array(3, "ord"), 1, 1)
