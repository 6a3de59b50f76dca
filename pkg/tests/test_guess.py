"""Operator recovery from series coefficients."""

from fractions import Fraction
from math import comb

import pytest

from picardfuchs import (
    DERIVED_OPERATORS,
    GuessConfig,
    MobiusMap,
    ThetaOperator,
    guess_operator,
    mobius,
    recurrence_from_operator,
)
from picardfuchs.arith import Polynomial, PowerSeries
from picardfuchs.errors import InsufficientTerms
from picardfuchs.optheta import apply_to_series


def P(*cs):
    return Polynomial([Fraction(c) for c in cs])


LEGENDRE = ThetaOperator.from_theta_polys([P(0, 0, 1), P(-4, -16, -16)])
GEOMETRIC = ThetaOperator.from_theta_polys([P(0, 1), P(-1, -1)])


def test_geometric_series():
    got = guess_operator([1] * 30, GuessConfig(1, 1, 10))
    assert got == GEOMETRIC


def test_central_binomial_squares():
    series = [comb(2 * n, n) ** 2 for n in range(30)]
    got = guess_operator(series, GuessConfig(2, 1, 10))
    assert got == LEGENDRE


def test_insufficient_terms_raises():
    with pytest.raises(InsufficientTerms):
        guess_operator([1, 2, 3], GuessConfig(4, 9, 10))


def test_search_box_exhausted_returns_none():
    series = [comb(2 * n, n) ** 2 for n in range(30)]
    assert guess_operator(series, GuessConfig(1, 1, 5)) is None


def test_guessed_operator_annihilates_everything_given():
    series = [Fraction(comb(2 * n, n)) for n in range(40)]
    got = guess_operator(series, GuessConfig(2, 2, 10))
    assert got is not None
    y = PowerSeries(series, 39)
    assert apply_to_series(got, y).is_zero_through(39 - got.r)


def test_scaling_the_variable_commutes_with_guessing():
    base = [comb(2 * n, n) ** 2 for n in range(30)]
    c = Fraction(-2)
    scaled = [a * c**n for n, a in enumerate(base)]
    got = guess_operator(scaled, GuessConfig(2, 1, 10))
    # y(ct) is annihilated by the pullback along t = c*s
    want = mobius(LEGENDRE, MobiusMap.scaling(c))
    assert got.normalized() == want.normalized()


def test_smaller_order_wins_over_smaller_degree():
    # 1/(1-t) satisfies both an order-1 equation and order-2 ones; the
    # search must return the order-1 operator
    got = guess_operator([1] * 40, GuessConfig(2, 2, 10))
    assert got.order == 1


def test_recurrence_coefficients_for_legendre():
    rec = recurrence_from_operator(LEGENDRE)
    for m in range(1, 8):
        p0, p1 = rec.coefficients(m)
        # A_m m^2 = 16 (m - 1/2)^2 A_{m-1}
        assert p0 == m * m
        assert p1 == -16 * Fraction(2 * m - 1, 2) ** 2
    assert rec.obstructions() == [0]


def test_recurrence_obstructions_of_derived_operator():
    rec = recurrence_from_operator(DERIVED_OPERATORS["descent-98"].operator)
    assert rec.obstructions() == [0, 1]


def test_recurrence_extend():
    rec = recurrence_from_operator(GEOMETRIC)
    assert rec.extend([1, 1], 10) == [1] * 11
    rec2 = recurrence_from_operator(LEGENDRE)
    vals = rec2.extend([1, 4], 8)
    assert vals == [comb(2 * n, n) ** 2 for n in range(9)]
