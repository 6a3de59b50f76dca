"""Theta-form operators, symbols, and the Fuchs identity."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from picardfuchs import CATALOG, INFINITY, SingularPoint, ThetaOperator, riemann_symbol
from picardfuchs.arith import Polynomial, PowerSeries, QuadraticNumber
from picardfuchs.optheta import (
    DOperator,
    apply_to_series,
    d_from_theta,
    exponents_at,
    fuchs_defect,
    op_mul,
    singular_points,
    theta_from_d,
    top_profile,
)


def P(*cs):
    return Polynomial([Fraction(c) for c in cs])


def halves(*cs):
    return tuple(Fraction(c, 2) for c in cs)


# Gauss hypergeometric with a = b = 1/2, c = 1 in the variable 16t; the local
# exponents are textbook: (0, 0) at 0, (0, c-a-b) = (0, 0) at the finite
# singular value, (a, b) = (1/2, 1/2) at infinity.
LEGENDRE = ThetaOperator.from_theta_polys([P(0, 0, 1), P(-4, -16, -16)])


def test_constructor_clears_content_and_sign():
    op = ThetaOperator.from_theta_polys([P(0, 0, Fraction(1, 2)), P(-2, -8, -8)])
    assert op == LEGENDRE
    flipped = ThetaOperator.from_theta_polys([P(0, 0, -1), P(4, 16, 16)])
    assert flipped == LEGENDRE  # sign normalization


def test_operator_json_roundtrip():
    for op in (LEGENDRE, CATALOG[266].operator):
        assert ThetaOperator.from_json(json.loads(json.dumps(op.to_json()))) == op


def test_d_form_json_accepted():
    dop = d_from_theta(LEGENDRE)
    data = {"form": "d", "coeffs": [[str(c) for c in p.coeffs] for p in dop.d_coeffs]}
    assert ThetaOperator.from_json(data) == LEGENDRE
    with pytest.raises(ValueError):
        ThetaOperator.from_json({"form": "weird", "coeffs": [["1"]]})


def test_theta_d_roundtrip_on_catalog():
    for rec in CATALOG.values():
        op = rec.operator
        assert theta_from_d(d_from_theta(op)).cleared() == op.cleared()


def test_apply_to_series_respects_multiplication():
    a = ThetaOperator.from_theta_polys([P(1, 1), P(2, 0, 1)])
    b = ThetaOperator.from_theta_polys([P(0, 1), P(-1)])
    y = PowerSeries([Fraction(k * k - 3, 2) for k in range(12)], 11)
    lhs = apply_to_series(op_mul(a, b), y)
    rhs = apply_to_series(a, apply_to_series(b, y))
    assert lhs == rhs


def test_legendre_symbol():
    sym = riemann_symbol(LEGENDRE)
    want = {
        SingularPoint(0): (Fraction(0), Fraction(0)),
        SingularPoint(Fraction(1, 16)): (Fraction(0), Fraction(0)),
        INFINITY: halves(1, 1),
    }
    assert sym.same_table(want)
    assert fuchs_defect(LEGENDRE) == -2


def test_exponents_at_infinity_are_negated_top_roots():
    # P_r = -16 (theta + 1/2)^2 has the double root -1/2
    assert exponents_at(LEGENDRE, INFINITY) == halves(1, 1)


def test_singular_points_always_include_zero_and_infinity():
    pts = singular_points(LEGENDRE)
    assert SingularPoint(0) in pts and INFINITY in pts
    assert SingularPoint(Fraction(1, 16)) in pts


def test_top_profile_vanishes_at_printed_points():
    ell = top_profile(CATALOG[33].operator)
    assert ell(Fraction(1)) == 0 and ell(Fraction(2)) == 0
    assert ell(Fraction(3)) != 0


def test_quadratic_points_come_in_conjugate_pairs():
    sym = riemann_symbol(CATALOG[266].operator)
    quad = [p for p in sym.points() if isinstance(p.value, QuadraticNumber)]
    assert len(quad) == 2
    assert quad[0].conjugate() == quad[1]
    assert sym.exponents(quad[0]) == sym.exponents(quad[1])


def test_symbol_format_is_aligned():
    text = riemann_symbol(LEGENDRE).format()
    lines = text.splitlines()
    assert len(lines) == 4  # header, rule, two exponent rows
    assert len({len(l) for l in (lines[0], lines[2], lines[3])}) == 1


def test_fuchs_defect_on_all_catalog_operators():
    for rec in CATALOG.values():
        n = rec.operator.order
        assert fuchs_defect(rec.operator) == -n * (n - 1)


@given(st.integers(min_value=-4, max_value=4).filter(bool))
@settings(max_examples=8, deadline=None)
def test_scaling_preserves_fuchs_defect(c):
    op = ThetaOperator([p * Fraction(c) for p in LEGENDRE.theta_coeffs])
    assert fuchs_defect(op) == -2


def test_singular_point_json():
    assert SingularPoint.from_json("oo") == INFINITY
    p = SingularPoint(QuadraticNumber(Fraction(-1, 4), Fraction(1, 4), -3))
    assert SingularPoint.from_json(p.to_json()) == p
