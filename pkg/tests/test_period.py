"""Conifold period expansion over the vanishing tetrahedron."""

import json
from fractions import Fraction

import pytest

from picardfuchs import TetraForm, ThetaOperator, conifold_expand, verify_annihilation
from picardfuchs.arith import Polynomial, QuadraticNumber
from picardfuchs.catalog_data import TETRA_DEMO
from picardfuchs.errors import VanishingConstantTerm
from picardfuchs.period import simplex_monomial_integral
from picardfuchs.transform import translate_to_origin
from picardfuchs import CATALOG


def test_simplex_integral_base_case():
    assert simplex_monomial_integral(0, 0, 0) == 1


def test_simplex_integral_symmetry():
    for a, b, c in ((1, 2, 3), (0, 4, 1), (2, 2, 5)):
        v = simplex_monomial_integral(a, b, c)
        assert v == simplex_monomial_integral(b, c, a)
        assert v == simplex_monomial_integral(c, a, b)
        assert v == simplex_monomial_integral(b, a, c)


def test_simplex_integral_recurrence_spot():
    # raising one exponent multiplies by (2a+1)/(2(a+b+c+2))
    a, b, c = 2, 1, 3
    lhs = simplex_monomial_integral(a + 1, b, c)
    rhs = simplex_monomial_integral(a, b, c) * Fraction(2 * a + 1, 2 * (a + b + c + 2))
    assert lhs == rhs


def test_constant_form_expands_to_one():
    ps = conifold_expand(TetraForm.one(12))
    assert ps.coeffs == (Fraction(1),) + (Fraction(0),) * 12
    assert ps.unit == 1 and ps.conditions == ()


def test_vanishing_constant_term_rejected():
    with pytest.raises(VanishingConstantTerm):
        conifold_expand(TetraForm({(1, 0, 0, 0): 1}, 5))


def test_square_scaling_twists_the_series():
    f = TetraForm.from_planes(TETRA_DEMO["planes"], truncation=8)
    base = conifold_expand(f)
    scaled = conifold_expand(f.scaled(9))
    assert scaled.coeffs == tuple(c / 3 for c in base.coeffs)


def test_nonsquare_leading_value_records_the_unit():
    f = TetraForm.from_planes(TETRA_DEMO["planes"], scale=2, truncation=6)
    ps = conifold_expand(f)
    assert "NonSquareLeadingValue" in ps.conditions
    unit_sq = ps.unit * ps.unit
    from picardfuchs.arith import collapse

    assert collapse(unit_sq) == Fraction(1, 2)


def test_truncation_is_monotone():
    f = TetraForm.from_planes(TETRA_DEMO["planes"], truncation=14)
    long = conifold_expand(f)
    short = conifold_expand(f.with_truncation(7))
    assert long.coeffs[:8] == short.coeffs


def test_tetra_form_json_roundtrip():
    f = TetraForm.from_planes(TETRA_DEMO["planes"], truncation=9)
    back = TetraForm.from_json(json.loads(json.dumps(f.to_json())))
    assert back.terms == f.terms and back.truncation == f.truncation


def test_from_planes_multiplies_out():
    planes = ((1, 1, 0, 0, 0), (1, 0, 1, 0, 0))
    f = TetraForm.from_planes(planes, truncation=5)
    # (1+x)(1+y) = 1 + x + y + xy
    assert f.terms == {
        (0, 0, 0, 0): 1,
        (1, 0, 0, 0): 1,
        (0, 1, 0, 0): 1,
        (1, 1, 0, 0): 1,
    }
    assert f.evaluate(2, 3, 7, 11) == 12


def test_catalog_operator_annihilates_demo_series():
    # moderate truncation here; the acceptance run uses the full 40 terms
    f = TetraForm.from_planes(TETRA_DEMO["planes"], truncation=16)
    ps = conifold_expand(f)
    op = translate_to_origin(
        CATALOG[TETRA_DEMO["arrangement"]].operator, TETRA_DEMO["base_point"]
    )
    assert verify_annihilation(op, ps) == ps.truncation + 1 - op.r


def test_wrong_operator_fails_fast():
    f = TetraForm.from_planes(TETRA_DEMO["planes"], truncation=10)
    ps = conifold_expand(f)
    wrong = CATALOG[4].operator
    assert verify_annihilation(wrong, ps) < 4
