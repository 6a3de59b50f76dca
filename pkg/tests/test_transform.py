"""Exponent shifts, coordinate changes, power pullbacks, coupling data."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from picardfuchs import (
    CATALOG,
    DERIVED_OPERATORS,
    INFINITY,
    MobiusMap,
    SingularPoint,
    ThetaOperator,
    classify_point,
    descend_quadratic,
    mobius,
    pullback_power,
    riemann_symbol,
    shift_exponents,
    yukawa,
)
from picardfuchs.arith import Polynomial
from picardfuchs.errors import NotEven
from picardfuchs.transform import descend_power, is_even, negate_variable, translate_to_origin


def P(*cs):
    return Polynomial([Fraction(c) for c in cs])


LEGENDRE = ThetaOperator.from_theta_polys([P(0, 0, 1), P(-4, -16, -16)])


def _norm_eq(a, b):
    return a.normalized() == b.normalized()


# ---------------------------------------------------------------------------
# mobius maps


def test_mobius_map_point_action():
    m = MobiusMap(0, 1, 1, -1)  # t = 1/(s-1)
    assert m(SingularPoint(1)) == INFINITY
    assert m(INFINITY) == SingularPoint(0)
    assert m(SingularPoint(2)) == SingularPoint(1)
    assert m.compose(m.inverse()) == MobiusMap.identity()


def test_mobius_rejects_singular_matrix():
    with pytest.raises(ValueError):
        MobiusMap(1, 2, 2, 4)


small = st.fractions(min_value=-3, max_value=3, max_denominator=3)


@given(small, small, small, small)
@settings(max_examples=25, deadline=None)
def test_mobius_inverse_roundtrip(a, b, c, d):
    if a * d - b * c == 0:
        return
    m = MobiusMap(a, b, c, d)
    assert _norm_eq(mobius(mobius(LEGENDRE, m), m.inverse()), LEGENDRE)


def test_mobius_roundtrip_on_catalog_operator():
    m = MobiusMap(2, -1, 1, 3)
    op = CATALOG[33].operator
    assert _norm_eq(mobius(mobius(op, m), m.inverse()), op)


def test_negation_is_an_involution():
    op = CATALOG[35].operator
    assert negate_variable(negate_variable(op)) == op


# ---------------------------------------------------------------------------
# shifts


def test_shift_moves_the_symbol():
    op = CATALOG[33].operator
    eps = {Fraction(1): Fraction(1, 3), Fraction(2): Fraction(-1, 5)}
    shifted = shift_exponents(op, eps)
    base = riemann_symbol(op).table()
    want = {}
    for p, exps in base.items():
        if p.is_infinite:
            delta = -sum(eps.values())
        else:
            delta = eps.get(p.value, Fraction(0))
        want[p] = tuple(e + delta for e in exps)
    assert riemann_symbol(shifted).same_table(want)


def test_shift_at_new_point_creates_a_singularity():
    # t = 1 is regular for Legendre (exponents 0, 1); the shift makes it genuine
    shifted = shift_exponents(LEGENDRE, {Fraction(1): Fraction(1, 2)})
    table = riemann_symbol(shifted).table()
    assert SingularPoint(1) in table
    assert table[SingularPoint(1)] == (Fraction(1, 2), Fraction(3, 2))


def test_shifts_compose_and_cancel():
    op = CATALOG[97].operator
    there = shift_exponents(op, {Fraction(0): Fraction(1, 2)})
    back = shift_exponents(there, {Fraction(0): Fraction(-1, 2)})
    assert _norm_eq(back, op)


# ---------------------------------------------------------------------------
# power pullback and descent


def test_pullback_multiplies_exponents_at_zero_and_infinity():
    up = pullback_power(LEGENDRE, 2)
    table = riemann_symbol(up).table()
    assert table[INFINITY] == (Fraction(1), Fraction(1))
    # the finite singular value acquires both square roots
    assert SingularPoint(Fraction(1, 4)) in table
    assert SingularPoint(Fraction(-1, 4)) in table


def test_descend_inverts_pullback():
    for n in (2, 3):
        up = pullback_power(LEGENDRE, n)
        assert _norm_eq(descend_power(up, n), LEGENDRE)


def test_pullback_restores_descended_operator():
    # inverse identity on an even operator produced by translation
    op = translate_to_origin(CATALOG[98].operator, Fraction(1, 2))
    assert is_even(op)
    down = descend_quadratic(op)
    assert _norm_eq(pullback_power(down, 2), op)


def test_descend_rejects_odd_operator():
    assert not is_even(LEGENDRE)
    with pytest.raises(NotEven):
        descend_quadratic(LEGENDRE)


def test_labels_survive_mobius():
    op = CATALOG[33].operator
    m = MobiusMap.scaling(Fraction(1, 2))  # t = s/2, so s = 2t
    moved = mobius(op, m)
    for point in riemann_symbol(op).points():
        if point.is_infinite:
            image = INFINITY
        else:
            image = SingularPoint(2 * point.value)
        assert classify_point(moved, image) is classify_point(op, point)


def test_labels_survive_shift():
    op = CATALOG[33].operator
    shifted = shift_exponents(op, {Fraction(0): Fraction(1, 2)})
    # K at 0 stays K even though its exponents moved off (0,0,1,1)
    assert str(classify_point(shifted, SingularPoint(0))) == "K"
    assert str(classify_point(shifted, SingularPoint(1))) == "C"


# ---------------------------------------------------------------------------
# coupling normal form


def test_yukawa_of_pure_fourth_derivative_is_trivial():
    # theta falling factorial is t^4 (d/dt)^4, whose subleading ratio vanishes
    op = ThetaOperator.from_theta_polys([P(0, 1) * P(-1, 1) * P(-2, 1) * P(-3, 1)])
    assert yukawa(op).factors == ()


def test_yukawa_of_theta_power_has_the_residue_pole():
    # theta^4 = t^4 D^4 + 6 t^3 D^3 + ..., so a_1 = 6/t and Y = t^(-3)
    op = ThetaOperator.from_theta_polys([P(0, 0, 0, 0, 1)])
    assert yukawa(op).factors == ((Fraction(0), Fraction(-3)),)


def test_yukawa_zero_flags_apparent_point():
    data = yukawa(CATALOG[258].operator)
    assert Fraction(1) in data.zeros()


def test_yukawa_exponents_on_k3_fibre_operator():
    data = yukawa(CATALOG[33].operator)
    assert data.exponent(Fraction(1)) < 0
    assert data.exponent(Fraction(7)) == 0


def test_derived_operator_symbols_are_three_point():
    for name in ("descent-98", "descent-35"):
        sym = riemann_symbol(DERIVED_OPERATORS[name].operator)
        assert len(sym.points()) == 3
