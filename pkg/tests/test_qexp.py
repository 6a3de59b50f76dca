"""Eta products, the form registry, and double octic point counts."""

from fractions import Fraction

import pytest

from picardfuchs import CATALOG, count_double_octic, eta_product, verify_form_table
from picardfuchs.errors import EvenPrime
from picardfuchs.qexp import FORMS, EtaProductSpec, lookup_form

ETA_FORMS = ("f32", "16", "8", "6/1", "8/1")


def _fibre_planes(family, parameter):
    octic = CATALOG[family].octic
    return [tuple(c(Fraction(parameter)) for c in plane) for plane in octic]


def _expand(planes):
    terms = {(0, 0, 0, 0): Fraction(1)}
    for plane in planes:
        new = {}
        for mono, coef in terms.items():
            for axis, c in enumerate(plane):
                if c == 0:
                    continue
                key = tuple(mono[i] + (i == axis) for i in range(4))
                new[key] = new.get(key, Fraction(0)) + coef * c
        terms = new
    return terms


def test_eta_product_splits_multiplicatively():
    whole = EtaProductSpec(1, ((4, 2), (8, 2)))
    left = EtaProductSpec(1, ((4, 2),))
    right = EtaProductSpec(0, ((8, 2),))
    n = 40
    assert (
        eta_product(whole, n).coeffs
        == (eta_product(left, n) * eta_product(right, n)).coeffs
    )


def test_stated_coefficients():
    q = eta_product(lookup_form("f32").eta, 30)
    assert (q.coefficient(5), q.coefficient(29)) == (-2, -10)
    assert eta_product(lookup_form("6/1").eta, 18).coefficient(17) == -126


def test_lookup_aliases():
    rec = FORMS["f32"]
    assert lookup_form("f_32") is rec
    assert lookup_form("f_{32}") is rec
    with pytest.raises(KeyError):
        lookup_form("f99")


def test_every_eta_table_verifies():
    for name in ETA_FORMS:
        report = verify_form_table(name)
        assert report.passed, report.lines()


def test_table_only_forms_have_no_eta():
    for name in ("12/1", "32/1", "32/2", "h"):
        assert lookup_form(name).eta is None


def test_count_is_permutation_invariant():
    planes = _fibre_planes(250, 0)
    assert count_double_octic(planes, 5) == 153
    assert count_double_octic(list(reversed(planes)), 5) == 153


def test_count_square_scaling_invariant():
    planes = _fibre_planes(250, 0)
    scaled = [tuple(4 * c for c in planes[0])] + planes[1:]
    assert count_double_octic(scaled, 5) == 153
    # a non-residue twist genuinely changes the surface
    twisted = [tuple(2 * c for c in planes[0])] + planes[1:]
    assert count_double_octic(twisted, 5) != 153


def test_monomial_input_matches_planes():
    planes = _fibre_planes(250, 0)
    assert count_double_octic(_expand(planes), 7) == count_double_octic(planes, 7)


def test_even_prime_rejected():
    with pytest.raises(EvenPrime):
        count_double_octic(_fibre_planes(250, 0), 2)
