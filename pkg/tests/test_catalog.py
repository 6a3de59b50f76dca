"""The stored operator catalog, derived operators, and reduction chains."""

from fractions import Fraction

import json
import pytest

from picardfuchs import (
    CATALOG,
    CHAINS,
    DERIVED_OPERATORS,
    dump_catalog,
    load_catalog,
    reproduce_reduction,
    verify_catalog,
)

HALF = Fraction(1, 2)


def _table_by_str(rec):
    return {str(p): v for p, v in rec.symbol_table().items()}


def test_census():
    assert len(CATALOG) == 25
    assert len(DERIVED_OPERATORS) == 5
    assert len(CHAINS) == 11


def test_operator_orders():
    assert {rec.operator.order for rec in CATALOG.values()} == {2, 4}


def test_entry_4_symbol():
    assert _table_by_str(CATALOG[4]) == {
        "0": (0, 0),
        "1": (0, 0),
        "oo": (HALF, HALF),
    }


def test_entry_243_singular_points():
    assert sorted(_table_by_str(CATALOG[243])) == ["0", "1", "2", "3/2", "oo"]


def test_entry_198_exponents_at_infinity():
    tbl = _table_by_str(CATALOG[198])
    assert tbl["oo"] == (HALF, HALF, Fraction(5, 2), Fraction(5, 2))


def test_decorations_align_with_points():
    for rec in CATALOG.values():
        if rec.decorations is not None:
            assert len(rec.decorations) == len(rec.symbol_table())
        assert len(rec.labels) == len(rec.symbol_table())


def test_operator_266_identical_to_273():
    assert CATALOG[266].operator == CATALOG[273].operator


def test_packaged_json_matches_built_records():
    cat, der = load_catalog()
    assert sorted(cat) == sorted(CATALOG)
    assert sorted(der) == sorted(DERIVED_OPERATORS)
    for k, rec in CATALOG.items():
        assert cat[k].to_json() == rec.to_json()
    for k, rec in DERIVED_OPERATORS.items():
        assert der[k].to_json() == rec.to_json()


def test_dump_catalog_is_versioned_json():
    doc = json.loads(dump_catalog(indent=None))
    assert doc["version"] == 1
    assert len(doc["arrangements"]) == 25


def test_reduction_chain_reproduces():
    rep = reproduce_reduction("33to70")
    assert rep.ok
    assert rep.name == "33to70"
    assert rep.format()


def test_unknown_chain_lists_candidates():
    with pytest.raises(KeyError) as exc:
        reproduce_reduction("nonsense")
    assert "33to70" in str(exc.value)


def test_full_verification_passes():
    rep = verify_catalog(include_derived=True, include_chains=True)
    assert rep.ok
    lines = rep.format().splitlines()
    assert lines[-1] == "catalog: PASS"
    assert all(line.startswith("PASS") for line in lines[:-1])
