"""End-to-end checks of the pf command line."""

import io
import json
from fractions import Fraction
from math import comb

import pytest

from picardfuchs import CATALOG, TetraForm
from picardfuchs.catalog_data import TETRA_DEMO
from picardfuchs.cli import main


def _op_file(tmp_path, aid, name="op.json"):
    path = tmp_path / name
    path.write_text(json.dumps(CATALOG[aid].operator.to_json()))
    return str(path)


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_symbol_text(tmp_path, capsys):
    code, out, _ = _run(capsys, ["symbol", _op_file(tmp_path, 4)])
    lines = out.splitlines()
    assert code == 0
    assert len({len(l) for l in lines}) == 1
    assert any("1/2" in l for l in lines)


def test_symbol_json_lists_points(tmp_path, capsys):
    code, out, _ = _run(capsys, ["symbol", "--json", _op_file(tmp_path, 243)])
    assert code == 0
    doc = json.loads(out)
    assert {col["point"] for col in doc} == {"0", "1", "3/2", "2", "oo"}
    assert all(col["genuine"] for col in doc)


def test_symbol_reads_stdin(monkeypatch, capsys):
    payload = json.dumps(CATALOG[4].operator.to_json())
    monkeypatch.setattr("sys.stdin", io.StringIO(payload))
    code, out, _ = _run(capsys, ["symbol", "-"])
    assert code == 0 and out


def test_classify_marks_apparent_point(tmp_path, capsys):
    code, out, _ = _run(capsys, ["classify", _op_file(tmp_path, 250)])
    assert code == 0
    row = next(l for l in out.splitlines() if l.startswith("-1/2"))
    assert "Apparent" in row and "0,1,3,4" in row


def test_transform_mobius_reaches_catalog_twin(tmp_path, capsys):
    code, out, _ = _run(
        capsys,
        ["transform", _op_file(tmp_path, 33), "--mobius=-1,0,0,1", "--json"],
    )
    assert code == 0
    assert json.loads(out) == CATALOG[70].operator.to_json()


def test_transform_out_writes_file(tmp_path, capsys):
    target = tmp_path / "doubled.json"
    code, out, _ = _run(
        capsys,
        ["transform", _op_file(tmp_path, 4), "--pullback", "2", "--out", str(target)],
    )
    assert code == 0 and out == ""
    json.loads(target.read_text())


def test_transform_yukawa(tmp_path, capsys):
    code, out, _ = _run(capsys, ["transform", _op_file(tmp_path, 33), "--yukawa", "--json"])
    assert code == 0
    doc = json.loads(out)
    assert {f["point"]: f["exponent"] for f in doc} == {
        "0": "-2",
        "1": "-2",
        "2": "-1",
    }


def test_period_expands_demo_form(tmp_path, capsys):
    form = TetraForm.from_planes(TETRA_DEMO["planes"], truncation=6)
    path = tmp_path / "form.json"
    path.write_text(json.dumps(form.to_json()))
    code, out, _ = _run(capsys, ["period", "--poly", str(path), "--terms", "4"])
    assert code == 0
    doc = json.loads(out)
    assert len(doc["A"]) == 5 and doc["A"][0] == "1"


def test_guess_recovers_operator(tmp_path, capsys):
    series = [str(Fraction(comb(2 * n, n)) ** 2) for n in range(30)]
    path = tmp_path / "series.json"
    path.write_text(json.dumps({"A": series}))
    code, out, _ = _run(
        capsys, ["guess", "--series", str(path), "--max-order", "2", "--max-degree", "1", "--json"]
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["form"] == "theta" and len(doc["coeffs"]) == 2


def test_guess_empty_box_exits_one(tmp_path, capsys):
    path = tmp_path / "primes.json"
    path.write_text(json.dumps([2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97, 101, 103, 107, 109, 113]))
    code, out, err = _run(
        capsys, ["guess", "--series", str(path), "--max-order", "2", "--max-degree", "2"]
    )
    assert code == 1 and out == "" and "no annihilating operator" in err


def test_qexp_text_rows(capsys):
    code, out, _ = _run(capsys, ["qexp", "--form", "f_32", "--terms", "30"])
    assert code == 0
    assert "5\t-2" in out.splitlines()


def test_qexp_table_only_form_is_usage_error(capsys):
    code, _, err = _run(capsys, ["qexp", "--form", "32/1"])
    assert code == 2 and "eta" in err


def test_count_recorded_fibre(capsys):
    code, out, _ = _run(capsys, ["count", "--arrangement", "69", "--prime", "5"])
    assert code == 0 and out.strip() == "153"


def test_count_fibre_rejects_parameter(capsys):
    code, _, err = _run(
        capsys, ["count", "--arrangement", "69", "--parameter", "1", "--prime", "5"]
    )
    assert code == 2 and "takes no --parameter" in err


def test_count_needs_exactly_one_source(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["count", "--prime", "5"])
    assert exc.value.code == 2


def test_count_octic_file(tmp_path, capsys):
    planes = [[str(c(Fraction(0))) for c in plane] for plane in CATALOG[250].octic]
    path = tmp_path / "octic.json"
    path.write_text(json.dumps({"planes": planes}))
    code, out, _ = _run(capsys, ["count", "--octic", str(path), "--prime", "5", "--json"])
    assert code == 0
    assert json.loads(out)["count"] == 153


def test_malformed_json_is_usage_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text("{not json")
    code, _, err = _run(capsys, ["symbol", str(path)])
    assert code == 2 and err.startswith("pf: ")


def test_verify_forms(capsys):
    code, out, _ = _run(capsys, ["verify-forms"])
    assert code == 0
    assert out.splitlines()[-1] == "forms: PASS"
    assert "table data only" in out


def test_reproduce_chain(capsys):
    code, out, _ = _run(capsys, ["reproduce", "97to98"])
    assert code == 0 and "97to98" in out


def test_reproduce_unknown_chain(capsys):
    code, _, err = _run(capsys, ["reproduce", "nope"])
    assert code == 2 and "33to70" in err


def test_catalog_dump(capsys):
    code, out, _ = _run(capsys, ["catalog", "dump", "--indent", "0"])
    assert code == 0
    doc = json.loads(out)
    assert doc["version"] == 1 and len(doc["arrangements"]) == 25
