import json

import jsonschema
import pytest

from mobius_centers.algebra import ELEMENT_SCHEMA
from mobius_centers.centers import CONJECTURE_REPORT_SCHEMA
from mobius_centers.cli import main
from mobius_centers.quotients import CLASS_REPORT_SCHEMA


def run(capsys, *argv):
    status = main(list(argv))
    captured = capsys.readouterr()
    return status, captured.out, captured.err


def test_dim_text(capsys):
    status, out, _ = run(capsys, "dim", "--algebra", "nilcoxeter", "-n", "3", "--format", "text")
    assert status == 0
    lines = out.splitlines()
    assert lines[0].split() == ["formula", "3"]
    assert lines[1].split() == ["twisted-quotient", "3"]
    assert lines[2].split() == ["commutant", "3"]
    assert lines[3].split() == ["agree", "yes"]


def test_dim_json_group_algebra(capsys):
    status, out, _ = run(capsys, "dim", "--algebra", "group", "-n", "4", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert payload["twisted_quotient_rank"] == 5
    assert payload["commutant_rank"] == 5
    assert not payload["formula_applies"]
    assert payload["agree"]


def test_dim_custom_params(capsys):
    status, out, _ = run(capsys, "dim", "--algebra", "1,0", "-n", "3", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    assert payload["algebra"] == "0-hecke"
    assert payload["agree"]


def test_dim_modular_precheck(capsys):
    status, out, _ = run(
        capsys, "dim", "--algebra", "nilcoxeter", "-n", "4",
        "--format", "json", "--modular-precheck", "on",
    )
    assert status == 0
    payload = json.loads(out)
    pre = payload["modular_precheck"]
    assert pre["calibrated"]
    assert pre["twisted_span_rank_mod_p"] == 24 - payload["twisted_quotient_rank"]


def test_classes_json_schema(capsys):
    status, out, _ = run(capsys, "classes", "--algebra", "0-hecke", "-n", "3", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    jsonschema.validate(payload, CLASS_REPORT_SCHEMA)
    sizes = sorted(len(c["members"]) for c in payload["classes"])
    assert sizes == [1, 1, 4]
    assert payload["zero_class"] == []


def test_classes_csv(capsys):
    status, out, _ = run(capsys, "classes", "--algebra", "nilcoxeter", "-n", "3", "--format", "csv")
    assert status == 0
    lines = out.splitlines()
    assert lines[0] == "representative,size,cycle_type,length,members"
    assert lines[1] == "e,1,2.1,0,e"
    assert lines[-1].startswith("zero,2")


def test_basis_json(capsys):
    status, out, _ = run(capsys, "basis", "--algebra", "nilcoxeter", "-n", "3", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    for entry in payload["elements"]:
        jsonschema.validate(entry["element"], ELEMENT_SCHEMA)
    words = [
        sorted(tuple(t["word"]) for t in entry["element"]["terms"])
        for entry in payload["elements"]
    ]
    assert [(1, 2), (2, 1)] in words


def test_table_text(capsys):
    status, out, _ = run(capsys, "table", "--algebra", "nilcoxeter", "-n", "3", "--format", "text")
    assert status == 0
    assert "z[e]" in out


def test_verify_all_n1(capsys):
    status, out, _ = run(capsys, "verify", "--suite", "all", "-n", "1", "--algebra", "nilcoxeter")
    assert status == 0
    assert out.strip().endswith("passed")


@pytest.mark.parametrize("suite", ["relations", "frobenius", "duality", "census"])
def test_verify_suites_pass_nc3(capsys, suite):
    status, out, _ = run(
        capsys, "verify", "--suite", suite, "-n", "3", "--algebra", "nilcoxeter",
        "--format", "json",
    )
    assert status == 0
    payload = json.loads(out)
    assert payload["passed"]
    assert payload["checks"]


def test_verify_census_rejected_for_hecke(capsys):
    status, _, err = run(capsys, "verify", "--suite", "census", "-n", "3", "--algebra", "0-hecke")
    assert status == 2
    assert "census" in err


def test_basis_rejected_for_group(capsys):
    status, _, err = run(capsys, "basis", "--algebra", "group", "-n", "3")
    assert status == 2
    assert "nilcoxeter and 0-hecke" in err


def test_conjecture_json_schema(capsys):
    status, out, _ = run(capsys, "conjecture", "-n", "2", "--format", "json")
    assert status == 0
    payload = json.loads(out)
    jsonschema.validate(payload, CONJECTURE_REPORT_SCHEMA)
    assert payload["unique_complement_per_crossing_number"] is True


def test_conjecture_rejects_other_algebras(capsys):
    status, _, err = run(capsys, "conjecture", "--algebra", "nilcoxeter", "-n", "2")
    assert status == 2
    assert "0-hecke" in err


def test_unknown_algebra_is_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main(["dim", "--algebra", "hecke", "-n", "3"])
    assert excinfo.value.code == 2


def test_n_out_of_cap(capsys):
    status, _, err = run(capsys, "dim", "--algebra", "nilcoxeter", "-n", "13")
    assert status == 2
    assert "1..12" in err


def test_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    status, out, _ = run(
        capsys, "classes", "--algebra", "nilcoxeter", "-n", "3",
        "--format", "json", "--output", str(target),
    )
    assert status == 0
    assert out == ""
    payload = json.loads(target.read_text(encoding="utf-8"))
    jsonschema.validate(payload, CLASS_REPORT_SCHEMA)
