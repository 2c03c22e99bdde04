import io
import json
import subprocess
import sys

import pytest

from oraag import catalog, cli
from oraag.enumeration import VerificationOutcome
from oraag.formats import dumps_json, dumps_text


def run(capsys, *argv):
    code = cli.run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


@pytest.fixture
def mennicke_file(tmp_path):
    p = tmp_path / "mennicke.txt"
    p.write_text(dumps_text(catalog.mennicke()))
    return str(p)


@pytest.fixture
def invalid_file(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text(json.dumps({"vertices": [{"id": "s", "kind": "special"}, {"id": "o", "kind": "ordinary"}], "arcs": [["s", "o"]]}))
    return str(p)


def test_validate(capsys, mennicke_file):
    code, out, _ = run(capsys, "validate", mennicke_file, "--json")
    data = json.loads(out)
    assert code == 0 and data["valid"]
    assert {e["type"] for e in data["edges"]} == {"special"}


def test_invalid_exit_codes(capsys, invalid_file):
    code, out, _ = run(capsys, "validate", invalid_file)
    assert code == 1 and "SpecialOrigin" in out
    code, _, _ = run(capsys, "validate", invalid_file, "--strict")
    assert code == 3


def test_classify_invalid_reports_unknowns(capsys, invalid_file):
    code, out, _ = run(capsys, "classify", invalid_file, "--json")
    data = json.loads(out)
    assert code == 0
    assert data["verdicts"]["valid"]["verdict"] == "no"
    assert data["verdicts"]["kummerian"]["verdict"] == "unknown"
    assert run(capsys, "classify", invalid_file, "--strict")[0] == 3


def test_classify_lambda_s(capsys):
    code, out, _ = run(capsys, "classify", "catalog:lambda_s", "--json")
    v = json.loads(out)["verdicts"]
    assert code == 0
    assert v["elementary_type"]["verdict"] == "no" and v["kummerian"]["verdict"] == "yes"


def test_decompose(capsys):
    code, out, _ = run(capsys, "decompose", "catalog:iterated_cone", "--json")
    assert code == 0 and json.loads(out)["tree"]["cone"]["tip"] == "v1"
    code, out, _ = run(capsys, "decompose", "catalog:square")
    assert code == 0 and "InducedC4" in out


def test_cliques(capsys):
    code, out, _ = run(capsys, "cliques", "catalog:fan5_special", "--json")
    data = json.loads(out)
    assert code == 0 and data["chordal"] and len(data["cliques"]) == 3
    assert data["amalgam"]["amalgam"]["over"] == ["v1", "v4"]
    code, out, _ = run(capsys, "cliques", "catalog:square")
    assert "chordless cycle" in out


def test_cohomology(capsys):
    code, out, _ = run(capsys, "cohomology", "catalog:fan5", "--json", "--dual", "4")
    data = json.loads(out)
    assert code == 0 and data["hilbert"] == [1, 5, 7, 3]
    assert len(data["dual"]["coefficients"]) == 5


def test_present_formats(capsys):
    code, out, _ = run(capsys, "present", "catalog:mennicke", "--format", "fpgroup")
    assert code == 0 and "v2*v1*v2^-1*v1^-4" in out
    code, out, _ = run(capsys, "present", "catalog:mennicke", "--lambda", "1+l^2")
    data = json.loads(out)
    assert data["orientation"]["c"] == "10"
    assert data["relators"][0]["conjugate"]["exponent"] == "10"


def test_abelianize_mennicke(capsys):
    code, out, _ = run(capsys, "abelianize", "catalog:mennicke", "--json", "-l", "3", "--lambda", "4")
    data = json.loads(out)
    assert code == 0 and data["agree"]
    assert data["abelianization"]["free_rank"] == 0 and data["abelianization"]["torsion"] == [3, 3, 3]


def test_bad_orientation_is_usage_error(capsys):
    code, _, err = run(capsys, "abelianize", "catalog:mennicke", "--lambda", "5")
    assert code == 1 and "not 1 mod 3" in err


def test_unknown_catalog_name(capsys):
    code, _, err = run(capsys, "classify", "catalog:nope")
    assert code == 1 and "unknown catalog graph" in err


def test_missing_file_and_bad_args(capsys, tmp_path):
    assert run(capsys, "validate", str(tmp_path / "missing.txt"))[0] == 1
    assert run(capsys, "frobnicate")[0] == 1


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "-n", "2", "--count-only", "--json")
    assert code == 0 and json.loads(out)["count"] == 9
    code, out, _ = run(capsys, "enumerate", "-n", "2", "--iso")
    assert out.startswith("count: 6")


def test_verify_ok_and_counterexample(capsys, monkeypatch):
    code, out, _ = run(capsys, "verify", "--suite", "chordal", "--max-vertices", "3")
    assert code == 0 and "failures 0" in out

    def broken(n, workers=1):
        o = VerificationOutcome("chordal", n)
        o.merge(1, [{"graph": {}}])
        return o

    monkeypatch.setitem(cli.SUITES, "chordal", broken)
    assert run(capsys, "verify", "--suite", "chordal", "--max-vertices", "3")[0] == 2


def test_json_is_byte_identical(capsys):
    a = run(capsys, "classify", "catalog:fan5_special", "--json")[1]
    b = run(capsys, "classify", "catalog:fan5_special", "--json")[1]
    assert a == b


def test_stdin(capsys, monkeypatch):
    monkeypatch.setattr(sys, "stdin", io.StringIO(dumps_json(catalog.lambda_s())))
    code, out, _ = run(capsys, "decompose", "-")
    assert code == 0 and "InducedLambdaS" in out


def test_console_script_module():
    proc = subprocess.run(
        [sys.executable, "-m", "oraag", "cohomology", "catalog:iterated_cone"], capture_output=True, text=True
    )
    assert proc.returncode == 0 and "[1, 4, 6, 4, 1]" in proc.stdout
