import csv
import io
import json
from importlib import resources

import jsonschema
import pytest

from ternary_orbits import acceptance
from ternary_orbits.cli import main
from ternary_orbits.exact_linalg import Form, transform_matrix

SCHEMA = json.loads(resources.files("ternary_orbits").joinpath("schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    doc = json.loads(out)
    jsonschema.validate(doc, SCHEMA)
    return code, doc


def test_invariants_q17(capsys):
    code, doc = run_json(capsys, "invariants", "--form=289,-17,-1,0,0,0")
    assert code == 0
    assert doc["schema_version"] == "1"
    assert doc["invariants"]["N"] == 17 and doc["invariants"]["special"]
    assert doc["isotropic"] is True and doc["characters"] == {"17": 1}


def test_isotropy(capsys):
    code, doc = run_json(capsys, "isotropy", "--form=-27,1,-1,0,0,0", "--box", "10")
    assert code == 0 and doc["zero"] == [0, 1, -1] and doc["smith"] is None


def test_reduce_triple(capsys):
    code, doc = run_json(capsys, "reduce", "--form=0,-3,0,0,1,3", "--zero=1,0,0")
    assert code == 0
    assert doc["triple"] == {"a": 3, "b": 3, "c": 1, "d": 0}
    assert doc["label"] == {"kind": "general", "a": 3, "b": 3, "c_mod": 1}
    A = doc["transform"]
    assert transform_matrix(Form(0, -3, 0, 0, 1, 3), A) == ((0, 0, 3), (0, -3, 1), (3, 1, 0))


def test_reduce_special(capsys):
    code, doc = run_json(capsys, "reduce", "--form=289,-17,-1,0,0,0", "--zero=1,0,-17")
    assert code == 0 and doc["canonical"]["N"] == 17
    assert doc["label"]["kind"] == "special"
    ell = doc["canonical"]["ell"]
    assert transform_matrix(Form.diagonal(289, -17, -1), doc["transform"]) == ((0, 0, 17), (0, -17, 0), (17, 0, ell))


def test_orbits(capsys):
    code, doc = run_json(capsys, "orbits", "--form=-27,1,-1,0,0,0", "--y=0,2,0")
    assert code == 0 and doc["count"] == 3 and doc["stable"]


def test_orbits_unsaturated(capsys):
    code, doc = run_json(capsys, "orbits", "--form=289,-17,-1,0,0,0", "--max-height=40", "--schedule=1")
    assert code == 5 and not doc["stable"]


def test_verify(capsys):
    code, doc = run_json(capsys, "verify-theorem1", "--form=289,-17,-1,0,0,0")
    assert code == 0 and doc["verified"] and doc["total"] == 8


def test_verify_unimodular(capsys):
    code, doc = run_json(capsys, "verify-theorem1", "--form=1,-1,-1,0,0,0")
    assert code == 0 and doc["total"] == 1 and doc["expected_total"] == 1


def test_examples_exit_status(capsys, monkeypatch):
    monkeypatch.setattr(acceptance, "CRITERIA", [("1", "ok", lambda: (True, "")), ("2", "ok", lambda: (True, ""))])
    code, out, _ = run(capsys, "examples")
    assert code == 0 and out.count("[PASS]") == 2
    monkeypatch.setattr(acceptance, "CRITERIA", [("1", "bad", lambda: (False, "x"))])
    code, out, _ = run(capsys, "examples")
    assert code == 1 and "[FAIL] criterion 1" in out


def test_count_json(capsys):
    code, doc = run_json(capsys, "count", "--form=289,-17,-1,0,0,0", "--y=34,0,0", "--max-height=4000", "--h=2")
    assert code == 0 and len(doc["schedule"]) == 4
    assert doc["kappa"]["value"].startswith("0.00428897")


def test_count_csv(capsys):
    code, out, _ = run(capsys, "count", "--form=-27,1,-1,0,0,0", "--y=0,2,0", "--max-height=400", "--csv")
    assert code == 0
    rows = list(csv.DictReader(io.StringIO(out)))
    assert len(rows) == 12
    assert {r["label"] for r in rows} == {"(1,27,0)", "(3,3,1)", "(3,3,2)"}
    last = [r for r in rows if r["T"] == "400"]
    assert sum(int(r["count"]) for r in last) > 0


@pytest.mark.parametrize("argv,code", [
    (["invariants", "--form=1,2,3"], 2),
    (["invariants", "--form=a,b,c,d,e,f"], 2),
    (["reduce", "--form=0,-3,0,0,1,3", "--zero=1,0"], 2),
    (["invariants", "--form=2,2,2,0,0,0"], 3),
    (["verify-theorem1", "--form=2,-1,-1,0,0,0"], 3),
    (["verify-theorem1", "--form=-27,1,-1,0,0,0"], 3),
    (["reduce", "--form=0,-3,0,0,1,3", "--zero=0,1,0"], 4),
])
def test_exit_codes(capsys, argv, code):
    got, _, err = run(capsys, *argv)
    assert got == code
    assert json.loads(err)["exit_code"] == code
