import io
import json
import subprocess
import sys

import pytest

from xmodlie import catalog
from xmodlie.cli import run
from xmodlie.modelio import ModelError, crossed_to_json, loads_model, parse_model


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def dump(name):
    return crossed_to_json(catalog.builtin(name).xmod)


def test_validate_catalog_entry():
    code, out, _ = call("validate", "catalog:XM_ID_SL2")
    assert code == 0
    doc = json.loads(out)
    assert doc["ok"] and doc["results"]["crossed_violations"] == []
    assert doc["command"] == "validate" and doc["field"] == "Q"


def test_exact_seq_ab1():
    code, out, _ = call("exact-seq", "catalog:XM_AB1")
    assert code == 0
    res = json.loads(out)["results"]
    assert [o["dim"] for o in res["objects"]] == [1, 2, 1, 0]
    assert res["defects"][1:3] == [0, 0]


def test_mutated_bracket_names_jacobi(tmp_path):
    d = dump("XM_ID_SL2")
    # [e, f] = h + e: the Jacobi sum on (h, e, f) becomes 2e
    d["L0"]["brackets"][2]["value"][1] = "1"
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(d))
    code, out, _ = call("validate", str(p))
    assert code == 1
    assert any("jacobi" in v for v in json.loads(out)["results"]["crossed_violations"])
    code, out, _ = call("centre", str(p))
    assert code == 1 and "validate" in json.loads(out)["results"]


@pytest.mark.parametrize("name", catalog.names())
def test_roundtrip_through_json(name, field):
    X = catalog.builtin(name, field).xmod
    assert parse_model(crossed_to_json(X)).xmod == X


def test_output_is_deterministic():
    a = call("report", "catalog:XM_HEIS")
    b = call("report", "catalog:XM_HEIS")
    assert a == b and a[0] == 0


def test_text_mode():
    code, out, _ = call("homotopy", "catalog:XM_HEIS", "--text")
    assert code == 0
    assert not out.lstrip().startswith("{")
    assert "pi0" in out


@pytest.mark.parametrize("cmd", ["homotopy", "centre", "quotient", "cohomology", "six-term", "cat2"])
def test_analyses_succeed(cmd):
    assert call(cmd, "catalog:XM_IDEAL_B2")[0] == 0


def test_cohomology_degree_flag():
    code, out, _ = call("cohomology", "catalog:XM_OBSTRUCTED", "--deg", "2")
    assert code == 0 and "3" in out


def test_guin_reports_failure_with_exit_1():
    code, out, _ = call("guin", "catalog:XM_AB1")
    assert code == 1
    assert json.loads(out)["results"]["checks"]["pi0Z_into_H1_injective"] is False
    assert call("guin", "catalog:XM_HEIS")[0] == 0


def test_field_override():
    code, out, _ = call("validate", "catalog:XM_HEIS", "--field", "Fp:5")
    assert code == 0 and json.loads(out)["field"] == "Fp:5"
    code, _, err = call("validate", "catalog:XM_HEIS", "--field", "Fp:2")
    assert code == 2 and "--field" in err


def test_catalog_commands():
    code, out, _ = call("catalog", "list")
    assert code == 0 and set(json.loads(out)) == set(catalog.names())
    assert call("catalog", "dump", "XM_NOPE")[0] == 2


@pytest.mark.parametrize("text,path", [
    ("{", "line 1 column 2"),
    ('{"L0": {"dim": 1}, "L1": {"dim": 1}, "boundary": [["0"]], "action": [[["0"]]], "extra": 1}', "$.extra"),
    ('{"L0": {"dim": 1}, "L1": {"dim": 1}, "boundary": [["0", "1"]], "action": [[["0"]]]}', "$.boundary[0]"),
    ('{"L0": {"dim": 1}, "boundary": []}', "$.L1"),
    ('{"field": "Fp:2", "L0": {"dim": 1}}', "$.field"),
    ('{"L0": {"dim": 1}, "L1": {"dim": 1}, "boundary": [["0"]]}', "$.action"),
])
def test_input_errors_carry_paths(tmp_path, text, path):
    with pytest.raises(ModelError) as e:
        loads_model(text)
    assert path in str(e.value)
    p = tmp_path / "m.json"
    p.write_text(text)
    code, _, err = call("validate", str(p))
    assert code == 2 and path in err


def test_missing_file_and_unknown_entry():
    assert call("validate", "/nonexistent/model.json")[0] == 2
    assert call("validate", "catalog:XM_NOPE")[0] == 2


def test_stdin_pipeline():
    model = json.dumps(dump("XM_CENTRAL_H3"))
    r = subprocess.run([sys.executable, "-m", "xmodlie", "six-term", "-"], input=model,
                       capture_output=True, text=True)
    assert r.returncode == 0
    assert json.loads(r.stdout)["results"]["exact"] is True
