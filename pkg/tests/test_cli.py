import io
import json

import pytest

from algebroid.cli import run
from algebroid.errors import SchemaError
from algebroid.serialization import hopf_to_json, hopf_from_json, dumps, load
from _corpus import get


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture(scope="module")
def files(tmp_path_factory):
    d = tmp_path_factory.mktemp("docs")
    paths = {}
    for name in ("qc2", "lu-ut2-q", "sweedler-h4"):
        p = d / (name + ".json")
        code, _, _ = call("example", name, "--emit", str(p))
        assert code == 0
        paths[name] = str(p)
    return paths


def test_round_trip_byte_stable(files):
    text = open(files["lu-ut2-q"]).read()
    h = load(files["lu-ut2-q"])
    assert dumps(hopf_to_json(h)) == text


def test_schema_errors():
    with pytest.raises(SchemaError):
        hopf_from_json({"field": "Q"})
    doc = hopf_to_json(get("qc2"))
    doc["antipode"] = [["1"]]
    with pytest.raises(SchemaError):
        hopf_from_json(doc)


def test_qf_on_emitted_ut2(files):
    code, out, _ = call("qf", files["lu-ut2-q"])
    assert code == 0
    rep = json.loads(out)
    assert rep["leftQF"] is False and rep["rightQF"] is False


def test_maschke_qc2(files):
    code, out, _ = call("maschke", files["qc2"])
    rep = json.loads(out)["report"]
    assert code == 0 and rep["verdict"] is True
    assert all(c["verdict"] for c in rep["conditions"])


def test_negative_verdict_exit_zero(files):
    code, out, _ = call("maschke", files["sweedler-h4"])
    assert code == 0 and json.loads(out)["report"]["verdict"] is False


def test_check_corrupted(files, tmp_path):
    doc = json.load(open(files["qc2"]))
    doc["antipode"][0][0] = "2"
    p = tmp_path / "bad.json"
    p.write_text(json.dumps(doc))
    code, out, err = call("check", str(p))
    assert code == 2
    rep = json.loads(out)
    failed = [c for c in rep["report"]["axioms"]["checks"] if c["passed"] is False]
    assert failed and "witness" in failed[0]


def test_gated_commands_reject_bad_input(tmp_path):
    p = tmp_path / "x.json"
    p.write_text("{not json")
    for cmd in ("check", "integrals", "maschke", "dual-maschke", "frobenius", "qf"):
        assert call(cmd, str(p))[0] == 2


def test_undecided_exit_three(tmp_path):
    p = tmp_path / "m2.json"
    call("example", "lu-m2-q", "--emit", str(p))
    code, out, _ = call("frobenius", str(p), "--trials", "0")
    assert code == 3
    assert json.loads(out)["error"] == "undecided"


def test_text_format(files):
    code, out, _ = call("qf", files["lu-ut2-q"], "--format", "text")
    assert code == 0 and out.startswith("leftQF=false rightQF=false")
    code, out, _ = call("integrals", files["qc2"], "--format", "text")
    assert "L_in" in out


def test_unknown_example():
    assert call("example", "nope")[0] == 2


def test_check_passes(files):
    code, out, _ = call("check", files["sweedler-h4"])
    assert code == 0 and json.loads(out)["ok"]
