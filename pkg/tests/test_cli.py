import io
import json

import pytest

from archcat import fixtures as fx
from archcat.cli import run


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    status = run(list(argv), out=out, err=err)
    return status, out.getvalue(), err.getvalue()


def machine(*argv):
    status, out, _ = call(*argv, "--format", "machine")
    return status, json.loads(out)


@pytest.fixture
def files(write_json):
    return {
        "chain3": write_json("chain3.pre", fx.CHAIN3_PRE.to_dict()),
        "disc2": write_json("disc2.pre", fx.DISC2_PRE.to_dict()),
        "pair": write_json("pair.cat", fx.PAIR.to_dict()),
        "loop1": write_json("loop1.cat", fx.LOOP1.to_dict()),
        "trunc3": write_json("trunc3.sg", fx.TRUNC3.to_dict()),
        "neg": write_json("neg.sg", fx.NEG.to_dict()),
        "open": write_json("open.pre", {"elements": ["1", "2", "3"], "pairs": [["1", "2"], ["2", "3"]]}),
    }


def test_arch1_chain3_machine(files):
    status, report = machine("arch1", files["chain3"])
    assert status == 0
    assert report["result"]["witness"] == "m:1->3"
    assert report["command"] == "arch1"
    assert report["input_digest"].startswith("sha256:")


def test_arch2_chain3(files):
    status, out, _ = call("arch2", files["chain3"])
    assert status == 1
    assert "counterexample: m:1->2" in out


def test_verify_prop1_text():
    status, out, _ = call("verify", "prop1", "--size", "3")
    assert status == 0
    assert out.splitlines()[0] == "29/29 pass"


def test_global_format_flag_before_subcommand(files):
    status, out, _ = call("--format", "machine", "arch2", files["disc2"])
    assert status == 0
    assert json.loads(out)["result"]["holds"] is True


def test_validate(files, write_json):
    assert call("validate", files["pair"])[0] == 0
    assert call("validate", files["trunc3"])[0] == 0
    status, report = machine("validate", files["open"])
    assert status == 1
    assert {v["kind"] for v in report["result"]["violations"]} == {"reflexivity", "transitivity"}


def test_arrow(files):
    status, report = machine("arrow", files["pair"])
    assert status == 0
    assert len(report["result"]["objects"]) == 3
    assert len(report["result"]["squares"]) == 6


def test_unit_equiv_and_submorphism(files):
    status, report = machine("unit-equiv", files["loop1"], "-f", "id", "-g", "g")
    assert status == 0
    alpha, beta = report["result"]["witness"]
    assert alpha["name"].startswith("sq(id,g,")
    assert call("unit-equiv", files["chain3"], "-f", "m:1->2", "-g", "m:2->3")[0] == 1
    status, report = machine("submorphism", files["chain3"], "-f", "m:2->3", "-g", "m:1->3")
    assert status == 0 and report["result"]["witness"] == ["m:1->2", "m:3->3"]


def test_nv_and_bounded(files):
    status, report = machine("nv", files["loop1"], "-v", "g")
    assert status == 0 and report["result"]["members"] == ["id", "g"]
    assert call("bounded", files["chain3"])[0] == 0
    status, report = machine("bounded", files["disc2"], "-m", "m:1->1", "-m", "m:2->2")
    assert status == 1 and report["result"]["counterexample"] == "m:2->2"


def test_preorder_checks(files):
    assert call("preorder", files["open"], "validate")[0] == 1
    assert call("preorder", files["open"], "bounded")[0] == 2
    assert call("preorder", files["open"], "--close", "validate")[0] == 0
    status, report = machine("preorder", files["open"], "--close", "bounded")
    assert status == 0 and report["result"]["witness"] == ["1", "3"]
    assert call("preorder", files["disc2"], "discrete")[0] == 0
    assert call("preorder", files["chain3"], "arch1")[0] == 0
    assert call("preorder", files["chain3"], "arch2")[0] == 1
    _, report = machine("preorder", files["chain3"], "classes")
    assert report["result"]["classes"] == {"1": "1", "2": "2", "3": "3"}


def test_semigroup_checks(files):
    status, report = machine("semigroup", files["trunc3"], "unit")
    assert status == 0 and report["result"]["witness"] == "1"
    status, report = machine("semigroup", files["trunc3"], "bounded-multiples")
    assert status == 1 and report["result"]["counterexample"] == "1"
    assert call("semigroup", files["neg"], "bounded-multiples")[0] == 0
    assert call("semigroup", files["trunc3"], "--bound-in-E", "equiv")[0] == 0
    assert call("semigroup", files["trunc3"], "--monotone", "validate")[0] == 0
    _, report = machine("semigroup", files["trunc3"], "-x", "1", "multiples")
    assert report["result"]["members"] == ["1", "2"]
    _, report = machine("semigroup", files["neg"], "positives")
    assert report["result"]["positives"] == ["0"]


def test_enumerate():
    status, report = machine("enumerate", "preorders", "--size", "2")
    assert status == 0 and report["result"]["count"] == 4


def test_verify_lemma1():
    status, report = machine("verify", "lemma1", "--size", "2")
    assert status == 0
    assert report["result"]["checked"] == 28


def test_input_errors(tmp_path, files):
    bad = tmp_path / "bad.json"
    bad.write_text('{"objects": [}', encoding="utf-8")
    status, _, err = call("arch1", str(bad))
    assert status == 2 and "line 1 column" in err
    assert call("arch1", str(tmp_path / "missing.json"))[0] == 2
    assert call("arch1", files["trunc3"])[0] == 2
    assert call("semigroup", files["pair"], "unit")[0] == 2
    assert call("unit-equiv", files["pair"], "-f", "f", "-g", "nope")[0] == 2
    assert call("frobnicate")[0] == 2
    assert call("verify", "prop1", "--size", "9")[0] == 2


def test_invalid_category_is_input_error(write_json):
    doc = fx.PAIR.to_dict()
    doc["composition"] = doc["composition"][:-1]
    path = write_json("broken.cat", doc)
    assert call("arch1", path)[0] == 2
    assert call("validate", path)[0] == 1


def test_machine_output_round_trips(files):
    _, out, _ = call("arch1", files["chain3"], "--format", "machine")
    parsed = json.loads(out)
    assert json.loads(json.dumps(parsed)) == parsed


def strip_elapsed(text):
    doc = json.loads(text)
    doc.pop("elapsed_ms")
    return doc


def test_identical_inputs_identical_output(files, write_json):
    copy = write_json("copy.pre", fx.CHAIN3_PRE.to_dict())
    a = call("arch2", files["chain3"], "--format", "machine")[1]
    b = call("arch2", copy, "--format", "machine")[1]
    assert strip_elapsed(a) == strip_elapsed(b)
