import json
import pathlib
import subprocess
import sys

import jsonschema
import pytest

from schubsplit.cli import run, table_word
from schubsplit.weyl import SignedPermutation, reduced_words

GOLDEN = pathlib.Path(__file__).parent / "golden"

TERM = {
    "type": "object",
    "properties": {
        "coeff": {"anyOf": [{"type": "integer"}, {"type": "string", "pattern": r"^-?\d+/2\^\d+$"}]},
        "partition": {"type": "string", "pattern": r"^\((\d+(,\d+)*)?\)$"},
        "partitions": {"type": "array", "items": {"type": "string"}},
        "type": {"enum": [0, 1, 2]},
    },
    "required": ["coeff"],
    "oneOf": [{"required": ["partition"]}, {"required": ["partitions"]}],
    "additionalProperties": False,
}
SCHEMA = {
    "type": "object",
    "properties": {
        "family": {"enum": ["A", "B", "C", "D"]},
        "perm": {"type": "string"},
        "k": {"type": "integer", "minimum": 0},
        "a": {"type": "array", "items": {"type": "integer"}},
        "b": {"type": "array", "items": {"type": "integer"}},
        "basis": {"type": "string"},
        "terms": {"type": "array", "items": TERM},
    },
    "required": ["family", "perm", "terms"],
}


def ok(argv):
    code, out, err = run(argv)
    assert code == 0, err.decode()
    return out.decode()


def check_sorted_keys(text):
    assert text.strip() == json.dumps(json.loads(text), sort_keys=True, ensure_ascii=False)


@pytest.mark.parametrize("family", ["C", "D"])
def test_table_golden(family):
    out = ok(["table", "--family", family, "--rank", "3", "--increasing-up-to", "1", "--format", "text"])
    assert out == (GOLDEN / f"table1_{family}3.txt").read_text()
    assert len(out.splitlines()) == 24


@pytest.mark.parametrize("family", ["C", "D"])
def test_table_words_are_reduced(family):
    fam = "BC" if family == "C" else "D"
    for line in (GOLDEN / f"table1_{family}3.txt").read_text().splitlines():
        perm, word, _ = (s.strip() for s in line.split("|"))
        w = SignedPermutation.parse(perm, fam)
        letters = tuple(int(ch) for ch in word)
        assert letters in {tuple(r) for r in reduced_words(w)}
        assert tuple(table_word(w)) == letters


def test_expand_example():
    out = ok(["expand", "--family", "C", "--k", "1", "--perm", "3,-1,2,5,4", "--basis", "theta", "--format", "json"])
    data = json.loads(out)
    jsonschema.validate(data, SCHEMA)
    check_sorted_keys(out)
    assert data["terms"] == [{"coeff": 1, "partition": "(4)"}, {"coeff": 2, "partition": "(3,1)"},
                             {"coeff": 1, "partition": "(2,1,1)"}]


@pytest.mark.parametrize("argv", [
    ["expand", "--family", "D", "--k", "1", "--perm", "3,2,1", "--basis", "eta"],
    ["expand", "--family", "C", "--perm", "2,-1", "--basis", "schur-q"],
    ["expand", "--family", "D", "--perm=-2,-1", "--basis", "schur-p"],
    ["expand", "--family", "A", "--perm", "3,1,2", "--basis", "schur-s"],
    ["giambelli", "--family", "D", "--perm", "3,2,1", "--a", "1,2"],
    ["giambelli", "--family", "C", "--perm", "2,3,1", "--a", "1,2", "--b", "0,1"],
    ["product", "--family", "C", "--k", "1", "--mu", "2,1", "--nu", "1"],
])
def test_json_schema(argv):
    out = ok(argv)
    check_sorted_keys(out)
    data = json.loads(out)
    if "terms" in data and "perm" not in data:
        data["perm"] = ""
    jsonschema.validate(data, SCHEMA)


def test_product_example():
    data = json.loads(ok(["product", "--family", "C", "--k", "1", "--mu", "2,1", "--nu", "1"]))
    assert [t["coeff"] for t in data["terms"]] == [1, 2, 1]
    text = ok(["product", "--family", "C", "--k", "1", "--mu", "2,1", "--nu", "1", "--format", "text"])
    assert text.strip() == "Θ_4 + 2 Θ_(3,1) + Θ_(2,1,1)"


def test_schur_p_product():
    data = json.loads(ok(["product", "--family", "C", "--mu", "1", "--nu", "1", "--basis", "schur-p"]))
    # P_1^2 = P_2
    assert data["terms"] == [{"coeff": 1, "partition": "(2)"}]


def test_family_b_scaling():
    c = json.loads(ok(["expand", "--family", "C", "--perm", "-1", "--basis", "schur-q"]))
    b = json.loads(ok(["expand", "--family", "B", "--perm", "-1", "--basis", "schur-q"]))
    assert c["terms"][0]["coeff"] == 1 and b["terms"][0]["coeff"] == "1/2^1"


def test_tree_dot():
    out = ok(["tree", "--family", "C", "--perm", "3,-1,2,5,4", "--k", "1"])
    assert out.startswith("digraph transition {") and out.rstrip().endswith("}")
    assert out.count("->") >= 4
    data = json.loads(ok(["tree", "--family", "C", "--perm", "3,-1,2,5,4", "--k", "1", "--format", "json"]))
    leaves = {n["leaf"] for n in data["nodes"] if n["leaf"]}
    assert leaves == {"(2,1,1)", "(3,1)", "(4)"}


def test_words():
    assert ok(["words", "--family", "C", "--perm", "2,-1"]).split() == ["01"]
    assert sorted(ok(["words", "--family", "C", "--perm=-1,-2"]).split()) == ["0101", "1010"]
    data = json.loads(ok(["words", "--family", "C", "--perm=-2,-1", "--type", "1", "--format", "json"]))
    assert data["count"] == len(data["words"])
    assert all(w[-1] != "0" for w in data["words"])


@pytest.mark.parametrize("argv", [
    ["expand", "--family", "C", "--perm", "3,-1,2", "--bogus"],
    ["expand", "--family", "C", "--perm", "3,3,1", "--k", "1"],
    ["expand", "--family", "C", "--perm", "x,y", "--k", "1"],
    ["expand", "--family", "Q", "--perm", "1"],
    ["giambelli", "--family", "C", "--perm", "3,2,1", "--a", "2"],
    ["giambelli", "--family", "C", "--perm", "3,2,1", "--a", "2,1"],
    ["tree", "--family", "C", "--perm", "2,1", "--k", "-1"],
    ["tree", "--family", "C", "--perm", "2,1,3", "--k", "2"],
    ["product", "--family", "C", "--k", "1", "--mu", "2,1", "--nu", "2"],
    ["table", "--family", "A", "--rank", "3"],
    [],
])
def test_invalid_input_exits_2(argv):
    code, out, err = run(argv)
    assert code == 2 and out == b""
    assert err.startswith(b"schubsplit: error:")


def test_rank_cap(monkeypatch):
    monkeypatch.setenv("SCHUBERT_MAX_RANK", "3")
    code, _, err = run(["expand", "--family", "C", "--k", "1", "--perm", "3,-1,2,5,4"])
    assert code == 2 and b"SCHUBERT_MAX_RANK" in err
    code, _, _ = run(["table", "--family", "C", "--rank", "4"])
    assert code == 2


def test_deterministic():
    argv = ["table", "--family", "D", "--rank", "3", "--format", "json"]
    assert run(argv) == run(argv)
    check_sorted_keys(ok(argv))


def test_console_script():
    proc = subprocess.run([sys.executable, "-m", "schubsplit.cli", "product", "--family", "C", "--k", "1",
                           "--mu", "2,1", "--nu", "1", "--format", "text"], capture_output=True)
    assert proc.returncode == 0
    assert proc.stdout.decode().strip() == "Θ_4 + 2 Θ_(3,1) + Θ_(2,1,1)"
    proc = subprocess.run([sys.executable, "-m", "schubsplit.cli", "tree", "--nope"], capture_output=True)
    assert proc.returncode == 2
