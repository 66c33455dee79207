import io
import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given

from hexpansive.cli import main
from hexpansive.corpus import all_examples, example2
from hexpansive.errors import ParseError
from hexpansive.io import PairDocument, matrix_from_json, matrix_to_json, parse_matrix_document, parse_pair
from hexpansive.matrix import Matrix

from conftest import matrices

FIX = Path(__file__).parent / "fixtures"


def run(argv, stdin: bytes | None = None, monkeypatch=None):
    out = io.StringIO()
    if stdin is not None:
        monkeypatch.setattr(sys, "stdin", io.TextIOWrapper(io.BytesIO(stdin)))
    code = main([str(a) for a in argv], out=out)
    return code, out.getvalue()


def pair_json(a, h) -> str:
    return json.dumps(PairDocument(Matrix(a), Matrix(h)).to_json())


# ---- parsing -------------------------------------------------------------------


def test_parse_identity_pair():
    doc = parse_pair(json.dumps({"A": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]},
                                 "H": {"rows": 2, "cols": 2, "entries": [["1", "0"], ["0", "1"]]}}))
    assert doc.A == Matrix.identity(2) and doc.H == Matrix.identity(2)
    assert doc.metadata == {}


def test_parse_example2_fixture():
    doc = parse_pair((FIX / "example2.json").read_bytes())
    ex = example2()
    assert (doc.A, doc.H) == (ex.pair.A, ex.pair.H)
    assert doc.metadata["name"] == "example2"


@pytest.mark.parametrize("ex", all_examples(), ids=lambda ex: f"example{ex.id}")
def test_fixtures_match_corpus(ex):
    doc = parse_pair((FIX / f"example{ex.id}.json").read_bytes())
    assert (doc.A, doc.H) == (ex.pair.A, ex.pair.H)


def test_complex_entries():
    m = matrix_from_json({"rows": 1, "cols": 2, "entries": [[{"re": "1/2", "im": "-3"}, "4"]]})
    assert m[0, 0].re == 0.5 and m[0, 0].im == -3
    assert matrix_to_json(m)["entries"][0][0] == {"re": "1/2", "im": "-3"}


@pytest.mark.parametrize(
    "payload, code, loc",
    [
        ("{not json", "malformed-json", ""),
        ('{"A": [["1"]]}', "missing-field", "H"),
        ('{"A": [["1/0"]], "H": [["1"]]}', "invalid-scalar", "A.entries[0][0]"),
        ('{"A": [["1.5"]], "H": [["1"]]}', "invalid-scalar", "A.entries[0][0]"),
        ('{"A": [["1", "2"]], "H": [["1"]]}', "shape-mismatch", "A"),
        ('{"A": {"rows": 2, "cols": 1, "entries": [["1"]]}, "H": [["1"]]}', "shape-mismatch", "A"),
        ('{"A": [["1", "0"], ["0"]], "H": [["1"]]}', "shape-mismatch", "A.entries[1]"),
        ('{"A": [["1"]], "H": [["1", "0"], ["0", "1"]]}', "shape-mismatch", "H"),
        ('{"A": [["1", "0"], ["0", "1"]], "H": [["1", "2"], ["0", "1"]]}', "not-hermitian", "H.entries[0][1]"),
        ('{"A": [["1", "0"], ["0", "1"]], "H": [["1", "1"], ["1", "1"]]}', "singular-h", "H"),
    ],
)
def test_parse_errors(payload, code, loc):
    with pytest.raises(ParseError) as info:
        parse_pair(payload)
    assert info.value.code == code
    assert info.value.location == loc


@given(matrices())
def test_matrix_json_round_trip(m):
    obj = matrix_to_json(m)
    back = matrix_from_json(json.loads(json.dumps(obj)))
    assert back == m
    assert matrix_to_json(back) == obj


def test_canonical_reemission():
    obj = {"rows": 1, "cols": 3, "entries": [["6/-4", "0/5", "-0"]]}
    assert matrix_to_json(matrix_from_json(obj))["entries"] == [["-3/2", "0", "0"]]


def test_matrix_document_key():
    s = parse_matrix_document((FIX / "example1_S.json").read_bytes(), key="S")
    assert s.shape == (5, 5)


# ---- commands ------------------------------------------------------------------


def test_check_example3():
    code, out = run(["check", FIX / "example3.json"])
    assert code == 0
    assert "unitary: true" in out and "expansive: true" in out


def test_check_not_expansive(tmp_path):
    f = tmp_path / "half.json"
    f.write_text(pair_json([["1/2", 0], [0, "1/2"]], [[1, 0], [0, 1]]))
    code, out = run(["check", f])
    assert code == 2
    assert "expansive: false" in out
    assert "(0, 2, 0)" in out
    code, out = run(["check", f, "--json"])
    assert json.loads(out)["defect_inertia"] == {"pos": 0, "neg": 2, "zero": 0}


def test_check_stdin(monkeypatch):
    code, out = run(["check", "-"], stdin=(FIX / "example1.json").read_bytes(), monkeypatch=monkeypatch)
    assert code == 0
    assert "(2, 0, 3)" in out


def test_input_error_exit_code(tmp_path):
    f = tmp_path / "bad.json"
    f.write_text('{"A": [["1/0"]], "H": [["1"]]}')
    assert run(["check", f])[0] == 1
    assert run(["check", tmp_path / "missing.json"])[0] == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["check"],
        ["frobnicate"],
        ["check", "x.json", "--bogus"],
        ["generate", "--dims", "1,2", "--seed", "1"],
        ["generate", "--dims", "1,1,1", "--seed", "-1"],
        ["verify", "p.json", "--transform", "s.json", "--dims", "a,b,c,d"],
        ["examples", "--id", "9"],
        [],
    ],
)
def test_usage_errors(argv):
    assert run(argv)[0] == 64


def test_decompose_example1(tmp_path):
    out_file = tmp_path / "dec.json"
    code, out = run(["decompose", FIX / "example1.json", "--out", out_file])
    assert code == 0
    assert "dims (m, m1, m2, m3) = (2, 1, 2, 0)" in out
    payload = json.loads(out_file.read_text())
    assert payload["dims"] == [2, 1, 2, 0]
    assert payload["compression"]["A22"]["entries"] == [["1"]]
    assert payload["verification"]["all_pass"] is True


def test_decompose_output_verifies(tmp_path):
    out_file = tmp_path / "dec.json"
    assert run(["decompose", FIX / "example2.json", "--out", out_file, "--randomize-complement", 3])[0] == 0
    dims = ",".join(map(str, json.loads(out_file.read_text())["dims"]))
    code, out = run(["verify", FIX / "example2.json", "--transform", out_file, "--dims", dims])
    assert code == 0


def test_decompose_not_expansive(tmp_path):
    f = tmp_path / "half.json"
    f.write_text(pair_json([["1/2"]], [[1]]))
    code, out = run(["decompose", f])
    assert code == 2 and "not expansive" in out


def test_verify_printed_transforms():
    code, _ = run(["verify", FIX / "example2.json", "--transform", FIX / "example2_S.json", "--dims", "1,3,1,0"])
    assert code == 0
    code, _ = run(["verify", FIX / "example1.json", "--transform", FIX / "example1_neutral_S.json",
                   "--dims", "2,1,2,0"])
    assert code == 0
    # the printed Example 1 transform is not H-neutral on its last two columns
    code, out = run(["verify", FIX / "example1.json", "--transform", FIX / "example1_S.json",
                     "--dims", "2,1,2,0", "--json"])
    assert code == 2
    failed = {c["name"] for c in json.loads(out)["checks"] if not c["pass"]}
    assert "h_pattern" in failed


def test_verify_bad_dims_is_input_error():
    code, _ = run(["verify", FIX / "example2.json", "--transform", FIX / "example2_S.json", "--dims", "1,2,1,2"])
    assert code == 1
    code, _ = run(["verify", FIX / "example2.json", "--transform", FIX / "example2_S.json", "--dims", "1,1,1,2"])
    assert code == 2


def test_generate_is_deterministic(tmp_path):
    code, a = run(["generate", "--dims", "1,1,1", "--seed", 42])
    assert code == 0
    _, b = run(["generate", "--dims", "1,1,1", "--seed", 42])
    assert a == b
    doc = json.loads(a)
    assert doc["metadata"]["dims"] == [1, 1, 1, 1]
    f = tmp_path / "g.json"
    assert run(["generate", "--dims", "2,0,1", "--seed", 7, "--complex", "--out", f])[0] == 0
    assert run(["check", f])[0] == 0
    assert run(["decompose", f])[0] == 0


def test_selfadjoint_command(tmp_path):
    p = tmp_path / "p.json"
    p.write_text(pair_json([[0, 1], [0, 0]], [[0, 1], [1, 0]]))
    n = tmp_path / "n.json"
    n.write_text(json.dumps({"N": {"rows": 2, "cols": 1, "entries": [["1"], ["0"]]}}))
    code, out = run(["selfadjoint", p, "--invariant", n, "--json"])
    assert code == 0
    assert json.loads(out)["dims"] == [1, 0, 1, 0]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"N": [["0"], ["1"]]}))
    assert run(["selfadjoint", p, "--invariant", bad])[0] == 2


def test_examples_command():
    code, out = run(["examples", "--id", "1"])
    assert code == 0
    assert "dims (m, m1, m2, m3) = (2, 1, 2, 0)" in out
    code, out = run(["examples", "--json"])
    assert code == 0
    payload = json.loads(out)
    assert payload["all_pass"] and len(payload["examples"]) == 5


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hexpansive", "examples", "--id", "3"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert "Example 3: PASS" in proc.stdout
