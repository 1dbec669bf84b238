"""Document parsing and CLI contract tests."""

import json
import subprocess
import sys

import pytest

from composita.cli import main
from composita.documents import (canonical_json, load_system,
                                 parse_context_document, parse_permutation,
                                 system_to_document)
from composita.errors import DocumentError
from composita.perm import Permutation


def c2_doc():
    return {
        "label": "t",
        "degree": 2,
        "ambient_generators": [[1, 0]],
        "fields": {"C": []},
        "composita": [{"source": "C", "target": "C", "phi": [1, 0],
                       "label": "A"}],
    }


# --- parsing ----------------------------------------------------------------

def test_parse_permutation_forms():
    assert parse_permutation([1, 0, 2], 3) == Permutation((1, 0, 2))
    assert parse_permutation("(0 1)", 3) == Permutation((1, 0, 2))
    assert parse_permutation("(0,1)(2 3)", 4) == Permutation((1, 0, 3, 2))
    assert parse_permutation("()", 2) == Permutation.identity(2)
    with pytest.raises(DocumentError):
        parse_permutation([0, 0], 2)
    with pytest.raises(DocumentError):
        parse_permutation([0, 1, 2], 2)
    with pytest.raises(DocumentError):
        parse_permutation("(0 x)", 2)


def test_parse_context_document():
    parsed = parse_context_document(c2_doc())
    assert len(parsed.system.nodes) == 1
    assert len(parsed.system.composita) == 1
    comp = parsed.system.composita[0]
    assert parsed.labels[comp] == "A"
    assert parsed.realization is None


def test_parse_rejects_bad_documents():
    with pytest.raises(DocumentError):
        parse_context_document({"degree": 2, "fields": {}})
    doc = c2_doc()
    doc["composita"][0]["source"] = "missing"
    with pytest.raises(DocumentError):
        parse_context_document(doc)
    doc = c2_doc()
    doc["fields"]["X"] = [[1, 0, 2]]  # wrong degree
    with pytest.raises(DocumentError):
        parse_context_document(doc)
    doc = c2_doc()
    doc["realization"] = {"kind": "nope"}
    with pytest.raises(DocumentError):
        parse_context_document(doc)


def test_realization_ambient_must_match():
    doc = c2_doc()
    doc["realization"] = {"kind": "cyclotomic", "n": 5}  # order 4 != order 2
    with pytest.raises(DocumentError):
        parse_context_document(doc)
    doc["realization"] = {"kind": "cyclotomic", "n": 4}
    parsed = parse_context_document(doc)
    assert parsed.realization is not None
    assert parsed.realization.name == "cyclotomic-4"


def test_document_roundtrip():
    parsed = parse_context_document(c2_doc())
    doc2 = system_to_document(parsed.system, parsed.labels)
    parsed2 = parse_context_document(doc2)
    assert parsed2.system.composita == parsed.system.composita
    assert list(parsed2.labels.values()) == ["A"]


def test_cycle_notation_in_documents():
    doc = c2_doc()
    doc["ambient_generators"] = ["(0 1)"]
    doc["composita"][0]["phi"] = "(0 1)"
    parsed = parse_context_document(doc)
    assert parsed.system.composita[0].rep == Permutation((1, 0))


# --- CLI ------------------------------------------------------------------------

def run_cli(*argv):
    import io
    from contextlib import redirect_stdout
    buf = io.StringIO()
    with redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


def test_cli_close_bundled():
    code, out = run_cli("close", "--input", "c2_complex", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["E_size"] == 2
    assert data["indices"] == {"C": 2}
    assert data["connected"] is True


def test_cli_close_empty_single_node(tmp_path):
    doc = {"degree": 3, "ambient_generators": [[1, 0, 2]],
           "fields": {"A": []}, "composita": []}
    path = tmp_path / "sys.json"
    path.write_text(json.dumps(doc))
    code, out = run_cli("close", "--input", str(path), "--format", "json")
    assert code == 0
    assert json.loads(out)["E_size"] == 1


def test_cli_base_field_reports_real_subfield():
    code, out = run_cli("base-field", "--input", "c2_complex",
                        "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["indices"] == {"C": 2}
    assert data["base_min_poly"] == [-1, 1]  # the rationals
    assert data["all_triangles_ok"] is True


def test_cli_base_field_s3():
    code, out = run_cli("base-field", "--input", "s3_cbrt2",
                        "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["indices"] == {"A": 3}
    assert len(data["base_group"]) == 6


def test_cli_fuse_identity_and_conjugation():
    code, out = run_cli("fuse", "--input", "c2_complex", "A", "A",
                        "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["summands"] == [
        {"X": "I(C)", "mult": 1, "degree_over_base": 2}]
    code, out = run_cli("fuse", "--input", "c2_complex", "I(C)", "A",
                        "--format", "json")
    assert code == 0
    assert json.loads(out)["summands"][0]["X"] == "A"


def test_cli_fuse_s3_degrees():
    code, out = run_cli("fuse", "--input", "s3_cbrt2", "V", "V",
                        "--format", "json")
    assert code == 0
    data = json.loads(out)
    degrees = sorted(s["degree_over_base"] for s in data["summands"])
    assert degrees == [3, 6]


def test_cli_fuse_unknown_label():
    code, _ = run_cli("fuse", "--input", "c2_complex", "A", "Z")
    assert code == 6


def test_cli_fuse_not_composable():
    code, _ = run_cli("fuse", "--input", "rc_two_object", "V", "V")
    assert code == 6


def test_cli_oracle_sweep_needs_realization(tmp_path):
    doc = c2_doc()
    path = tmp_path / "plain.json"
    path.write_text(json.dumps(doc))
    code, _ = run_cli("oracle-sweep", "--input", str(path))
    assert code == 6


def test_cli_oracle_sweep_cyclotomic12():
    code, out = run_cli("oracle-sweep", "--input", "cyclotomic12",
                        "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["all_ok"] is True
    assert data["max_radical"] == 0
    assert data["pairs"] > 0


def test_cli_parse_error_exit_code(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    code, _ = run_cli("close", "--input", str(bad))
    assert code == 2
    code, _ = run_cli("close", "--input", str(tmp_path / "missing.json"))
    assert code == 2


def test_cli_cap_exceeded_exit_code(tmp_path):
    doc = {"degree": 5,
           "ambient_generators": [[1, 0, 2, 3, 4], [1, 2, 3, 4, 0]],
           "fields": {"A": []}, "composita": []}
    path = tmp_path / "big.json"
    path.write_text(json.dumps(doc))
    code, _ = run_cli("close", "--input", str(path),
                      "--max-group-order", "24")
    assert code == 3


def test_cli_not_connected_exit_code(tmp_path):
    doc = {"degree": 2, "ambient_generators": [[1, 0]],
           "fields": {"A": [], "B": []}, "composita": []}
    path = tmp_path / "disc.json"
    path.write_text(json.dumps(doc))
    code, _ = run_cli("base-field", "--input", str(path))
    assert code == 7


def test_cli_examples_single_fixture():
    code, out = run_cli("examples", "rc_two_object", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["all_pass"] is True
    assert data["fixtures"][0]["name"] == "rc_two_object"


def test_cli_examples_unknown_fixture():
    code, _ = run_cli("examples", "nope")
    assert code == 6


def test_cli_json_deterministic():
    _, out1 = run_cli("close", "--input", "s3_cbrt2", "--format", "json",
                      "--seed", "7")
    _, out2 = run_cli("close", "--input", "s3_cbrt2", "--format", "json",
                      "--seed", "7")
    assert out1 == out2
    data = json.loads(out1)
    assert canonical_json(data) == out1


def test_cli_entrypoint_subprocess():
    proc = subprocess.run(
        [sys.executable, "-m", "composita.cli", "close",
         "--input", "c2_complex", "--format", "json"],
        capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["E_size"] == 2
