import json
import os

import pytest

from pybicorn.cli import parse_graph, run

def test_validate(capsys):
    assert run(["validate", "genus2-i2"]) == 0
    assert "valid, χ = -2" in capsys.readouterr().out

def test_validate_json(capsys):
    assert run(["validate", "figure1", "--format", "json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d == {"valid": True, "euler_char": -2, "orientable": False, "problems": []}

def test_invalid_configuration_exits_1(capsys):
    assert run(["validate", "bigon-3"]) == 1
    assert "not minimal position" in capsys.readouterr().out

def test_unknown_pattern_exits_1(capsys):
    assert run(["validate", "grid-x"]) == 1
    assert capsys.readouterr().err.startswith("error:")

def test_usage_errors():
    assert run(["frobnicate", "grid-3"]) == 2
    assert run(["certify", "grid-3", "--graph", "aug:1"]) == 2
    assert run(["certify", "grid-3", "--graph", "tree"]) == 2
    assert run(["--help"]) == 0

def test_missing_source(capsys):
    assert run(["validate"]) == 1
    assert "needs a configuration" in capsys.readouterr().err

def test_parse_graph():
    assert parse_graph("curve") == ("curve", None)
    assert parse_graph("aug:3") == ("augmented", 3)

def test_ledger(capsys):
    assert run(["ledger"]) == 0
    out = capsys.readouterr().out
    assert "15" in out and "52" in out
    assert run(["ledger", "--format", "json"]) == 0
    names = [e["name"] for e in json.loads(capsys.readouterr().out)["ledger"]]
    assert "bgit_annular" in names
    assert run(["ledger", "--format", "dot"]) == 2

def test_third(capsys):
    assert run(["third", "grid-9"]) == 0
    assert "i(α,β) = 9" in capsys.readouterr().out
    assert run(["third", "genus2-i2"]) == 1

def test_certify_json(capsys):
    assert run(["certify", "grid-4", "--format", "json"]) == 0
    d = json.loads(capsys.readouterr().out)["certificate"]
    assert d["complete"]
    assert d["total"] <= 4
    assert d["path"][0] == "curve 0" and d["path"][-1] == "curve 1"

def test_certify_augmented(capsys):
    assert run(["certify", "grid-9", "--graph", "aug:2", "--format", "json"]) == 0
    d = json.loads(capsys.readouterr().out)["certificate"]
    assert d["graph"] == "augmented_k" and d["k"] == 2

def test_dot_outputs(capsys):
    assert run(["export-dot", "genus2-i2"]) == 0
    assert capsys.readouterr().out.startswith('graph "G" {')
    assert run(["sequence", "grid-5", "--format", "dot"]) == 0
    assert capsys.readouterr().out.startswith('digraph "G" {')
    assert run(["slim", "triple-4", "--format", "dot"]) == 0
    assert "i = " in capsys.readouterr().out

def test_sequence_and_extend(capsys):
    assert run(["sequence", "grid-5", "--format", "json"]) == 0
    seq = json.loads(capsys.readouterr().out)
    assert seq
    assert run(["extend", "grid-5", "--index", "0"]) == 0
    capsys.readouterr()
    assert run(["extend", "grid-5", "--index", "1000"]) == 1
    assert "out of range" in capsys.readouterr().err

def test_project(capsys):
    assert run(["project", "projection", "--format", "json"]) == 0
    d = json.loads(capsys.readouterr().out)
    assert d["subsurface"] == {"boundary": [2, 3], "inside": [[2, -1], [3, 1]]}
    assert len(d["projection"]["alpha"]) == 12
    assert run(["project", "grid-5"]) == 1

def test_generate_then_validate(tmp_path, capsys):
    assert run(["generate", "triple-3", "--format", "json"]) == 0
    path = tmp_path / "triple.json"
    path.write_text(capsys.readouterr().out, encoding="utf-8")
    assert run(["validate", "--input", str(path)]) == 0
    assert "valid" in capsys.readouterr().out
    assert run(["bicorns", str(path), "--alpha", "0", "--beta", "2"]) == 0

def test_corpus_writes_log(tmp_path, capsys):
    params = tmp_path / "parameters.yml"
    results = tmp_path / "results"
    params.write_text("Output:\n  results_basename: %s\nBatch:\n  kmin: 3\n  kmax: 4\n" %results, encoding="utf-8")
    assert run(["corpus", "--params", str(params)]) == 0
    with open(os.path.join(results, "pybicorn.log")) as f:
        log = f.read()
    assert "Log file for pyBicorn." in log
    assert "grid-4 certify" in log and "FAILED" not in log

def test_bad_parameter_file(tmp_path, capsys):
    params = tmp_path / "parameters.yml"
    params.write_text("Certify:\n  graf: curve\n", encoding="utf-8")
    assert run(["validate", "grid-3", "--params", str(params)]) == 1

def test_corpus_script_is_not_collected(pytestconfig):
    ignored = [os.path.basename(os.path.normpath(str(p))) for p in pytestconfig.getoption("ignore") or []]
    assert "corpus" in ignored

def test_malformed_document_exits_1(tmp_path, capsys):
    assert run(["generate", "grid-3", "--format", "json"]) == 0
    d = json.loads(capsys.readouterr().out)
    del d["crossings"][0]["curves"]
    path = tmp_path / "broken.json"
    path.write_text(json.dumps(d), encoding="utf-8")
    assert run(["validate", "--input", str(path)]) == 1
    assert capsys.readouterr().err.startswith("error:")
