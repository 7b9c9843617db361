import json

import pytest

from heawood.cli import main
from heawood.canon import canonical_key
from heawood.moves import named_graph


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_query_text_and_json(capsys):
    code, out, _ = run(capsys, "query", "planar", "K7")
    assert code == 0 and out.strip() == "K7\tfalse"
    code, out, _ = run(capsys, "query", "chi", "H12", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc[0]["value"] == -9  # 12 vertices, 21 edges
    code, out, _ = run(capsys, "query", "degseq", "C14")
    assert "(3^14)" in out


def test_query_apex_budget(capsys):
    code, out, _ = run(capsys, "query", "apex", "2", "K7", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc[0]["value"]["is_n_apex"] is False
    assert doc[0]["value"]["witness"] is None
    code, _, err = run(capsys, "query", "apex", "K7")
    assert code == 2 and "deletion budget" in err


def test_query_from_file(capsys, tmp_path):
    path = tmp_path / "graphs.g6"
    path.write_text(canonical_key(named_graph("K7")) + "\nbogus line\n")
    code, _, err = run(capsys, "query", "planar", "--file", str(path))
    assert code == 2 and "line 2" in err
    code, out, _ = run(
        capsys, "query", "planar", "--file", str(path), "--on-error", "skip"
    )
    assert code == 0 and out.strip().endswith("false")


def test_query_no_input(capsys):
    code, _, err = run(capsys, "query", "planar")
    assert code == 2 and "no input graphs" in err


def test_closure_command(capsys):
    code, out, _ = run(
        capsys, "closure", "--moves", "ty", "--seed", "K7", "--format", "graph6"
    )
    assert code == 0
    keys = out.split()
    assert len(keys) == 14
    code, out, _ = run(capsys, "closure", "--moves", "both", "--seed", "K7")
    doc = json.loads(out)
    assert len(doc["classes"]) == 20
    assert doc["moves"] == ["ty", "yt"]


def test_enumerate_command(capsys):
    code, out, _ = run(
        capsys,
        "enumerate",
        "--order", "6",
        "--degree-sequence", "3", "3", "3", "3", "3", "3",
        "--connected",
        "--count",
    )
    assert code == 0 and out.strip() == "2"
    code, out, _ = run(
        capsys,
        "enumerate",
        "--order", "8",
        "--size", "11",
        "--min-degree", "1",
        "--nonplanar",
        "--count",
    )
    assert code == 0 and out.strip() == "11"
    code, out, _ = run(
        capsys, "enumerate", "--order", "5", "--size", "10", "--format", "json"
    )
    doc = json.loads(out)
    assert len(doc) == 1 and doc[0]["degree_sequence"] == "(4^5)"


def test_enumerate_budget_exit_code(capsys):
    code, _, err = run(
        capsys,
        "enumerate",
        "--order", "12",
        "--degree-sequence", *(["3"] * 12),
        "--connected",
        "--budget", "0.05s",
        "--count",
    )
    assert code == 2 and "budget exceeded" in err


def test_verify_command(capsys, tmp_path):
    report_path = tmp_path / "report.json"
    code, out, _ = run(
        capsys,
        "verify",
        "--claims", "families",
        "--format", "json",
        "--report", str(report_path),
    )
    assert code == 0
    doc = json.loads(out)
    assert doc["overall"] == "pass"
    assert json.loads(report_path.read_text()) == doc
    code, _, err = run(capsys, "verify", "--claims", "nonesuch")
    assert code == 2 and "unknown claim group" in err


def test_verify_text_summary(capsys):
    code, out, _ = run(capsys, "verify", "--claims", "families")
    assert code == 0
    assert "overall: pass" in out
    assert "families.ks-count" in out
