import json

import pytest

from heawood.enumeration import Budget
from heawood.errors import BudgetExceeded
from heawood.graph import GraphError
from heawood.verify import (
    GROUPS,
    Claim,
    VerificationReport,
    _claim,
    _degree_sequences,
    emit_report,
    run_groups,
    verify_families,
)


def make_claim(status="pass", cid="t.example"):
    expected = 3
    observed = {"pass": 3, "fail": 4}.get(status, 3)

    def fn():
        if status == "skipped(budget)":
            raise BudgetExceeded("out of time")
        return observed, ()

    return _claim(cid, "three things", "count them", expected, "derived", fn)


def test_claim_statuses():
    assert make_claim("pass").status == "pass"
    # fault injection: a flipped observation must come out as fail
    c = make_claim("fail")
    assert c.status == "fail" and c.observed == 4 and c.expected == 3
    c = make_claim("skipped(budget)")
    assert c.status == "skipped(budget)"
    assert str(c.observed).startswith("incomplete")


def test_claim_requires_known_provenance():
    with pytest.raises(GraphError):
        Claim(
            id="t.bad",
            statement="s",
            procedure="p",
            expected=1,
            observed=1,
            provenance="folklore",
            status="pass",
            runtime=0.0,
        )


def test_overall_severity_ordering():
    p, f, s = make_claim("pass"), make_claim("fail"), make_claim("skipped(budget)")
    assert emit_report([p]).overall == "pass"
    assert emit_report([p, s]).overall == "incomplete"
    assert emit_report([p, s, f]).overall == "fail"
    assert emit_report([]).overall == "pass"


def test_report_json_shape():
    report = emit_report([make_claim()], {"order14": "generated"})
    doc = json.loads(report.canonical_json())
    assert doc["report_version"] == 1
    assert doc["overall"] == "pass"
    assert doc["corpus_sources"] == {"order14": "generated"}
    assert [c["id"] for c in doc["claims"]] == ["t.example"]
    # canonical form carries no runtimes or backend tag
    assert "backend" not in doc
    assert "runtime_seconds" not in doc["claims"][0]
    full = json.loads(report.full_json())
    assert "backend" in full
    assert "runtime_seconds" in full["claims"][0]
    assert "overall: pass" in report.summary_text()


def test_run_groups_rejects_unknown_names():
    with pytest.raises(GraphError):
        run_groups(["nonesuch"])
    assert set(GROUPS) >= {"families", "catalogs", "sweeps"}


def test_budget_marks_groups_incomplete_not_failed():
    claims = run_groups(["order12"], budget=Budget(max_seconds=0.2))
    assert claims, "budgeted group still emits claims"
    assert all(c.status in ("pass", "skipped(budget)") for c in claims)
    assert any(c.status == "skipped(budget)" for c in claims)
    assert emit_report(claims).overall == "incomplete"


def test_families_group_passes_and_is_thread_stable():
    one = emit_report(run_groups(["families"], threads=1))
    four = emit_report(run_groups(["families"], threads=4))
    assert one.overall == "pass"
    assert one.canonical_json() == four.canonical_json()


def test_order14_rejects_bad_corpus():
    from heawood.graph import complete_graph

    with pytest.raises(GraphError, match="not cubic"):
        run_groups(["order14"], corpus=[complete_graph(4)])


def test_degree_sequence_generator():
    seqs = _degree_sequences(4, 10, 1)
    assert all(sum(s) == 10 and len(s) == 4 for s in seqs)
    assert all(s == tuple(sorted(s, reverse=True)) for s in seqs)
    assert all(max(s) <= 3 for s in seqs)
    assert len(set(seqs)) == len(seqs)
    assert (3, 3, 3, 1) in seqs and (3, 3, 2, 2) in seqs
