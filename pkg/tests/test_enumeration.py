import io
import time

import pytest

from heawood.canon import canonical_key
from heawood.enumeration import (
    Budget,
    EnumSpec,
    dual_strategy_check,
    enumerate_cached,
    enumerate_graphs,
    filter_catalog,
    read_graph6_stream,
    spec_hash,
)
from heawood.errors import BudgetExceeded
from heawood.graph import GraphError, complete_graph, emit_graph6


def census(n, **kw):
    return enumerate_graphs(EnumSpec(order=n, **kw))


def test_census_counts():
    # total isomorphism classes per order, cross-checked against the
    # brute-force labeled count in test_canon.py for n <= 5
    for n, expected in ((1, 1), (2, 2), (3, 4), (4, 11), (5, 34), (6, 156), (7, 1044)):
        assert len(census(n)) == expected


def test_filtered_counts():
    # connected cubic classes: none below order 4, then 1, 0, 2, 0, 5
    for n, expected in ((4, 1), (5, 0), (6, 2), (7, 0), (8, 5)):
        got = enumerate_graphs(
            EnumSpec(order=n, degree_sequence=(3,) * n, connected=True)
        )
        assert len(got) == expected, n
    # triangle-free classes of order 5
    assert len(census(5, triangle_free=True)) == 14
    # trees on 7 vertices
    trees = enumerate_graphs(EnumSpec(order=7, size=6, connected=True))
    assert len(trees) == 11


def test_results_are_sorted_and_canonical():
    got = census(6)
    keys = [canonical_key(g) for g in got]
    assert keys == sorted(keys)
    assert len(set(keys)) == len(keys)


def test_dual_strategies_agree():
    for kw in (
        {"order": 6},
        {"order": 7, "size": 9, "triangle_free": True},
        {"order": 8, "degree_sequence": (3,) * 8, "connected": True},
    ):
        a, b = dual_strategy_check(EnumSpec(**kw))
        assert [canonical_key(g) for g in a] == [canonical_key(g) for g in b]


def test_threaded_run_matches_serial():
    spec = EnumSpec(order=7, size=(8, 12))
    serial = enumerate_graphs(spec, threads=1)
    threaded = enumerate_graphs(spec, threads=4)
    assert [canonical_key(g) for g in serial] == [
        canonical_key(g) for g in threaded
    ]


def test_spec_validation():
    with pytest.raises(GraphError):
        EnumSpec(order=40)
    with pytest.raises(GraphError):
        enumerate_graphs(EnumSpec(order=4), strategy="zigzag")
    # infeasible specs return empty rather than raising
    assert enumerate_graphs(EnumSpec(order=3, min_degree=5)) == []
    assert enumerate_graphs(EnumSpec(order=5, degree_sequence=(3, 3))) == []
    assert enumerate_graphs(EnumSpec(order=3, size=(4, 2))) == []


def test_budget_abort():
    with pytest.raises(BudgetExceeded):
        enumerate_graphs(
            EnumSpec(order=12, degree_sequence=(3,) * 12, connected=True),
            Budget(max_seconds=0.05),
        )


def test_read_graph6_stream():
    text = io.StringIO("A_\n\n@\nnot-a-graph\nBw\n")
    with pytest.raises(GraphError, match="line 4"):
        list(read_graph6_stream(io.StringIO(text.getvalue())))
    got = list(read_graph6_stream(io.StringIO(text.getvalue()), on_error="skip"))
    assert [ln for ln, _g in got] == [1, 3, 5]
    with pytest.raises(GraphError):
        list(read_graph6_stream(io.StringIO(""), on_error="quietly"))


def test_filter_catalog():
    cat = filter_catalog(census(5), nonplanar=True)
    assert cat.keys() == [canonical_key(complete_graph(5))]
    entry = cat.entries[0]
    assert entry.properties["order"] == 5 and not entry.properties["planar"]
    assert cat.to_json()[0]["key"] == entry.key
    # isolated-vertex filter
    cat = filter_catalog(census(4), isolated_vertex=True)
    assert all(0 in e.graph.degrees() for e in cat)


def test_enumerate_cached_round_trip(tmp_path):
    spec = EnumSpec(order=6, size=7)
    first, src1 = enumerate_cached(spec, str(tmp_path))
    second, src2 = enumerate_cached(spec, str(tmp_path))
    assert src1 == "generated" and src2 == "cache"
    assert [canonical_key(g) for g in first] == [canonical_key(g) for g in second]
    assert spec_hash(spec) == spec_hash(EnumSpec(order=6, size=7))
    assert spec_hash(spec) != spec_hash(EnumSpec(order=6, size=8))
    # corrupted header is rejected
    path = next(tmp_path.glob("enum-*.g6"))
    path.write_text("#spec {}\nBw\n")
    with pytest.raises(GraphError):
        enumerate_cached(spec, str(tmp_path))
