import random

import networkx as nx
import pytest

from heawood.graph import (
    DegreeSequence,
    Graph,
    GraphError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    emit_graph6,
    empty_graph,
    from_edges,
    parse_graph6,
    path_graph,
)

from conftest import petersen, random_graph


def test_constructor_rejects_bad_input():
    with pytest.raises(GraphError):
        Graph(2, [0b10, 0b00])  # asymmetric
    with pytest.raises(GraphError):
        Graph(1, [0b1])  # self-loop
    with pytest.raises(GraphError):
        Graph(33, [0] * 33)  # over the order cap
    with pytest.raises(GraphError):
        Graph(2, [0])  # wrong row count


def test_basic_invariants():
    k4 = complete_graph(4)
    assert k4.size == 6
    assert k4.degrees() == [3, 3, 3, 3]
    assert k4.euler_characteristic() == -2
    assert k4.is_connected()
    assert not k4.is_triangle_free()
    k33 = complete_bipartite(3, 3)
    assert k33.size == 9
    assert k33.is_triangle_free()
    assert sorted(k33.neighbors(0)) == [3, 4, 5]
    assert k33.has_edge(0, 3) and not k33.has_edge(0, 1)
    assert cycle_graph(5).degrees() == [2] * 5
    assert path_graph(4).size == 3
    assert empty_graph(3).size == 0
    assert not empty_graph(3).is_connected()


def test_equality_and_hash():
    a = complete_graph(4)
    b = from_edges(4, [(u, v) for u in range(4) for v in range(u + 1, 4)])
    assert a == b and hash(a) == hash(b)
    assert a != a.remove_edge(0, 1)


def test_edit_operations():
    g = cycle_graph(4)
    assert g.add_edge(0, 2).size == 5
    assert g.remove_edge(0, 1).size == 3
    assert g.add_edge(0, 1) == g  # idempotent on existing edges
    with pytest.raises(GraphError):
        g.add_edge(0, 0)  # self-loop
    with pytest.raises(GraphError):
        g.remove_edge(0, 2)  # absent
    h, relab = g.delete_vertices([1])
    assert h.n == 3 and h.size == 2
    assert set(relab) == {0, 2, 3}
    tri = g.contract_edge(0, 1)
    assert tri.n == 3 and tri.size == 3  # C4 / e = C3


def test_relabel_preserves_structure():
    rng = random.Random(7)
    for _ in range(50):
        g = random_graph(rng, rng.randint(1, 12), 0.4)
        perm = list(range(g.n))
        rng.shuffle(perm)
        h = g.relabel(perm)
        assert h.size == g.size
        assert sorted(h.degrees()) == sorted(g.degrees())
        for u, v in g.edges():
            assert h.has_edge(perm[u], perm[v])


def test_disjoint_union_and_components():
    g = complete_graph(3).disjoint_union(path_graph(2)).disjoint_union(empty_graph(1))
    assert g.n == 6 and g.size == 4
    comps = g.components()
    assert sorted(len(vs) for vs, _kind in comps) == [1, 2, 3]


def test_bipartition():
    k33 = complete_bipartite(3, 3)
    parts = k33.bipartition()
    assert parts is not None
    assert sorted(map(len, parts)) == [3, 3]
    assert cycle_graph(5).bipartition() is None
    c6 = cycle_graph(6)
    parts = c6.bipartition()
    assert parts is not None and len(parts[0]) == 3


def test_graph6_known_values():
    # trivial encodings computable by hand from the format definition
    assert emit_graph6(empty_graph(0)) == "?"
    assert emit_graph6(empty_graph(1)) == "@"
    assert emit_graph6(complete_graph(2)) == "A_"
    assert parse_graph6("A_") == complete_graph(2)
    with pytest.raises(GraphError):
        parse_graph6("")
    with pytest.raises(GraphError):
        parse_graph6("A")  # truncated


def test_graph6_round_trip_matches_networkx():
    rng = random.Random(11)
    for _ in range(200):
        g = random_graph(rng, rng.randint(0, 14), 0.35)
        text = emit_graph6(g)
        assert parse_graph6(text) == g
        gx = nx.from_graph6_bytes(text.encode("ascii"))
        assert gx.number_of_nodes() == g.n
        assert sorted(gx.edges()) == g.edges()
        back = nx.to_graph6_bytes(gx, header=False).decode().strip()
        assert back == text


def test_degree_sequence_text():
    g = petersen()
    ds = g.degree_sequence()
    assert ds.order == 10 and ds.size == 15
    assert str(ds) == "(3^10)"
    assert DegreeSequence.parse("(3^10)") == ds
    mixed = DegreeSequence.parse("(1, 4^2, 5)")
    assert mixed.order == 4 and str(mixed) == "(5,4^2,1)"
    with pytest.raises(ValueError):
        DegreeSequence.parse("(3^)")
