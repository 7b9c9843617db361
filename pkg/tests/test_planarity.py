import random

import networkx as nx
import pytest

from heawood.graph import (
    GraphError,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    from_edges,
    path_graph,
)
from heawood.planarity import (
    check_planarity,
    is_planar,
    is_planar_via_minors,
    minor_free_check,
)

from conftest import petersen, random_graph


def test_known_graphs():
    assert is_planar(complete_graph(4))
    assert is_planar(cycle_graph(8))
    assert is_planar(path_graph(1))
    assert is_planar(complete_bipartite(2, 5))
    assert not is_planar(complete_graph(5))
    assert not is_planar(complete_bipartite(3, 3))
    assert not is_planar(petersen())
    assert not is_planar(complete_graph(7))


def test_verdict_witnesses():
    v = check_planarity(complete_graph(4))
    assert v and v.witness_kind is None
    v = check_planarity(complete_graph(5))
    assert not v and v.witness_kind == "K5"
    assert len(v.witness_edges) == 10
    assert v.branch_vertices == (0, 1, 2, 3, 4)
    v = check_planarity(complete_bipartite(3, 3))
    assert v.witness_kind == "K3,3" and len(v.branch_vertices) == 6
    # Petersen contains a K3,3 subdivision but no K5 subdivision
    v = check_planarity(petersen())
    assert v.witness_kind == "K3,3"
    # witness edges really are edges of the graph and themselves non-planar
    g = petersen()
    for u, w in v.witness_edges:
        assert g.has_edge(u, w)
    assert not is_planar(from_edges(g.n, v.witness_edges))


def test_agrees_with_networkx_on_randoms():
    rng = random.Random(31)
    for _ in range(500):
        n = rng.randint(1, 12)
        g = random_graph(rng, n, rng.choice([0.2, 0.35, 0.5]))
        gx = nx.Graph(g.edges())
        gx.add_nodes_from(range(n))
        assert is_planar(g) == nx.check_planarity(gx)[0]


def test_minor_oracle_route_is_independent_and_agrees():
    rng = random.Random(37)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 8), 0.4)
        assert is_planar(g) == is_planar_via_minors(g)
    with pytest.raises(GraphError):
        minor_free_check(complete_graph(11))


def test_edge_count_extremes():
    # quick-out regions of the left-right check
    assert is_planar(complete_graph(4))  # m < 9
    dense = complete_graph(8)  # m = 28 > 3n - 6 = 18
    assert not is_planar(dense)
    # maximal planar graph on 6 vertices: the octahedron, m = 3n - 6
    octa = from_edges(
        6,
        [
            (0, 1), (0, 2), (0, 3), (0, 4),
            (5, 1), (5, 2), (5, 3), (5, 4),
            (1, 2), (2, 3), (3, 4), (4, 1),
        ],
    )
    assert octa.size == 12 and is_planar(octa)
