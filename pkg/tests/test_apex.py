import random

import pytest

from heawood.apex import is_mm_n2a, is_n2a, is_n_apex, one_step_minors
from heawood.graph import (
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    from_edges,
)
from heawood.planarity import is_planar

from conftest import petersen, random_graph


def test_apex_knowns():
    assert is_n_apex(complete_graph(4), 0)
    assert not is_n_apex(complete_graph(5), 0)
    assert is_n_apex(complete_graph(5), 1)
    assert not is_n_apex(complete_graph(6), 1)  # K6 - v = K5
    assert is_n_apex(complete_graph(6), 2)
    # deleting any one vertex of Petersen leaves a K3,3 subdivision
    assert not is_n_apex(petersen(), 1)
    assert is_n_apex(petersen(), 2)
    assert is_n_apex(complete_bipartite(3, 3), 1)


def test_apex_witness_is_checked():
    rng = random.Random(43)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 9), 0.5)
        for k in (0, 1, 2):
            verdict = is_n_apex(g, k)
            if verdict:
                assert len(verdict.witness) <= k
                rest, _ = g.delete_vertices(verdict.witness)
                assert is_planar(rest)
            else:
                assert verdict.witness is None


def test_n2a(k7, h12, c14):
    assert is_n2a(k7)
    assert is_n2a(h12)
    assert is_n2a(c14)
    assert not is_n2a(complete_graph(6))
    assert not is_n2a(petersen())  # some pair deletion planarizes it


def test_one_step_minors_inventory():
    g = cycle_graph(4)
    steps = list(one_step_minors(g))
    assert sum(1 for k, _ in steps if k.startswith("delete vertex")) == 4
    assert sum(1 for k, _ in steps if k.startswith("delete edge")) == 4
    assert sum(1 for k, _ in steps if k.startswith("contract edge")) == 4
    for kind, h in steps:
        if kind.startswith("delete vertex"):
            assert h.n == 3
        else:
            assert h.size == 3


def test_mm_n2a(k7, c14):
    assert is_mm_n2a(k7)
    assert is_mm_n2a(c14)
    # adding an isolated vertex keeps N2A but breaks minimality: the
    # vertex-deletion minor dropping it is still N2A
    padded = k7.disjoint_union(empty_graph(1))
    assert is_n2a(padded)
    assert not is_mm_n2a(padded)
    assert not is_mm_n2a(complete_graph(6))  # not even N2A
