import random

import pytest

from heawood.graph import Graph, from_edges
from heawood.moves import named_graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    edges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if rng.random() < p
    ]
    return from_edges(n, edges)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    spokes = [(i, 5 + i) for i in range(5)]
    return from_edges(10, outer + inner + spokes)


@pytest.fixture(scope="session")
def k7() -> Graph:
    return named_graph("K7")


@pytest.fixture(scope="session")
def h12() -> Graph:
    return named_graph("H12")


@pytest.fixture(scope="session")
def c14() -> Graph:
    return named_graph("C14")
