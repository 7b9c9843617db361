"""Canonical labelling and isomorphism utilities.

The canonical key of a graph is the graph6 string of its canonical form,
so two graphs are isomorphic exactly when their keys are equal and keys
sort deterministically.
"""

from __future__ import annotations

from typing import Iterable, Iterator

from . import _kernels
from .graph import Graph, emit_graph6


def canonical_perm(g: Graph) -> tuple[int, ...]:
    """Permutation sending each vertex to its canonical position."""
    perm, _orbits = _kernels.canon(g.n, g.adj)
    return perm


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_perm(g))


def canonical_key(g: Graph) -> str:
    """graph6 of the canonical form; equal keys <=> isomorphic graphs."""
    return emit_graph6(canonical_form(g))


def automorphism_orbits(g: Graph) -> tuple[int, ...]:
    """orbits[v] is the least vertex in v's orbit under Aut(g)."""
    _perm, orbits = _kernels.canon(g.n, g.adj)
    return orbits

def orbit_representatives(g: Graph) -> list[int]:
    """One vertex per automorphism orbit, in increasing order."""
    orbits = automorphism_orbits(g)
    return sorted(set(orbits))


def are_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.size != h.size:
        return False
    return canonical_key(g) == canonical_key(h)


class IsoSet:
    """A set of graphs up to isomorphism, keyed by canonical key."""

    def __init__(self, graphs: Iterable[Graph] = ()):
        self._by_key: dict[str, Graph] = {}
        for g in graphs:
            self.add(g)

    def add(self, g: Graph) -> bool:
        """Insert; returns True if g was new up to isomorphism."""
        key = canonical_key(g)
        if key in self._by_key:
            return False
        self._by_key[key] = g
        return True

    def __contains__(self, g: Graph) -> bool:
        return canonical_key(g) in self._by_key

    def __len__(self) -> int:
        return len(self._by_key)

    def __iter__(self) -> Iterator[Graph]:
        """Iterate representatives in canonical key order (deterministic)."""
        for key in sorted(self._by_key):
            yield self._by_key[key]

    def keys(self) -> list[str]:
        return sorted(self._by_key)
