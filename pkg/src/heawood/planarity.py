"""Planarity testing with certificates.

The fast path is the left-right criterion in the kernel backend.  For a
non-planar graph ``check_planarity`` also extracts a witness: an
edge-minimal non-planar subgraph, which is necessarily a subdivision of
K5 or K3,3.  ``is_planar_via_minors`` is a deliberately independent
oracle (K5/K3,3 minor search) used to cross-validate the fast path.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels
from .graph import Graph, GraphError, from_edges


def is_planar(g: Graph) -> bool:
    return _kernels.planar(g.n, g.adj)


@dataclass(frozen=True)
class PlanarityVerdict:
    """Outcome of a certified planarity check.

    For a non-planar graph ``witness_edges`` spans a subdivision of
    ``witness_kind`` ("K5" or "K3,3") inside the original graph, with
    ``branch_vertices`` its degree->=3 vertices (original labels).
    """

    planar: bool
    witness_kind: str | None = None
    witness_edges: tuple[tuple[int, int], ...] = ()
    branch_vertices: tuple[int, ...] = ()

    def __bool__(self) -> bool:
        return self.planar


def _smooth_classify(edges: list[tuple[int, int]]) -> tuple[str, tuple[int, ...]]:
    """Classify an edge-minimal non-planar subgraph.

    Returns ("K5" | "K3,3", branch vertices).  Smooths every degree-2
    vertex, then matches the result against K5 / K3,3 degree profiles.
    """
    adj: dict[int, set[int]] = {}
    for u, v in edges:
        adj.setdefault(u, set()).add(v)
        adj.setdefault(v, set()).add(u)
    changed = True
    while changed:
        changed = False
        for v in list(adj):
            nb = adj[v]
            if len(nb) == 2:
                a, b = sorted(nb)
                if b in adj[a]:
                    continue  # smoothing would collapse a parallel edge
                adj[a].discard(v)
                adj[b].discard(v)
                adj[a].add(b)
                adj[b].add(a)
                del adj[v]
                changed = True
    branch = tuple(sorted(adj))
    degs = sorted(len(adj[v]) for v in branch)
    if degs == [4] * 5:
        return "K5", branch
    if degs == [3] * 6:
        return "K3,3", branch
    raise GraphError("witness is not a Kuratowski subdivision")


def check_planarity(g: Graph) -> PlanarityVerdict:
    if is_planar(g):
        return PlanarityVerdict(True)
    # peel edges while the remainder stays non-planar; what survives is
    # edge-minimal non-planar, hence a Kuratowski subdivision
    edges = g.edges()
    i = 0
    while i < len(edges):
        trial = edges[:i] + edges[i + 1 :]
        h = from_edges(g.n, trial)
        if not is_planar(h):
            edges = trial
        else:
            i += 1
    kind, branch = _smooth_classify(edges)
    return PlanarityVerdict(False, kind, tuple(edges), branch)


def is_planar_via_minors(g: Graph) -> bool:
    """Independent oracle: planar iff no K5 minor and no K3,3 minor."""
    from .minors import has_k5_minor, has_k33_minor

    return not has_k5_minor(g) and not has_k33_minor(g)


def minor_free_check(g: Graph) -> bool:
    """Minor-based planarity oracle for cross-validation.

    Exponential in the worst case, so restricted to small orders; use
    ``is_planar`` for production queries.
    """
    if g.n > 10:
        raise GraphError(f"minor oracle limited to order <= 10, got {g.n}")
    return is_planar_via_minors(g)
