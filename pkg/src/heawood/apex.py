"""n-apex decisions and the not-2-apex predicates.

A graph is n-apex when deleting some set of at most n vertices leaves a
planar graph; N2A means not 2-apex, and MMN2A means N2A with every
one-step minor 2-apex (sufficient for minor minimality because 2-apex is
minor-closed).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from . import _kernels
from .graph import Graph, GraphError


@dataclass(frozen=True)
class ApexVerdict:
    """Result of an exhaustive n-apex search.

    ``witness`` is the lexicographically least planarising deletion set
    (smallest size first) when one exists; ``checked_subsets`` counts the
    vertex subsets examined, for exhaustion audits.
    """

    is_n_apex: bool
    witness: tuple[int, ...] | None
    checked_subsets: int

    def __bool__(self) -> bool:
        return self.is_n_apex


def is_n_apex(g: Graph, n: int) -> ApexVerdict:
    """Exact n-apex decision by subset search with early exit."""
    if n < 0 or n > g.n:
        raise GraphError(f"deletion budget {n} outside 0..{g.n}")
    witness, checked = _kernels.apex_witness(g.n, g.adj, n)
    return ApexVerdict(witness is not None, witness, checked)


def is_n2a(g: Graph) -> bool:
    """Not 2-apex: every deletion of two vertices leaves a nonplanar graph."""
    return not is_n_apex(g, 2)


def one_step_minors(g: Graph) -> Iterator[tuple[str, Graph]]:
    """All single edge deletions, single simple edge contractions, and
    single vertex deletions, tagged with a human-readable description."""
    for u, v in g.edges():
        yield f"delete edge ({u},{v})", g.remove_edge(u, v)
    for u, v in g.edges():
        yield f"contract edge ({u},{v})", g.contract_edge(u, v)
    for v in range(g.n):
        sub, _ = g.delete_vertices([v])
        yield f"delete vertex {v}", sub


def is_mm_n2a(g: Graph) -> bool:
    """N2A and every one-step minor is 2-apex.

    2-apex is closed under minors, so checking the one-step minors
    suffices for minor minimality.
    """
    if not is_n2a(g):
        return False
    for _desc, m in one_step_minors(g):
        if not is_n_apex(m, 2):
            return False
    return True
