"""Computational machinery for intrinsically-knotted graph classification.

Small-graph toolkit: immutable bitset graphs, exact planarity, canonical
labelling, K5/K33 minor detection, split K3,3 recognition, triangle-Y
moves and their closures, n-apex tests, constrained enumeration and a
claim verification pipeline.
"""

from .graph import (
    Graph,
    GraphError,
    DegreeSequence,
    complete_graph,
    complete_bipartite,
    cycle_graph,
    path_graph,
    empty_graph,
    parse_graph6,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "GraphError",
    "DegreeSequence",
    "complete_graph",
    "complete_bipartite",
    "cycle_graph",
    "path_graph",
    "empty_graph",
    "parse_graph6",
    "__version__",
]
