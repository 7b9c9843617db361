"""Triangle-Y transformations and their closure families.

``nabla_y`` replaces a triangle by a new degree-3 vertex (order +1, size
unchanged).  ``y_nabla`` deletes a degree-3 vertex and joins its
neighbours pairwise; when the neighbours were already independent this is
the exact inverse of ``nabla_y`` and preserves size.  ``closure``
computes the family of isomorphism classes reachable from seed graphs:
with both moves from K7 this is the 20-member Heawood family, with the
triangle-to-Y direction only it is the 14-member subfamily.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .canon import canonical_key
from .errors import BudgetExceeded
from .graph import MAX_ORDER, Graph, GraphError, complete_graph, parse_graph6

NABLA_Y = "ty"  # triangle -> Y
Y_NABLA = "yt"  # Y -> triangle
MOVE_KINDS = (NABLA_Y, Y_NABLA)


def triangles(g: Graph) -> list[tuple[int, int, int]]:
    """All triangles as sorted vertex triples."""
    out = []
    for a in range(g.n):
        for b in range(a + 1, g.n):
            if not g.has_edge(a, b):
                continue
            m = (g.adj[a] & g.adj[b]) >> (b + 1)
            c = b + 1
            while m:
                if m & 1:
                    out.append((a, b, c))
                m >>= 1
                c += 1
    return out


def nabla_y(g: Graph, t: Sequence[int]) -> Graph:
    """Delete the edges of triangle t, add a new degree-3 vertex joined to
    t's corners.  Preserves size, adds one vertex."""
    a, b, c = sorted(t)
    if len({a, b, c}) != 3 or not (
        g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    ):
        raise GraphError(f"({a},{b},{c}) is not a triangle")
    if g.n + 1 > MAX_ORDER:
        raise GraphError("order cap exceeded")
    h = g.remove_edge(a, b).remove_edge(a, c).remove_edge(b, c)
    adj = list(h.adj) + [0]
    new = g.n
    for x in (a, b, c):
        adj[x] |= 1 << new
        adj[new] |= 1 << x
    return Graph(g.n + 1, adj)


def y_nabla(g: Graph, v: int) -> Graph:
    """Delete degree-3 vertex v and make its neighbours mutually adjacent.

    Size is preserved exactly when the neighbours were pairwise
    non-adjacent (the inverse of ``nabla_y``); otherwise it drops.
    """
    if not 0 <= v < g.n or g.degree(v) != 3:
        raise GraphError(f"vertex {v} does not have degree 3")
    x, y, z = g.neighbors(v)
    h = g
    for p, q in ((x, y), (x, z), (y, z)):
        if not h.has_edge(p, q):
            h = h.add_edge(p, q)
    out, _ = h.delete_vertices([v])
    return out


def _y_nabla_sites(g: Graph, preserve_size: bool) -> list[int]:
    sites = []
    for v in range(g.n):
        if g.degree(v) != 3:
            continue
        if preserve_size:
            x, y, z = g.neighbors(v)
            if g.has_edge(x, y) or g.has_edge(x, z) or g.has_edge(y, z):
                continue
        sites.append(v)
    return sites


@dataclass
class ClosureFamily:
    """Closure of seed graphs under the allowed moves.

    ``classes`` holds one canonical representative per isomorphism class,
    sorted by (order, canonical key); ``move_edges`` records which move
    kind leads from one class to another.
    """

    classes: list[Graph]
    keys: list[str]
    move_edges: set[tuple[str, str, str]]
    seeds: list[str]
    moves: tuple[str, ...]
    max_order: int
    by_key: dict[str, Graph] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.classes)

    def to_json(self) -> dict:
        return {
            "moves": list(self.moves),
            "max_order": self.max_order,
            "seeds": sorted(self.seeds),
            "classes": [
                {
                    "key": key,
                    "order": g.n,
                    "size": g.size,
                    "degree_sequence": str(g.degree_sequence()),
                    "triangle_free": g.is_triangle_free(),
                }
                for key, g in zip(self.keys, self.classes)
            ],
            "move_edges": sorted(self.move_edges),
        }


def closure(
    seeds: Iterable[Graph],
    moves: Iterable[str] = MOVE_KINDS,
    max_order: int = MAX_ORDER,
    max_classes: int | None = None,
    preserve_size: bool = True,
) -> ClosureFamily:
    """Breadth-first closure over isomorphism classes.

    ``preserve_size`` restricts the Y-to-triangle move to sites where it
    inverts a triangle-to-Y move (neighbours pairwise non-adjacent), which
    keeps the closure inside one size level; this is the family-generating
    setting.
    """
    moves = tuple(moves)
    for kind in moves:
        if kind not in MOVE_KINDS:
            raise GraphError(f"unknown move kind {kind!r}")
    seed_list = list(seeds)
    if not seed_list:
        raise GraphError("closure needs at least one seed")
    reps: dict[str, Graph] = {}
    seed_keys = []
    frontier = []
    for g in seed_list:
        key = canonical_key(g)
        seed_keys.append(key)
        if key not in reps:
            reps[key] = g
            frontier.append((key, g))
    move_edges: set[tuple[str, str, str]] = set()
    while frontier:
        # process in deterministic order; expansion order cannot affect the
        # final class set, only discovery order
        frontier.sort(key=lambda item: (item[1].n, item[0]))
        key, g = frontier.pop(0)
        images: list[tuple[str, Graph]] = []
        if NABLA_Y in moves and g.n + 1 <= max_order:
            for t in triangles(g):
                images.append((NABLA_Y, nabla_y(g, t)))
        if Y_NABLA in moves:
            for v in _y_nabla_sites(g, preserve_size):
                images.append((Y_NABLA, y_nabla(g, v)))
        for kind, h in images:
            hkey = canonical_key(h)
            move_edges.add((key, hkey, kind))
            if hkey not in reps:
                reps[hkey] = h
                frontier.append((hkey, h))
                if max_classes is not None and len(reps) > max_classes:
                    raise BudgetExceeded(
                        f"closure exceeded {max_classes} classes"
                    )
    keys = sorted(reps, key=lambda k: (reps[k].n, k))
    classes = [reps[k] for k in keys]
    return ClosureFamily(
        classes=classes,
        keys=keys,
        move_edges=move_edges,
        seeds=seed_keys,
        moves=moves,
        max_order=max_order,
        by_key=reps,
    )


_FAMILY_CACHE: dict[tuple, ClosureFamily] = {}


def heawood_family() -> ClosureFamily:
    """Closure of K7 under both moves, capped at order 14 (20 classes)."""
    key = ("heawood",)
    if key not in _FAMILY_CACHE:
        _FAMILY_CACHE[key] = closure([complete_graph(7)], MOVE_KINDS, max_order=14)
    return _FAMILY_CACHE[key]


def ks_family() -> ClosureFamily:
    """Closure of K7 under the triangle-to-Y move only (14 classes)."""
    key = ("ks",)
    if key not in _FAMILY_CACHE:
        _FAMILY_CACHE[key] = closure([complete_graph(7)], (NABLA_Y,), max_order=14)
    return _FAMILY_CACHE[key]


def named_graph(name: str) -> Graph:
    """Resolve a builtin graph name.

    Names are assigned from the closure families, never from hard-coded
    adjacency lists, and only where (order, subfamily membership,
    triangle-freeness) determines the class uniquely.
    """
    aliases = named_graphs()
    if name not in aliases:
        raise GraphError(
            f"unknown builtin graph {name!r}; known: {', '.join(sorted(aliases))}"
        )
    return aliases[name]


def named_graphs() -> dict[str, Graph]:
    fam = heawood_family()
    by_order: dict[int, list[Graph]] = {}
    for g in fam.classes:
        by_order.setdefault(g.n, []).append(g)
    out: dict[str, Graph] = {}
    if len(by_order.get(7, [])) == 1:
        out["K7"] = by_order[7][0]
    if len(by_order.get(14, [])) == 1:
        out["C14"] = by_order[14][0]
    if len(by_order.get(13, [])) == 1:
        out["C13"] = by_order[13][0]
    tf12 = [g for g in by_order.get(12, []) if g.is_triangle_free()]
    if len(tf12) == 1:
        out["H12"] = tf12[0]
    ks12 = [
        g
        for g in ks_family().classes
        if g.n == 12 and not g.is_triangle_free()
    ]
    if len(ks12) == 1:
        out["C12"] = ks12[0]
    return out


def resolve_input(token: str) -> Graph:
    """A builtin name or a graph6 record."""
    try:
        return named_graph(token)
    except GraphError:
        return parse_graph6(token)
