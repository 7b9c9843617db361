"""Minor detection and split-K3,3 anatomy.

Contents: exact K5/K3,3 minor tests by connected branch-set search;
degree-0/1/2 simplification with a replayable trace; recognition of
split K3,3 graphs (graphs obtained from K3,3 by vertex splits) with a
validated certificate; nearest-part classification of vertices relative
to the underlying K3,3; clean-path queries; and classification of a
split K3,3 plus one degree-3/4 vertex against the known canonical forms.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Sequence

from . import apex
from .canon import are_isomorphic, canonical_key
from .graph import (
    MAX_ORDER,
    Graph,
    GraphError,
    _bits,
    complete_bipartite,
    complete_graph,
    emit_graph6,
    from_edges,
)

MINOR_ORDER_CAP = 16


class LemmaViolation(RuntimeError):
    """An input satisfied a theorem's hypotheses but broke its conclusion.

    This is a verification failure, never swallowed: it would mean either
    an implementation bug or a falsified statement.
    """


# ---------------------------------------------------------------------------
# minor detection


def _reduce_masks(n: int, adj: Sequence[int]) -> tuple[int, tuple[int, ...]]:
    """Suppress degree-0/1/2 vertices (parallel edges collapsed).

    Preserves presence of K5 and K3,3 minors in both directions.
    """
    rows = list(adj)
    alive = (1 << n) - 1
    changed = True
    while changed:
        changed = False
        for v in range(n):
            if not alive >> v & 1:
                continue
            d = rows[v].bit_count()
            if d > 2:
                continue
            if d == 2:
                m = rows[v]
                a = (m & -m).bit_length() - 1
                b = (m & (m - 1)).bit_length() - 1
                rows[a] |= 1 << b
                rows[b] |= 1 << a
            for w in _bits(rows[v]):
                rows[w] &= ~(1 << v)
            rows[v] = 0
            alive &= ~(1 << v)
            changed = True
    keep = list(_bits(alive))
    pos = {v: i for i, v in enumerate(keep)}
    out = []
    for v in keep:
        r = 0
        for w in _bits(rows[v]):
            r |= 1 << pos[w]
        out.append(r)
    return len(keep), tuple(out)


def _components_masks(n: int, adj: Sequence[int]) -> list[int]:
    unseen = (1 << n) - 1
    comps = []
    while unseen:
        comp = unseen & -unseen
        frontier = comp
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        unseen &= ~comp
    return comps


def _mask_neighbors(adj: Sequence[int], mask: int) -> int:
    out = 0
    for v in _bits(mask):
        out |= adj[v]
    return out & ~mask


def _has_clique(n: int, adj: Sequence[int], k: int) -> bool:
    def grow(chosen: int, allowed: int, need: int) -> bool:
        if need == 0:
            return True
        if allowed.bit_count() < need:
            return False
        m = allowed
        while m:
            low = m & -m
            v = low.bit_length() - 1
            if grow(chosen | low, allowed & adj[v] & ~((low << 1) - 1), need - 1):
                return True
            m ^= low
        return False

    return grow(0, (1 << n) - 1, k)


def _has_k33_subgraph(n: int, adj: Sequence[int]) -> bool:
    for trip in combinations(range(n), 3):
        common = adj[trip[0]] & adj[trip[1]] & adj[trip[2]]
        if common.bit_count() >= 3:
            return True
    return False


def _grow_branch_sets(
    adj: Sequence[int],
    sets: list[int],
    seeds: list[int],
    used: int,
    pairs: list[tuple[int, int]],
) -> bool:
    """Extend disjoint connected branch sets until all required pairs are
    adjacent.  Each set only absorbs vertices larger than its seed (the
    seed is normalized to be the minimum of its final set)."""
    for i, j in pairs:
        if not _mask_neighbors(adj, sets[i]) & sets[j]:
            # branch: some set of the missing pair must grow by a vertex
            # adjacent to it (connectivity of the final sets guarantees
            # completeness of this move)
            for s in (i, j):
                cand = _mask_neighbors(adj, sets[s]) & ~used
                cand &= ~((1 << (seeds[s] + 1)) - 1)
                for u in _bits(cand):
                    bit = 1 << u
                    sets[s] |= bit
                    if _grow_branch_sets(adj, sets, seeds, used | bit, pairs):
                        sets[s] &= ~bit
                        return True
                    sets[s] &= ~bit
            return False
    return True


def _component_has_minor(n: int, adj: Sequence[int], target: str) -> bool:
    if target == "k5":
        if n < 5 or sum(r.bit_count() for r in adj) // 2 < 10:
            return False
        if _has_clique(n, adj, 5):
            return True
        pairs = [(i, j) for i in range(5) for j in range(i + 1, 5)]
        for combo in combinations(range(n), 5):
            sets = [1 << v for v in combo]
            used = 0
            for v in combo:
                used |= 1 << v
            if _grow_branch_sets(adj, sets, list(combo), used, pairs):
                return True
        return False
    if target == "k33":
        if n < 6 or sum(r.bit_count() for r in adj) // 2 < 9:
            return False
        if _has_k33_subgraph(n, adj):
            return True
        pairs = [(i, j) for i in range(3) for j in range(3, 6)]
        for combo in combinations(range(n), 6):
            rest = combo[1:]
            for aextra in combinations(rest, 2):
                part_a = (combo[0],) + aextra
                part_b = tuple(v for v in rest if v not in aextra)
                seeds = list(part_a + part_b)
                sets = [1 << v for v in seeds]
                used = 0
                for v in seeds:
                    used |= 1 << v
                if _grow_branch_sets(adj, sets, seeds, used, pairs):
                    return True
        return False
    raise ValueError(target)


def _has_minor(g: Graph, target: str) -> bool:
    if g.n > MINOR_ORDER_CAP:
        raise GraphError(f"minor search capped at order {MINOR_ORDER_CAP}")
    n, adj = _reduce_masks(g.n, g.adj)
    for comp in _components_masks(n, adj):
        keep = list(_bits(comp))
        pos = {v: i for i, v in enumerate(keep)}
        sub = tuple(
            sum(1 << pos[w] for w in _bits(adj[v]) if comp >> w & 1) for v in keep
        )
        if _component_has_minor(len(keep), sub, target):
            return True
    return False


def has_k5_minor(g: Graph) -> bool:
    """Exact K5 minor containment (order <= 16)."""
    return _has_minor(g, "k5")


def has_k33_minor(g: Graph) -> bool:
    """Exact K3,3 minor containment (order <= 16)."""
    return _has_minor(g, "k33")


# ---------------------------------------------------------------------------
# simplification with trace

# step shapes: ("D0", v) ("D1", v) ("D2", v, a, b) ("CP", a, b)
Step = tuple


@dataclass(frozen=True)
class SimplificationTrace:
    """Replayable record of a degree-0/1/2 reduction.

    Steps refer to vertices of the input graph; ``vertex_map`` sends each
    surviving input vertex to its index in ``final``.  Replaying the
    steps on the input reproduces ``final``.
    """

    steps: tuple[Step, ...]
    final: Graph
    vertex_map: dict[int, int]

    def replay(self, g: Graph) -> Graph:
        nbr = {v: set(g.neighbors(v)) for v in range(g.n)}
        for step in self.steps:
            if step[0] in ("D0", "D1"):
                v = step[1]
                for w in nbr[v]:
                    nbr[w].discard(v)
                del nbr[v]
            elif step[0] == "D2":
                _tag, v, a, b = step
                for w in nbr[v]:
                    nbr[w].discard(v)
                del nbr[v]
                nbr[a].add(b)
                nbr[b].add(a)
            elif step[0] == "CP":
                pass  # the duplicate edge never exists in the simple type
            else:
                raise GraphError(f"unknown trace step {step!r}")
        survivors = sorted(nbr)
        pos = {v: i for i, v in enumerate(survivors)}
        return from_edges(
            len(survivors),
            sorted(
                (pos[u], pos[v])
                for u in survivors
                for v in nbr[u]
                if u < v
            ),
        )


def _simplify_dict(
    g: Graph, keep: frozenset[int] = frozenset()
) -> tuple[dict[int, set[int]], list[Step]]:
    nbr = {v: set(g.neighbors(v)) for v in range(g.n)}
    steps: list[Step] = []
    while True:
        candidates = [v for v in nbr if v not in keep and len(nbr[v]) <= 2]
        if not candidates:
            break
        # deterministic: lowest degree first, then lowest index
        v = min(candidates, key=lambda x: (len(nbr[x]), x))
        d = len(nbr[v])
        if d == 0:
            steps.append(("D0", v))
            del nbr[v]
        elif d == 1:
            steps.append(("D1", v))
            (w,) = nbr[v]
            nbr[w].discard(v)
            del nbr[v]
        else:
            a, b = sorted(nbr[v])
            nbr[a].discard(v)
            nbr[b].discard(v)
            del nbr[v]
            steps.append(("D2", v, a, b))
            if b in nbr[a]:
                steps.append(("CP", a, b))
            else:
                nbr[a].add(b)
                nbr[b].add(a)
    return nbr, steps


def _compact(nbr: dict[int, set[int]]) -> tuple[Graph, dict[int, int]]:
    survivors = sorted(nbr)
    pos = {v: i for i, v in enumerate(survivors)}
    g = from_edges(
        len(survivors),
        sorted((pos[u], pos[v]) for u in survivors for v in nbr[u] if u < v),
    )
    return g, pos


def simplify(g: Graph) -> tuple[Graph, SimplificationTrace]:
    """Repeatedly remove degree-0/1 vertices and smooth degree-2 vertices
    (collapsing any parallel edge) until minimum degree >= 3 or empty."""
    nbr, steps = _simplify_dict(g)
    final, vmap = _compact(nbr)
    return final, SimplificationTrace(tuple(steps), final, vmap)


def simplify_relative(g: Graph, a: int) -> tuple[Graph, dict[int, int]]:
    """Simplify but never remove vertex a; every other surviving vertex
    has degree >= 3.  Returns the result with its old->new label map."""
    if not 0 <= a < g.n:
        raise GraphError(f"vertex {a} not in graph")
    nbr, _steps = _simplify_dict(g, keep=frozenset([a]))
    return _compact(nbr)


# ---------------------------------------------------------------------------
# split K3,3 recognition


@dataclass(frozen=True)
class SplitK33Certificate:
    """Witness that a graph is obtained from K3,3 by vertex splits.

    ``originals`` are the six vertices surviving simplification, split
    into the two ``parts`` of the underlying bipartition.  Each of the 9
    underlying edges is realized by a path in ``paths`` (endpoints
    original, interior vertices of core degree 2).  ``hair`` lists the
    pendant-tree edges as (vertex, parent) pairs in deletion order; path
    edges and hair edges together partition the edge set.
    """

    originals: tuple[int, ...]
    parts: tuple[tuple[int, ...], tuple[int, ...]]
    paths: tuple[tuple[int, ...], ...]
    hair: tuple[tuple[int, int], ...]

    def path_between(self, u: int, v: int) -> tuple[int, ...]:
        for p in self.paths:
            if {p[0], p[-1]} == {u, v}:
                return p
        raise GraphError(f"no branch path between {u} and {v}")

    def to_json(self) -> dict:
        return {
            "originals": list(self.originals),
            "parts": [list(self.parts[0]), list(self.parts[1])],
            "paths": [list(p) for p in self.paths],
            "hair": [list(e) for e in self.hair],
        }

    def validate(self, g: Graph) -> None:
        if len(self.originals) != 6 or len(self.paths) != 9:
            raise GraphError("malformed certificate")
        seen_interior: set[int] = set()
        edges: set[tuple[int, int]] = set()
        for p in self.paths:
            if p[0] not in self.originals or p[-1] not in self.originals:
                raise GraphError("path endpoint not original")
            for x in p[1:-1]:
                if x in self.originals or x in seen_interior:
                    raise GraphError("paths not internally disjoint")
                seen_interior.add(x)
            for u, v in zip(p, p[1:]):
                if not g.has_edge(u, v):
                    raise GraphError("path edge absent from graph")
                edges.add((min(u, v), max(u, v)))
        for v, parent in self.hair:
            if not g.has_edge(v, parent):
                raise GraphError("hair edge absent from graph")
            edges.add((min(v, parent), max(v, parent)))
        if len(edges) != g.size:
            raise GraphError("certificate does not cover all edges")
        quotient_edges = {
            (min(p[0], p[-1]), max(p[0], p[-1])) for p in self.paths
        }
        if len(quotient_edges) != 9:
            raise GraphError("duplicated underlying edge")
        p0, p1 = self.parts
        if sorted(p0 + p1) != sorted(self.originals):
            raise GraphError("parts do not partition originals")
        for u, v in quotient_edges:
            if (u in p0) == (v in p0):
                raise GraphError("underlying edge inside one part")


def is_split_k33(g: Graph) -> SplitK33Certificate | None:
    """Certificate iff g is connected with chi = -3 and a K3,3 minor."""
    if g.n == 0 or not g.is_connected() or g.euler_characteristic() != -3:
        return None
    if not has_k33_minor(g):
        return None
    cert = _build_split_certificate(g)
    cert.validate(g)
    return cert


def _build_split_certificate(g: Graph) -> SplitK33Certificate:
    nbr = {v: set(g.neighbors(v)) for v in range(g.n)}
    hair: list[tuple[int, int]] = []
    # peel pendant trees; the 2-core that remains is canonical
    while True:
        leaves = [v for v in nbr if len(nbr[v]) <= 1]
        if not leaves:
            break
        v = min(leaves)
        if not nbr[v]:
            raise LemmaViolation(
                f"isolated vertex in a connected split candidate: {emit_graph6(g)}"
            )
        (parent,) = nbr[v]
        hair.append((v, parent))
        nbr[parent].discard(v)
        del nbr[v]
    originals = sorted(v for v in nbr if len(nbr[v]) >= 3)
    if len(originals) != 6 or any(len(nbr[v]) != 3 for v in originals):
        raise LemmaViolation(
            f"core degree profile is not (3^6,2^k): {emit_graph6(g)}"
        )
    orig_set = set(originals)
    # walk the nine branch paths
    paths: list[tuple[int, ...]] = []
    seen_starts: set[tuple[int, int]] = set()
    for o in originals:
        for x in sorted(nbr[o]):
            if (o, x) in seen_starts:
                continue
            path = [o]
            prev, cur = o, x
            while cur not in orig_set:
                path.append(cur)
                nxt = next(w for w in nbr[cur] if w != prev)
                prev, cur = cur, nxt
            path.append(cur)
            seen_starts.add((o, x))
            seen_starts.add((cur, prev))
            if cur == o:
                raise LemmaViolation(
                    f"branch path loops back to its origin: {emit_graph6(g)}"
                )
            paths.append(tuple(path))
    if len(paths) != 9:
        raise LemmaViolation(f"expected 9 branch paths: {emit_graph6(g)}")
    # underlying graph on the originals must be K3,3
    quotient = from_edges(
        6,
        sorted(
            {
                (originals.index(min(p[0], p[-1])), originals.index(max(p[0], p[-1])))
                for p in paths
            }
        ),
    )
    if not are_isomorphic(quotient, complete_bipartite(3, 3)):
        raise LemmaViolation(f"underlying graph is not K3,3: {emit_graph6(g)}")
    # bipartition: a side is a vertex plus its quotient non-neighbours
    q_adj = {o: set() for o in originals}
    for p in paths:
        q_adj[p[0]].add(p[-1])
        q_adj[p[-1]].add(p[0])
    first = originals[0]
    side_a = tuple(sorted({first} | (orig_set - q_adj[first] - {first})))
    side_b = tuple(sorted(orig_set - set(side_a)))
    return SplitK33Certificate(
        originals=tuple(originals),
        parts=(side_a, side_b),
        paths=tuple(sorted(paths, key=lambda p: (p[0], p[-1]))),
        hair=tuple(hair),
    )


# ---------------------------------------------------------------------------
# nearest parts and clean paths


@dataclass(frozen=True)
class NearestPart:
    """The original vertex or underlying edge a vertex is closest to."""

    kind: str  # "vertex" | "edge"
    vertices: tuple[int, ...]

    def __str__(self) -> str:
        if self.kind == "vertex":
            return f"Vertex({self.vertices[0]})"
        return f"Edge({self.vertices[0]},{self.vertices[1]})"


def nearest_part(cert: SplitK33Certificate, g: Graph, a: int) -> NearestPart:
    """Classify a vertex of a split K3,3 against the underlying K3,3."""
    if not 0 <= a < g.n:
        raise GraphError(f"vertex {a} not in graph")
    interior: dict[int, tuple[int, int]] = {}
    for p in cert.paths:
        ends = (min(p[0], p[-1]), max(p[0], p[-1]))
        for x in p[1:-1]:
            interior[x] = ends
    parent = {v: w for v, w in cert.hair}
    cur = a
    hops = 0
    while cur not in interior and cur not in cert.originals:
        if cur not in parent:
            raise GraphError(f"vertex {a} not resolvable against certificate")
        cur = parent[cur]
        hops += 1
        if hops > g.n:
            raise GraphError("certificate hair contains a cycle")
    if cur in cert.originals:
        return NearestPart("vertex", (cur,))
    return NearestPart("edge", interior[cur])


def has_clean_path(
    g: Graph, a: int, v: int, originals: Iterable[int]
) -> bool:
    """True iff some path from a to v avoids every original except v."""
    blocked = set(originals) - {v}
    if a in blocked:
        return False
    if a == v:
        return True
    seen = 1 << a
    frontier = seen
    block_mask = 0
    for b in blocked:
        block_mask |= 1 << b
    target = 1 << v
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= g.adj[u]
        if nxt & target:
            return True
        frontier = nxt & ~seen & ~block_mask
        seen |= frontier
    return False


# ---------------------------------------------------------------------------
# vertex splits (generation oracle)


def vertex_splits(g: Graph) -> list[Graph]:
    """All one-step vertex splits of g (order +1, size +1, chi preserved).

    A split replaces v by an adjacent pair (v, new), distributing v's
    neighbours between them.  Duplicates up to isomorphism are not
    removed here.
    """
    if g.n + 1 > MAX_ORDER:
        raise GraphError("order cap exceeded")
    out = []
    new = g.n
    for v in range(g.n):
        nb = g.neighbors(v)
        for mask in range(1 << len(nb)):
            moved = [nb[i] for i in range(len(nb)) if mask >> i & 1]
            adj = list(g.adj) + [0]
            for w in moved:
                adj[v] &= ~(1 << w)
                adj[w] &= ~(1 << v)
                adj[w] |= 1 << new
                adj[new] |= 1 << w
            adj[v] |= 1 << new
            adj[new] |= 1 << v
            out.append(Graph(g.n + 1, adj))
    return out


def split_closure(base: Graph, max_splits: int) -> list[list[Graph]]:
    """Isomorphism classes reachable from base by at most max_splits
    vertex splits, grouped by split count (level 0 is the base)."""
    from .canon import IsoSet

    seen = IsoSet([base])
    levels = [[base]]
    for _ in range(max_splits):
        nxt = []
        for g in levels[-1]:
            for h in vertex_splits(g):
                if seen.add(h):
                    nxt.append(h)
        levels.append(nxt)
    return levels


# ---------------------------------------------------------------------------
# degree-3/4 extension classification


def build_deg3_form() -> Graph:
    """The canonical non-1-apex form of a split K3,3 plus a degree-3
    vertex: three disjoint subdivided edges with the new vertex joined to
    the three subdivision vertices."""
    g = complete_bipartite(3, 3)
    edges = g.edges()
    # subdivide (0,3) -> 6, (1,4) -> 7, (2,5) -> 8
    edges = [e for e in edges if e not in [(0, 3), (1, 4), (2, 5)]]
    edges += [(0, 6), (3, 6), (1, 7), (4, 7), (2, 8), (5, 8)]
    edges += [(6, 9), (7, 9), (8, 9)]
    return from_edges(10, edges)


# Canonical keys (graph6) of the seven simplification forms a non-1-apex
# split K3,3 plus degree-4 vertex can take.  Frozen from the exhaustive
# sweep re-run in the test suite; sorted, so index = position + 1.
DEG4_FORM_KEYS: tuple[str, ...] = (
    "HBj@IUR",
    "I?LRCecq?",
    "I@OZCMgsG",
    "I@Q?~?ksG",
    "J?CPIUgpF_?",
    "J?Ca[WooN_?",
    "J@CaIQDaf_?",
)


@dataclass(frozen=True)
class ExtensionClass:
    """Outcome of classifying a split K3,3 plus one degree-3/4 vertex."""

    kind: str  # "one-apex" | "deg3" | "deg4"
    index: int | None = None  # 1..7 for kind == "deg4"

    def __str__(self) -> str:
        if self.kind == "deg4":
            return f"deg4[{self.index}]"
        return self.kind


def classify_extension(g: Graph, a: int) -> ExtensionClass:
    """Classify g = (split K3,3) + a where deg(a) in {3, 4}.

    Returns one-apex, or the canonical simplification form matched up to
    isomorphism.  An unmatched non-1-apex simplification raises
    LemmaViolation (it would falsify the classification statement).
    """
    if not 0 <= a < g.n:
        raise GraphError(f"vertex {a} not in graph")
    if g.degree(a) not in (3, 4):
        raise GraphError(f"vertex {a} must have degree 3 or 4")
    rest, _ = g.delete_vertices([a])
    if is_split_k33(rest) is None:
        raise GraphError("graph minus a is not a split K3,3")
    if apex.is_n_apex(g, 1):
        return ExtensionClass("one-apex")
    s, _trace = simplify(g)
    key = canonical_key(s)
    if key == canonical_key(build_deg3_form()):
        return ExtensionClass("deg3")
    if key in DEG4_FORM_KEYS:
        return ExtensionClass("deg4", DEG4_FORM_KEYS.index(key) + 1)
    raise LemmaViolation(
        f"non-1-apex extension simplifies to an unknown form: {key}"
    )
