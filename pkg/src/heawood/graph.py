"""Small simple undirected graphs as immutable bitset adjacency rows.

Vertices are dense indices 0..n-1 with n <= 32, so every neighbour set fits
in one machine word.  All operations are pure; Graph values are safe to
share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

MAX_ORDER = 32


class GraphError(ValueError):
    """Raised for malformed graph constructions or encodings."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """An immutable simple graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "_hash", "_size")

    n: int
    adj: tuple[int, ...]

    def __init__(self, n: int, adj: Iterable[int]):
        adj = tuple(adj)
        if not 0 <= n <= MAX_ORDER:
            raise GraphError(f"order {n} outside 0..{MAX_ORDER}")
        if len(adj) != n:
            raise GraphError("adjacency rows do not match order")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbour >= order")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
            for w in _bits(row):
                if not adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency {v},{w}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", hash((n, adj)))
        object.__setattr__(self, "_size", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def _trusted(cls, n: int, adj: tuple[int, ...]) -> "Graph":
        """Internal fast path: build from rows already known to be a valid
        symmetric, irreflexive adjacency (hot loops only)."""
        self = object.__new__(cls)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", hash((n, adj)))
        object.__setattr__(self, "_size", None)
        return self

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Graph({self.n}, edges={sorted(self.edges())})"

    # -- basic queries -------------------------------------------------

    @property
    def size(self) -> int:
        """Number of edges (computed once, then cached)."""
        if self._size is None:
            object.__setattr__(
                self, "_size", sum(row.bit_count() for row in self.adj) // 2
            )
        return self._size

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(_bits(self.adj[v]))

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for v in range(self.n):
            row = self.adj[v] >> (v + 1)
            for w in _bits(row):
                out.append((v, v + 1 + w))
        return out

    def vertices(self) -> range:
        return range(self.n)

    def euler_characteristic(self) -> int:
        """|G| - ||G||."""
        return self.n - self.size

    def is_triangle_free(self) -> bool:
        adj = self.adj
        for v in range(self.n):
            for w in _bits(adj[v] >> (v + 1)):
                if adj[v] & adj[v + 1 + w]:
                    return False
        return True

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            for v in _bits(frontier):
                nxt |= self.adj[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << self.n) - 1

    def degree_sequence(self) -> "DegreeSequence":
        return DegreeSequence(self.degrees())

    def bipartition(self) -> tuple[frozenset[int], frozenset[int]] | None:
        """A 2-colouring as two vertex sets, or None if an odd cycle exists.

        Isolated vertices land in the first set; the colouring is the
        deterministic BFS one, not canonical.
        """
        color = [-1] * self.n
        for start in range(self.n):
            if color[start] != -1:
                continue
            color[start] = 0
            queue = [start]
            while queue:
                v = queue.pop()
                for w in _bits(self.adj[v]):
                    if color[w] == -1:
                        color[w] = 1 - color[v]
                        queue.append(w)
                    elif color[w] == color[v]:
                        return None
        part0 = frozenset(v for v in range(self.n) if color[v] == 0)
        part1 = frozenset(v for v in range(self.n) if color[v] == 1)
        return part0, part1

    # -- edits ---------------------------------------------------------

    def add_edge(self, u: int, v: int) -> "Graph":
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise GraphError(f"bad edge ({u},{v})")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, adj)

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) absent")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj)

    def delete_vertices(self, drop: Iterable[int]) -> tuple["Graph", dict[int, int]]:
        """Induced subgraph on the complement of ``drop``.

        Returns the new graph together with the old->new relabeling map of
        the surviving vertices (order preserving).
        """
        dropset = set(drop)
        for v in dropset:
            if not 0 <= v < self.n:
                raise GraphError(f"vertex {v} not in graph")
        keep = [v for v in range(self.n) if v not in dropset]
        relabel = {v: i for i, v in enumerate(keep)}
        adj = []
        for v in keep:
            row = 0
            for w in _bits(self.adj[v]):
                if w in relabel:
                    row |= 1 << relabel[w]
            adj.append(row)
        return Graph(len(keep), adj), relabel

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Simple contraction of edge uv: merge v into u, drop loops and
        collapse parallel edges."""
        if not self.has_edge(u, v):
            raise GraphError(f"edge ({u},{v}) absent")
        merged = (self.adj[u] | self.adj[v]) & ~(1 << u) & ~(1 << v)
        adj = list(self.adj)
        adj[u] = merged
        for w in range(self.n):
            if merged >> w & 1:
                adj[w] |= 1 << u
            else:
                adj[w] &= ~(1 << u)
        g = Graph(self.n, adj)
        out, _ = g.delete_vertices([v])
        return out

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Relabel: vertex v becomes perm[v]."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise GraphError("not a permutation")
        adj = [0] * self.n
        for v in range(self.n):
            row = 0
            for w in _bits(self.adj[v]):
                row |= 1 << perm[w]
            adj[perm[v]] = row
        return Graph(self.n, adj)

    def disjoint_union(self, other: "Graph") -> "Graph":
        if self.n + other.n > MAX_ORDER:
            raise GraphError("union exceeds order cap")
        adj = list(self.adj) + [row << self.n for row in other.adj]
        return Graph(self.n + other.n, adj)

    def components(self) -> list[tuple[frozenset[int], "ComponentKind"]]:
        """Partition into connected components, each classified."""
        unseen = (1 << self.n) - 1
        out = []
        while unseen:
            start = (unseen & -unseen).bit_length() - 1
            comp = 1 << start
            frontier = comp
            while frontier:
                nxt = 0
                for v in _bits(frontier):
                    nxt |= self.adj[v]
                frontier = nxt & ~comp
                comp |= frontier
            unseen &= ~comp
            verts = frozenset(_bits(comp))
            out.append((verts, _classify_component(self, verts)))
        return out


@dataclass(frozen=True)
class DegreeSequence:
    """Multiset of vertex degrees, sorted descending.

    The textual form follows the exponent notation used for case analyses,
    e.g. ``(4^6,3^6)`` or ``(3^11,4,5)`` parsed in any order but always
    emitted descending.
    """

    degrees: tuple[int, ...]

    def __init__(self, degrees: Iterable[int]):
        object.__setattr__(
            self, "degrees", tuple(sorted(degrees, reverse=True))
        )

    def __str__(self) -> str:
        terms = []
        i = 0
        degs = self.degrees
        while i < len(degs):
            j = i
            while j < len(degs) and degs[j] == degs[i]:
                j += 1
            count = j - i
            terms.append(f"{degs[i]}^{count}" if count > 1 else f"{degs[i]}")
            i = j
        return "(" + ",".join(terms) + ")"

    @classmethod
    def parse(cls, text: str) -> "DegreeSequence":
        text = text.strip()
        if text.startswith("(") and text.endswith(")"):
            text = text[1:-1]
        degs: list[int] = []
        if text:
            for term in text.split(","):
                term = term.strip()
                if "^" in term:
                    d, k = term.split("^")
                    degs.extend([int(d)] * int(k))
                else:
                    degs.append(int(term))
        return cls(degs)

    @property
    def order(self) -> int:
        return len(self.degrees)

    @property
    def size(self) -> int:
        total = sum(self.degrees)
        if total % 2:
            raise GraphError("odd degree sum")
        return total // 2


@dataclass(frozen=True)
class ComponentKind:
    """Exact classification of one connected component."""

    kind: str  # "tree" | "cycle" | "other"
    order: int
    is_star: bool = False
    has_deg2_adjacent_to_leaf: bool = False
    cycle_length: int = 0


def _classify_component(g: Graph, verts: frozenset[int]) -> ComponentKind:
    k = len(verts)
    edges = sum(1 for u, v in g.edges() if u in verts) if k > 1 else 0
    if k - edges == 1:  # connected with chi = 1: tree
        degs = {v: g.degree(v) for v in verts}
        internal = [v for v in verts if degs[v] >= 2]
        is_star = len(internal) <= 1
        d2_leaf = any(
            degs[v] == 2 and any(degs[w] == 1 for w in g.neighbors(v) if w in verts)
            for v in verts
        )
        return ComponentKind("tree", k, is_star, d2_leaf)
    if edges == k and all(g.degree(v) == 2 for v in verts):
        return ComponentKind("cycle", k, cycle_length=k)
    return ComponentKind("other", k)


# -- constructors ------------------------------------------------------


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build the simple graph on 0..n-1 with exactly the given edges."""
    adj = [0] * n
    seen = set()
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u},{v}) out of range for order {n}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise GraphError(f"duplicate edge {key}")
        seen.add(key)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


def complete_graph(n: int) -> Graph:
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def complete_bipartite(a: int, b: int) -> Graph:
    left = (1 << a) - 1
    right = ((1 << (a + b)) - 1) ^ left
    return Graph(a + b, [right] * a + [left] * b)


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise GraphError("cycle needs at least 3 vertices")
    return from_edges(n, [(v, (v + 1) % n) for v in range(n)])


def path_graph(n: int) -> Graph:
    return from_edges(n, [(v, v + 1) for v in range(n - 1)])


def empty_graph(n: int = 0) -> Graph:
    return Graph(n, [0] * n)


# -- graph6 interchange ------------------------------------------------


def emit_graph6(g: Graph) -> str:
    """Standard graph6 encoding (orders 0..32 use the one-byte size)."""
    out = [chr(g.n + 63)]
    bits = []
    for col in range(1, g.n):
        for row in range(col):
            bits.append(g.adj[row] >> col & 1)
    for i in range(0, len(bits), 6):
        chunk = bits[i : i + 6]
        chunk += [0] * (6 - len(chunk))
        val = 0
        for b in chunk:
            val = val << 1 | b
        out.append(chr(val + 63))
    return "".join(out)


def parse_graph6(text: str) -> Graph:
    """Decode one graph6 record (optionally prefixed with the format header)."""
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[10:]
    if not text:
        raise GraphError("empty graph6 record")
    n = ord(text[0]) - 63
    if n == 63:
        raise GraphError("multi-byte graph6 orders (>62) not supported")
    if not 0 <= n <= MAX_ORDER:
        raise GraphError(f"graph6 order {n} outside 0..{MAX_ORDER}")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = text[1:]
    if len(body) != nbytes:
        raise GraphError(
            f"graph6 record for order {n} needs {nbytes} data bytes, got {len(body)}"
        )
    bits = []
    for ch in body:
        val = ord(ch) - 63
        if not 0 <= val < 64:
            raise GraphError(f"invalid graph6 byte {ch!r}")
        bits.extend((val >> shift) & 1 for shift in range(5, -1, -1))
    if any(bits[nbits:]):
        raise GraphError("nonzero graph6 padding")
    adj = [0] * n
    i = 0
    for col in range(1, n):
        for row in range(col):
            if bits[i]:
                adj[row] |= 1 << col
                adj[col] |= 1 << row
            i += 1
    return Graph(n, adj)
