"""Exhaustive, duplicate-free generation of graph isomorphism classes.

Generation uses canonical augmentation: a graph of order k+1 is kept only
when the vertex added last is equivalent, under the automorphism group,
to the canonically chosen deletable vertex.  Walking the tree of such
augmentations from a single vertex yields exactly one representative per
isomorphism class at the target order, with admissible constraint pruning
along the way.  Two deletion strategies are available so heavy counts can
be cross-checked by two independent runs.

The module also ingests external graph6 corpora and filters catalogs.
"""

from __future__ import annotations

import hashlib
import json
import os
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Iterable, Iterator

from . import _kernels
from .canon import canonical_key
from .errors import BudgetExceeded
from .graph import (
    Graph,
    GraphError,
    emit_graph6,
    empty_graph,
    parse_graph6,
)

ENUM_ORDER_CAP = 16

STRATEGY_LAST = "last"  # canonical deletable vertex = highest canonical position
STRATEGY_FIRST = "first"  # = lowest canonical position
STRATEGIES = (STRATEGY_LAST, STRATEGY_FIRST)


@dataclass(frozen=True)
class Budget:
    """Resource caps for a generation run; exceeding one raises
    BudgetExceeded instead of silently truncating."""

    max_seconds: float = 7200.0
    max_classes: int = 5_000_000


DEFAULT_BUDGET = Budget()


@dataclass(frozen=True)
class EnumSpec:
    """Constraints for one enumeration run.

    ``size`` may be an exact count or an inclusive (lo, hi) range.
    Infeasible combinations yield empty results, not errors.
    """

    order: int
    size: int | tuple[int, int] | None = None
    min_degree: int = 0
    max_degree: int | None = None
    triangle_free: bool = False
    connected: bool = False
    degree_sequence: tuple[int, ...] | None = None

    def __post_init__(self):
        if not 0 <= self.order <= ENUM_ORDER_CAP:
            raise GraphError(f"order {self.order} outside 0..{ENUM_ORDER_CAP}")
        if self.min_degree < 0:
            raise GraphError("negative min_degree")
        if self.max_degree is not None and self.max_degree < 0:
            raise GraphError("negative max_degree")
        if self.degree_sequence is not None:
            object.__setattr__(
                self,
                "degree_sequence",
                tuple(sorted(self.degree_sequence, reverse=True)),
            )

    @property
    def size_range(self) -> tuple[int, int]:
        cap = self.order * (self.order - 1) // 2
        if self.size is None:
            lo, hi = 0, cap
        elif isinstance(self.size, int):
            lo = hi = self.size
        else:
            lo, hi = self.size
        return lo, min(hi, cap)

    def feasible(self) -> bool:
        lo, hi = self.size_range
        if lo > hi:
            return False
        ds = self.degree_sequence
        if ds is not None:
            if len(ds) != self.order:
                return False
            if sum(ds) % 2 or not lo <= sum(ds) // 2 <= hi:
                return False
            if ds and (ds[-1] < self.min_degree):
                return False
            if ds and self.max_degree is not None and ds[0] > self.max_degree:
                return False
            if ds and ds[0] > self.order - 1:
                return False
        if self.order and self.min_degree > self.order - 1:
            return False
        return True

    def effective_max_degree(self) -> int:
        d = self.order - 1 if self.order else 0
        if self.max_degree is not None:
            d = min(d, self.max_degree)
        if self.degree_sequence:
            d = min(d, self.degree_sequence[0])
        return max(d, 0)

    def accepts(self, g: Graph) -> bool:
        """Completion-time check of the non-hereditary constraints."""
        lo, hi = self.size_range
        if not lo <= g.size <= hi:
            return False
        degs = g.degrees()
        if degs and min(degs) < self.min_degree:
            return False
        if self.degree_sequence is not None:
            if tuple(sorted(degs, reverse=True)) != self.degree_sequence:
                return False
        if self.connected and not g.is_connected():
            return False
        if self.triangle_free and not g.is_triangle_free():
            return False
        return True

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "size": list(self.size) if isinstance(self.size, tuple) else self.size,
            "min_degree": self.min_degree,
            "max_degree": self.max_degree,
            "triangle_free": self.triangle_free,
            "connected": self.connected,
            "degree_sequence": list(self.degree_sequence)
            if self.degree_sequence
            else None,
        }


class _Deadline:
    def __init__(self, budget: Budget):
        self.until = time.monotonic() + budget.max_seconds
        self.max_classes = budget.max_classes
        self.produced = 0

    def tick(self, produced: int = 0) -> None:
        self.produced += produced
        if self.produced > self.max_classes:
            raise BudgetExceeded(
                f"class budget {self.max_classes} exceeded"
            )
        if time.monotonic() > self.until:
            raise BudgetExceeded("time budget exceeded")


def _dominates(target: tuple[int, ...], degs: list[int]) -> bool:
    """Sorted-descending degree dominance: every current degree fits under
    the matching target degree (admissible for induced subgraphs)."""
    cur = sorted(degs, reverse=True)
    if len(cur) > len(target):
        return False
    return all(c <= t for c, t in zip(cur, target))


def _prefix_sums_desc(ds: tuple[int, ...] | None, order: int, dmax: int):
    """top[k] = largest possible total degree of k deleted vertices."""
    tops = [0]
    if ds is None:
        for k in range(1, order + 1):
            tops.append(tops[-1] + dmax)
    else:
        for k in range(1, order + 1):
            tops.append(tops[-1] + (ds[k - 1] if k - 1 < len(ds) else 0))
    return tops


def _accept_child(g: Graph, strategy: str) -> str | None:
    """Canonical-augmentation acceptance; returns the child's canonical
    key when accepted (reusing the same labelling run), else None."""
    pos = g.n - 1 if strategy == STRATEGY_LAST else 0
    return _kernels.accept_child(g.n, g.adj, pos)


def _extend(
    g: Graph,
    spec: EnumSpec,
    strategy: str,
    deadline: _Deadline,
    out: list[Graph],
    tops: list[int],
) -> None:
    deadline.tick()
    n = spec.order
    if g.n == n:
        if spec.accepts(g):
            out.append(g)
            deadline.tick(1)
        return
    k = g.n
    dmax = spec.effective_max_degree()
    lo, hi = spec.size_range
    degs = g.degrees()
    child_keys: set[str] = set()
    adj = g.adj
    # only neighbourhood sets up to the degree cap and size cap can yield
    # admissible children, so iterate subsets by size instead of all 2^k
    open_verts = [v for v in range(k) if degs[v] + 1 <= dmax]
    remaining = n - (k + 1)
    gsize = g.size
    min_degree = spec.min_degree
    target_seq = spec.degree_sequence
    for popc in range(min(dmax, len(open_verts), hi - gsize) + 1):
        if gsize + popc < lo - tops[remaining]:
            continue
        for picks in combinations(open_verts, popc):
            mask = 0
            for v in picks:
                mask |= 1 << v
            if spec.triangle_free and any(adj[v] & mask for v in picks):
                continue
            # admissible prunes before constructing the child
            cdegs = degs[:]
            cdegs.append(popc)
            for v in picks:
                cdegs[v] += 1
            if any(d + remaining < min_degree for d in cdegs):
                continue
            if target_seq is not None and not _dominates(target_seq, cdegs):
                continue
            child = Graph._trusted(
                k + 1,
                tuple(
                    row | ((mask >> v & 1) << k) for v, row in enumerate(adj)
                )
                + (mask,),
            )
            key = _accept_child(child, strategy)
            if key is None or key in child_keys:
                continue
            child_keys.add(key)
            _extend(child, spec, strategy, deadline, out, tops)


def enumerate_graphs(
    spec: EnumSpec,
    budget: Budget | None = None,
    strategy: str = STRATEGY_LAST,
    threads: int = 1,
) -> list[Graph]:
    """One representative per isomorphism class matching spec, sorted by
    canonical key.  Exhaustive within the order cap."""
    if strategy not in STRATEGIES:
        raise GraphError(f"unknown strategy {strategy!r}")
    deadline = _Deadline(budget or DEFAULT_BUDGET)
    if not spec.feasible():
        return []
    if spec.order == 0:
        return [empty_graph(0)] if spec.accepts(empty_graph(0)) else []
    tops = _prefix_sums_desc(
        spec.degree_sequence, spec.order, spec.effective_max_degree()
    )
    out: list[Graph] = []
    start = empty_graph(1)
    if threads <= 1 or spec.order <= 3:
        _extend(start, spec, strategy, deadline, out, tops)
    else:
        # expand serially to a frontier, then fan subtrees across workers;
        # the final sort makes the result independent of scheduling
        frontier = [start]
        depth = 1
        while depth < spec.order - 1 and len(frontier) < 4 * threads:
            nxt: list[Graph] = []
            for f in frontier:
                if f.n == spec.order:
                    if spec.accepts(f):
                        out.append(f)
                    continue
                _extend_one_level(f, spec, strategy, deadline, nxt, tops)
            frontier = nxt
            depth += 1

        def work(f: Graph) -> list[Graph]:
            local: list[Graph] = []
            _extend(f, spec, strategy, deadline, local, tops)
            return local

        with ThreadPoolExecutor(max_workers=threads) as pool:
            for chunk in pool.map(work, frontier):
                out.extend(chunk)
    return sorted(out, key=canonical_key)


def _extend_one_level(
    g: Graph,
    spec: EnumSpec,
    strategy: str,
    deadline: _Deadline,
    out: list[Graph],
    tops: list[int],
) -> None:
    """Same child generation as _extend but stopping one level down
    (used to build a frontier for parallel expansion).  The relaxed
    sub-spec keeps the prunes admissible; the full spec re-applies in the
    workers."""
    sub = EnumSpec(
        order=g.n + 1,
        size=(0, spec.size_range[1]),
        min_degree=0,
        max_degree=spec.max_degree,
        triangle_free=spec.triangle_free,
        connected=False,
        degree_sequence=None,
    )
    _extend(g, sub, strategy, deadline, out, tops)


def dual_strategy_check(
    spec: EnumSpec, budget: Budget | None = None, threads: int = 1
) -> tuple[list[Graph], list[Graph]]:
    """Run both deletion strategies; callers compare canonical key sets."""
    a = enumerate_graphs(spec, budget, STRATEGY_LAST, threads)
    b = enumerate_graphs(spec, budget, STRATEGY_FIRST, threads)
    return a, b


# ---------------------------------------------------------------------------
# graph6 ingestion


def read_graph6_stream(
    source: Iterable[str], on_error: str = "raise"
) -> Iterator[tuple[int, Graph]]:
    """Yield (line_number, Graph) for each non-empty graph6 line.

    ``on_error``: "raise" aborts with the line number; "skip" drops the
    malformed line and continues.
    """
    if on_error not in ("raise", "skip"):
        raise GraphError(f"unknown on_error mode {on_error!r}")
    for lineno, line in enumerate(source, start=1):
        line = line.strip()
        if not line:
            continue
        try:
            g = parse_graph6(line)
        except GraphError as exc:
            if on_error == "raise":
                raise GraphError(f"line {lineno}: {exc}") from exc
            continue
        yield lineno, g


# ---------------------------------------------------------------------------
# catalogs


@dataclass(frozen=True)
class CatalogEntry:
    key: str
    graph: Graph
    properties: dict

    def to_json(self) -> dict:
        return {"key": self.key, **self.properties}


@dataclass(frozen=True)
class Catalog:
    entries: tuple[CatalogEntry, ...]

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def keys(self) -> list[str]:
        return [e.key for e in self.entries]

    def to_json(self) -> list[dict]:
        return [e.to_json() for e in self.entries]


def filter_catalog(
    graphs: Iterable[Graph],
    nonplanar: bool | None = None,
    min_degree: int | None = None,
    max_degree: int | None = None,
    triangle_free: bool | None = None,
    connected: bool | None = None,
    isolated_vertex: bool | None = None,
    predicate: Callable[[Graph], bool] | None = None,
) -> Catalog:
    """Deduplicate a stream by isomorphism class and keep the classes
    matching every given predicate, with a property record per class."""
    from .planarity import is_planar

    by_key: dict[str, CatalogEntry] = {}
    for g in graphs:
        key = canonical_key(g)
        if key in by_key:
            continue
        degs = g.degrees()
        planar = is_planar(g)
        if nonplanar is not None and planar == nonplanar:
            continue
        if min_degree is not None and (not degs or min(degs) < min_degree):
            continue
        if max_degree is not None and degs and max(degs) > max_degree:
            continue
        if triangle_free is not None and g.is_triangle_free() != triangle_free:
            continue
        if connected is not None and g.is_connected() != connected:
            continue
        if isolated_vertex is not None and (0 in degs) != isolated_vertex:
            continue
        if predicate is not None and not predicate(g):
            continue
        by_key[key] = CatalogEntry(
            key=key,
            graph=g,
            properties={
                "order": g.n,
                "size": g.size,
                "degree_sequence": str(g.degree_sequence()),
                "planar": planar,
                "triangle_free": g.is_triangle_free(),
                "connected": g.is_connected(),
            },
        )
    return Catalog(tuple(by_key[k] for k in sorted(by_key)))


# ---------------------------------------------------------------------------
# disk cache


def spec_hash(spec: EnumSpec) -> str:
    payload = json.dumps(spec.to_json(), sort_keys=True)
    return hashlib.sha256(payload.encode()).hexdigest()[:16]


def enumerate_cached(
    spec: EnumSpec,
    cache_dir: str,
    budget: Budget | None = None,
    strategy: str = STRATEGY_LAST,
    threads: int = 1,
) -> tuple[list[Graph], str]:
    """Enumerate with a disk cache keyed by the spec.

    Returns (classes, source) where source is "cache" or "generated".
    Cache files carry the spec as a JSON header line and one sorted
    graph6 record per line.
    """
    os.makedirs(cache_dir, exist_ok=True)
    path = os.path.join(cache_dir, f"enum-{spec_hash(spec)}-{strategy}.g6")
    header = "#spec " + json.dumps(spec.to_json(), sort_keys=True)
    if os.path.exists(path):
        with open(path) as fh:
            first = fh.readline().rstrip("\n")
            if first != header:
                raise GraphError(f"cache header mismatch in {path}")
            graphs = [g for _ln, g in read_graph6_stream(fh)]
        return graphs, "cache"
    graphs = enumerate_graphs(spec, budget, strategy, threads)
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        fh.write(header + "\n")
        for g in graphs:
            fh.write(canonical_key(g) + "\n")
    os.replace(tmp, path)
    return graphs, "generated"
