"""Claim-by-claim verification pipeline with a structured report.

Each claim pins an expected value (tagged with its provenance) against an
observed value recomputed from scratch.  Claims are grouped; groups can
be run individually, under a wall-clock budget, and across worker
threads without changing any outcome.  The report serializes
deterministically: the canonical form excludes runtimes so reruns with
different thread counts compare byte-for-byte.
"""

from __future__ import annotations

import json
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Callable, Iterable, Sequence

from . import _kernels
from .apex import is_mm_n2a, is_n2a, is_n_apex, one_step_minors
from .canon import IsoSet, are_isomorphic, canonical_key
from .errors import BudgetExceeded
from .graph import (
    Graph,
    GraphError,
    complete_bipartite,
    emit_graph6,
    empty_graph,
)
from .enumeration import (
    Budget,
    DEFAULT_BUDGET,
    EnumSpec,
    enumerate_graphs,
    filter_catalog,
)
from .minors import (
    DEG4_FORM_KEYS,
    LemmaViolation,
    build_deg3_form,
    classify_extension,
    has_clean_path,
    is_split_k33,
    simplify,
    split_closure,
)
from .moves import heawood_family, ks_family, named_graphs, y_nabla
from .planarity import is_planar

REPORT_VERSION = 1

PROVENANCE_TAGS = ("literature", "derived", "definition")

PREAMBLE = (
    "Checks operate at the not-2-apex level: a graph whose every spatial "
    "embedding contains a knotted cycle is necessarily not 2-apex, so "
    "each sweep here is at least as strong a filter as the minimal one "
    "the classification needs."
)

GROUPS = (
    "families",
    "catalogs",
    "order14",
    "order10",
    "order11",
    "order12",
    "order13",
    "mmn2a",
    "move-images",
    "sweeps",
)

TIERS = ("family", "full")


@dataclass(frozen=True)
class Claim:
    """One verified statement: pinned expectation vs fresh observation."""

    id: str
    statement: str
    procedure: str
    expected: object
    observed: object
    provenance: str
    status: str  # "pass" | "fail" | "skipped(budget)"
    runtime: float
    witnesses: tuple[str, ...] = ()

    def __post_init__(self):
        if self.provenance not in PROVENANCE_TAGS:
            raise GraphError(
                f"claim {self.id}: untagged or unknown provenance "
                f"{self.provenance!r}"
            )

    def to_json(self, include_runtime: bool = True) -> dict:
        out = {
            "id": self.id,
            "statement": self.statement,
            "procedure": self.procedure,
            "expected": self.expected,
            "observed": self.observed,
            "provenance": self.provenance,
            "status": self.status,
            "witnesses": list(self.witnesses),
        }
        if include_runtime:
            out["runtime_seconds"] = round(self.runtime, 3)
        return out


def _claim(
    cid: str,
    statement: str,
    procedure: str,
    expected,
    provenance: str,
    fn: Callable[[], tuple[object, tuple[str, ...]]],
) -> Claim:
    """Run one check; fn returns (observed, witness graph6 records)."""
    t0 = time.monotonic()
    try:
        observed, witnesses = fn()
        status = "pass" if observed == expected else "fail"
    except BudgetExceeded as exc:
        observed, witnesses = f"incomplete: {exc}", ()
        status = "skipped(budget)"
    return Claim(
        id=cid,
        statement=statement,
        procedure=procedure,
        expected=expected,
        observed=observed,
        provenance=provenance,
        status=status,
        runtime=time.monotonic() - t0,
        witnesses=tuple(witnesses),
    )


class _Clock:
    """Wall-clock budget shared by the stages of one claim group."""

    def __init__(self, budget: Budget | None):
        self.budget = budget or DEFAULT_BUDGET
        self.until = time.monotonic() + self.budget.max_seconds

    def remaining(self) -> float:
        left = self.until - time.monotonic()
        if left <= 0:
            raise BudgetExceeded("time budget exceeded")
        return left

    def sub_budget(self) -> Budget:
        return Budget(self.remaining(), self.budget.max_classes)


def _pmap(fn: Callable, items: Sequence, threads: int) -> list:
    """Order-preserving map, optionally across a thread pool."""
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


# ---------------------------------------------------------------------------
# group: families


def verify_families(budget: Budget | None = None, threads: int = 1) -> list[Claim]:
    fam = heawood_family()
    ks = ks_family()
    claims = [
        _claim(
            "families.ks-count",
            "the triangle-to-Y closure of K7 has exactly 14 classes",
            "breadth-first closure over isomorphism classes, ty move only",
            14,
            "literature",
            lambda: (len(ks), ()),
        ),
        _claim(
            "families.heawood-count",
            "the closure of K7 under both moves has exactly 20 classes",
            "breadth-first closure over isomorphism classes, ty and "
            "size-preserving yt moves",
            20,
            "literature",
            lambda: (len(fam), ()),
        ),
        _claim(
            "families.extra-count",
            "both-move closure adds exactly 6 classes beyond the "
            "ty-only closure",
            "canonical key set difference of the two closures",
            6,
            "literature",
            lambda: (
                len(set(fam.keys) - set(ks.keys)),
                tuple(sorted(set(fam.keys) - set(ks.keys))),
            ),
        ),
        _claim(
            "families.ks-subset",
            "every ty-only class is also a both-move class",
            "canonical key set inclusion",
            True,
            "definition",
            lambda: (set(ks.keys) <= set(fam.keys), ()),
        ),
        _claim(
            "families.sizes",
            "every class in the both-move closure has size 21",
            "edge count of each closure representative",
            [21],
            "literature",
            lambda: (sorted({g.size for g in fam.classes}), ()),
        ),
        _claim(
            "families.triangle-free-orders",
            "exactly two closure classes are triangle-free, of orders "
            "12 and 14",
            "triangle scan over each closure representative",
            [12, 14],
            "literature",
            lambda: (
                sorted(g.n for g in fam.classes if g.is_triangle_free()),
                tuple(
                    k
                    for k, g in zip(fam.keys, fam.classes)
                    if g.is_triangle_free()
                ),
            ),
        ),
    ]
    return claims


# ---------------------------------------------------------------------------
# group: catalogs


def verify_catalogs(budget: Budget | None = None, threads: int = 1) -> list[Claim]:
    clock = _Clock(budget)
    claims: list[Claim] = []

    def enum(**kw) -> list[Graph]:
        return enumerate_graphs(
            EnumSpec(**kw), clock.sub_budget(), threads=threads
        )

    def catalog_claim(cid, statement, expected, maker):
        def run():
            cat = maker()
            return len(cat), tuple(cat.keys())

        claims.append(
            _claim(
                cid,
                statement,
                "exhaustive enumeration at the stated order and size, "
                "then property filtering per isomorphism class",
                expected,
                "literature",
                run,
            )
        )

    base_8_11 = enum(order=8, size=11)
    catalog_claim(
        "catalogs.nonplanar-8-11",
        "nonplanar (8,11) classes with min degree >= 1 number 11",
        11,
        lambda: filter_catalog(base_8_11, nonplanar=True, min_degree=1),
    )
    catalog_claim(
        "catalogs.nonplanar-8-11-mindeg2",
        "among those, classes with min degree >= 2 number 3",
        3,
        lambda: filter_catalog(base_8_11, nonplanar=True, min_degree=2),
    )
    base_7_10 = enum(order=7, size=10)
    catalog_claim(
        "catalogs.nonplanar-7-10",
        "nonplanar (7,10) classes with min degree >= 1 number 2",
        2,
        lambda: filter_catalog(base_7_10, nonplanar=True, min_degree=1),
    )
    base_7_11 = enum(order=7, size=11)
    catalog_claim(
        "catalogs.nonplanar-7-11",
        "nonplanar (7,11) classes with min degree >= 2 number 5",
        5,
        lambda: filter_catalog(base_7_11, nonplanar=True, min_degree=2),
    )
    cubic8 = enum(order=8, degree_sequence=(3,) * 8)
    catalog_claim(
        "catalogs.nonplanar-cubic-8",
        "nonplanar cubic classes of order 8 number 2",
        2,
        lambda: filter_catalog(cubic8, nonplanar=True),
    )
    base_7_5 = enum(order=7, size=5)
    catalog_claim(
        "catalogs.triangle-free-7-5",
        "triangle-free (7,5) classes with an isolated vertex and max "
        "degree <= 4 number 7",
        7,
        lambda: filter_catalog(
            base_7_5, triangle_free=True, isolated_vertex=True, max_degree=4
        ),
    )

    def count_7_5_exhaustive():
        cat = filter_catalog(
            base_7_5, triangle_free=True, isolated_vertex=True, max_degree=4
        )
        return len(cat), tuple(cat.keys())

    claims.append(
        _claim(
            "catalogs.triangle-free-7-5-exhaustive",
            "exhaustively there are 8 such classes: the published "
            "count of 7 misses one of the two order-6 trees with "
            "degree multiset (3,2,2,1,1,1); confirmed by independent "
            "brute force over all labeled edge sets",
            "same filter as catalogs.triangle-free-7-5; the expected "
            "value here is the recomputed one",
            8,
            "derived",
            count_7_5_exhaustive,
        )
    )

    def split_exception():
        eleven = filter_catalog(base_8_11, nonplanar=True, min_degree=1)
        misses = [e for e in eleven if is_split_k33(e.graph) is None]
        has_k2 = all(
            any(
                kind.kind == "tree" and kind.order == 2
                for _verts, kind in e.graph.components()
            )
            for e in misses
        )
        return (
            {"non_split_classes": len(misses), "each_has_k2_component": has_k2},
            tuple(e.key for e in misses),
        )

    claims.append(
        _claim(
            "catalogs.split-exception",
            "exactly one of the 11 nonplanar (8,11) classes is not a "
            "split K3,3, and it has a two-vertex tree component",
            "split recognizer on each class; component classification "
            "of the misses",
            {"non_split_classes": 1, "each_has_k2_component": True},
            "literature",
            split_exception,
        )
    )
    return claims


# ---------------------------------------------------------------------------
# order-restricted sweeps at size 21


def _degree_sequences(order: int, total: int, lo: int) -> list[tuple[int, ...]]:
    """All descending degree sequences of the given length and sum with
    entries in [lo, order-1]."""
    hi = order - 1
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], slots: int, left: int, cap: int) -> None:
        if slots == 0:
            if left == 0:
                out.append(tuple(prefix))
            return
        top = min(cap, left - lo * (slots - 1))
        for d in range(top, lo - 1, -1):
            prefix.append(d)
            rec(prefix, slots - 1, left - d, d)
            prefix.pop()

    if total % 2 == 0 and lo * order <= total <= hi * order:
        rec([], order, total, hi)
    return out


def _sweep_21(
    order: int,
    clock: _Clock,
    threads: int,
    triangle_free: bool,
) -> list[Graph]:
    """All (order, 21) classes with min degree 3, enumerated one degree
    sequence at a time so the dominance prune stays sharp."""
    classes: list[Graph] = []
    for seq in _degree_sequences(order, 42, 3):
        spec = EnumSpec(
            order=order,
            size=21,
            min_degree=3,
            triangle_free=triangle_free,
            degree_sequence=seq,
        )
        classes.extend(
            enumerate_graphs(spec, clock.sub_budget(), threads=threads)
        )
    return sorted(classes, key=canonical_key)


def _tree_component_violations(g: Graph) -> int:
    """Vertex pairs whose deletion leaves a tree component of order <= 3
    or one with a degree-2 vertex adjacent to a leaf, while g itself has
    no triangle.  Such a pair would contradict the small-tree-component
    property, which forces a triangle."""
    if not g.is_triangle_free():
        return 0
    bad = 0
    for a, b in combinations(range(g.n), 2):
        sub, _ = g.delete_vertices([a, b])
        for _verts, kind in sub.components():
            if kind.kind != "tree":
                continue
            if kind.order <= 3 or kind.has_deg2_adjacent_to_leaf:
                bad += 1
                break
    return bad


def verify_order_n(
    n: int, budget: Budget | None = None, threads: int = 1
) -> list[Claim]:
    if n not in (10, 11, 12, 13):
        raise GraphError(f"order sweep defined for 10..13, got {n}")
    clock = _Clock(budget)
    claims: list[Claim] = []
    state: dict = {}

    def survivors():
        cands = _sweep_21(n, clock, threads, triangle_free=True)
        state["candidates"] = cands
        flags = _pmap(is_n2a, cands, threads)
        surv = [g for g, f in zip(cands, flags) if f]
        state["survivors"] = surv
        return len(surv), tuple(canonical_key(g) for g in surv)

    claims.append(
        _claim(
            f"order{n}.n2a-survivors",
            f"among triangle-free ({n},21) classes of min degree 3, "
            + (
                "exactly one is not 2-apex"
                if n == 12
                else "every class is 2-apex"
            ),
            "per-degree-sequence exhaustive enumeration, then an exact "
            "2-apex decision per class",
            1 if n == 12 else 0,
            "literature",
            survivors,
        )
    )
    if n == 12:

        def is_h12():
            if "survivors" not in state:
                raise BudgetExceeded("survivor sweep skipped")
            surv = state["survivors"]
            if len(surv) != 1:
                return False, tuple(canonical_key(g) for g in surv)
            target = named_graphs()["H12"]
            return are_isomorphic(surv[0], target), (canonical_key(surv[0]),)

        claims.append(
            _claim(
                "order12.survivor-is-h12",
                "the unique order-12 survivor is the triangle-free "
                "order-12 closure class",
                "isomorphism test against the closure representative",
                True,
                "literature",
                is_h12,
            )
        )
    if n == 11:
        six = {
            (6, 4, 4, 4, 4, 4, 4, 3, 3, 3, 3),
            (5, 5, 5, 5, 4, 3, 3, 3, 3, 3, 3),
            (5, 5, 5, 4, 4, 4, 3, 3, 3, 3, 3),
            (5, 5, 4, 4, 4, 4, 4, 3, 3, 3, 3),
            (5, 4, 4, 4, 4, 4, 4, 4, 3, 3, 3),
            (4, 4, 4, 4, 4, 4, 4, 4, 4, 3, 3),
        }

        def six_gate():
            if "candidates" not in state:
                raise BudgetExceeded("candidate sweep skipped")
            bad = []
            for g in state["candidates"]:
                best = max(
                    g.degree(a) + g.degree(b) - (1 if g.has_edge(a, b) else 0)
                    for a, b in combinations(range(g.n), 2)
                )
                if best >= 10:
                    continue
                if tuple(sorted(g.degrees(), reverse=True)) not in six:
                    bad.append(canonical_key(g))
            return len(bad), tuple(bad)

        claims.append(
            _claim(
                "order11.six-sequence-gate",
                "every candidate with no vertex pair covering 10 or "
                "more edges has one of the six admissible degree "
                "sequences",
                "pairwise edge-coverage maximum per class, degree "
                "sequence membership check",
                0,
                "literature",
                six_gate,
            )
        )
    if n == 10:

        def cube_gate():
            cubic8 = enumerate_graphs(
                EnumSpec(order=8, degree_sequence=(3,) * 8, connected=True),
                clock.sub_budget(),
                threads=threads,
            )
            bip = [g for g in cubic8 if g.bipartition() is not None]
            balanced = all(
                {len(p) for p in g.bipartition()} == {4} for g in bip
            )
            return (
                {
                    "bipartite_cubic_order8": len(bip),
                    "balanced_parts": balanced,
                    "planar": all(is_planar(g) for g in bip),
                },
                tuple(canonical_key(g) for g in bip),
            )

        claims.append(
            _claim(
                "order10.cube-gate",
                "exactly one connected cubic order-8 class is "
                "bipartite; its parts are 4+4 and it is planar",
                "enumeration of connected cubic order-8 classes, "
                "2-colouring and planarity checks",
                {
                    "bipartite_cubic_order8": 1,
                    "balanced_parts": True,
                    "planar": True,
                },
                "literature",
                cube_gate,
            )
        )

    def tree_gate():
        if "survivors" not in state:
            raise BudgetExceeded("survivor sweep skipped")
        total = sum(
            _pmap(_tree_component_violations, state["survivors"], threads)
        )
        return total, ()

    claims.append(
        _claim(
            f"order{n}.tree-component-gate",
            "no survivor admits a vertex pair whose deletion leaves a "
            "tree component of order <= 3 or with a degree-2 vertex "
            "adjacent to a leaf (such a component forces a triangle)",
            "pair deletion sweep with component classification over "
            "the triangle-free survivors",
            0,
            "literature",
            tree_gate,
        )
    )
    return claims


def verify_order_14(
    budget: Budget | None = None,
    threads: int = 1,
    corpus: Iterable[Graph] | None = None,
) -> list[Claim]:
    clock = _Clock(budget)
    claims: list[Claim] = []
    state: dict = {}
    source = "generated" if corpus is None else "ingested"

    def corpus_count():
        if corpus is None:
            classes = enumerate_graphs(
                EnumSpec(order=14, degree_sequence=(3,) * 14, connected=True),
                clock.sub_budget(),
                threads=threads,
            )
        else:
            dedup = IsoSet()
            for g in corpus:
                if g.n != 14 or any(d != 3 for d in g.degrees()):
                    raise GraphError(
                        "ingested corpus entry is not cubic of order 14"
                    )
                if not g.is_connected():
                    raise GraphError("ingested corpus entry is disconnected")
                dedup.add(g)
            classes = list(dedup)
        state["classes"] = classes
        return len(classes), ()

    claims.append(
        _claim(
            "order14.corpus-count",
            "connected cubic classes of order 14 number 509",
            f"corpus source: {source}; canonical-augmentation "
            "enumeration or ingested graph6 census, deduplicated by "
            "canonical key",
            509,
            "derived",
            corpus_count,
        )
    )

    def n2a_count():
        if "classes" not in state:
            raise BudgetExceeded("corpus generation skipped")
        classes = state["classes"]
        flags = _pmap(is_n2a, classes, threads)
        surv = [g for g, f in zip(classes, flags) if f]
        state["survivors"] = surv
        return len(surv), tuple(canonical_key(g) for g in surv)

    claims.append(
        _claim(
            "order14.n2a-count",
            "exactly one connected cubic order-14 class is not 2-apex",
            "exact 2-apex decision on every corpus class",
            1,
            "literature",
            n2a_count,
        )
    )

    def survivor_is_c14():
        if "survivors" not in state:
            raise BudgetExceeded("survivor sweep skipped")
        surv = state["survivors"]
        if len(surv) != 1:
            return False, tuple(canonical_key(g) for g in surv)
        return (
            are_isomorphic(surv[0], named_graphs()["C14"]),
            (canonical_key(surv[0]),),
        )

    claims.append(
        _claim(
            "order14.survivor-is-c14",
            "the unique survivor is the order-14 closure class",
            "isomorphism test against the closure representative",
            True,
            "literature",
            survivor_is_c14,
        )
    )

    def survivor_girth():
        if "survivors" not in state:
            raise BudgetExceeded("survivor sweep skipped")
        surv = state["survivors"]
        return all(g.is_triangle_free() for g in surv) and bool(surv), ()

    claims.append(
        _claim(
            "order14.survivor-triangle-free",
            "the survivor is triangle-free (girth at least 4)",
            "triangle scan on the survivor",
            True,
            "derived",
            survivor_girth,
        )
    )
    return claims


# ---------------------------------------------------------------------------
# group: mmn2a


def verify_mmn2a(budget: Budget | None = None, threads: int = 1) -> list[Claim]:
    fam = heawood_family()
    names = named_graphs()
    claims: list[Claim] = []
    state: dict = {}

    def pass_count():
        flags = _pmap(is_mm_n2a, fam.classes, threads)
        state["flags"] = dict(zip(fam.keys, flags))
        fails = tuple(k for k, f in zip(fam.keys, flags) if not f)
        return sum(flags), fails

    claims.append(
        _claim(
            "mmn2a.family-count",
            "all 20 closure classes are not 2-apex with every one-step "
            "minor 2-apex",
            "exact 2-apex decisions on each class and on each of its "
            "edge deletions, edge contractions, and vertex deletions",
            20,
            "literature",
            pass_count,
        )
    )

    for label, alias in (("c14", "C14"), ("k7", "K7")):
        def minors_2apex(alias=alias):
            g = names[alias]
            flags = state.get("flags", {})
            key = canonical_key(g)
            if key in flags:
                return bool(flags[key]) and is_n2a(g), (key,)
            return is_mm_n2a(g), (key,)

        claims.append(
            _claim(
                f"mmn2a.{label}-one-step-minors",
                f"every one-step minor of {alias} is 2-apex and {alias} "
                "itself is not",
                "reuse of the family sweep result for the named class",
                True,
                "literature" if label == "c14" else "derived",
                minors_2apex,
            )
        )
    return claims


# ---------------------------------------------------------------------------
# group: move-images


def _strip_isolated(g: Graph) -> Graph:
    drop = [v for v in range(g.n) if g.degree(v) == 0]
    if not drop:
        return g
    sub, _ = g.delete_vertices(drop)
    return sub


def _yt_images(g: Graph) -> list[Graph]:
    return [y_nabla(g, v) for v in range(g.n) if g.degree(v) == 3]


def verify_move_images(
    tier: str = "family",
    budget: Budget | None = None,
    threads: int = 1,
) -> list[Claim]:
    if tier not in TIERS:
        raise GraphError(f"unknown tier {tier!r}; known: {', '.join(TIERS)}")
    clock = _Clock(budget)
    fam = heawood_family()
    fam_keys = set(fam.keys)
    claims: list[Claim] = []
    members = [g for g in fam.classes if g.n <= 10]

    def family_n2a():
        bad = []
        for g in members:
            for img in _yt_images(g):
                if not is_n2a(img):
                    bad.append(canonical_key(img))
        return len(bad), tuple(bad)

    claims.append(
        _claim(
            "move-images.family-n2a-violations",
            "deleting any degree-3 vertex of an order <= 10 closure "
            "class and joining its neighbours leaves a not-2-apex graph",
            "all degree-3 sites of the 10 closure classes of order 7 "
            "to 10; exact 2-apex decision per image",
            0,
            "literature",
            family_n2a,
        )
    )

    def family_closed():
        out = []
        for g in members:
            for img in _yt_images(g):
                if img.size != g.size:
                    continue  # a collapsed edge leaves the size level
                if canonical_key(_strip_isolated(img)) not in fam_keys:
                    out.append(canonical_key(img))
        return len(out), tuple(out)

    claims.append(
        _claim(
            "move-images.family-closed",
            "every size-preserving image of a closure class is again a "
            "closure class",
            "canonical key membership of each image in the closure",
            0,
            "definition",
            family_closed,
        )
    )

    if tier == "full":
        base: dict[int, list[Graph]] = {}
        for order in (7, 8, 9, 10):
            def sweep(order=order):
                base[order] = _sweep_21(
                    order, clock, threads, triangle_free=False
                )
                padded = list(base[order])
                for extra in (1, 2):
                    lower = order - extra
                    if lower in base:
                        pad = empty_graph(extra)
                        padded.extend(
                            g.disjoint_union(pad) for g in base[lower]
                        )
                if order == 7:
                    return 0, ()
                flags = _pmap(is_n2a, padded, threads)
                n2a = [g for g, f in zip(padded, flags) if f]
                base[f"n2a{order}"] = n2a
                bad = []
                for g in n2a:
                    for img in _yt_images(g):
                        if not is_n2a(img):
                            bad.append(canonical_key(img))
                return len(bad), tuple(bad)

            cid = f"move-images.full-counterexamples-order{order}"
            if order == 7:
                # order 7 only feeds the padding pool; K7 is the sole
                # (7,21) class and has no degree-3 vertex
                try:
                    sweep()
                except BudgetExceeded:
                    pass  # later sweeps will report skipped themselves
                continue
            claims.append(
                _claim(
                    cid,
                    f"no not-2-apex ({order},21) class of min degree 3 "
                    "(isolated-vertex paddings included) has a "
                    "degree-3 deletion image that is 2-apex",
                    "per-degree-sequence enumeration at size 21, exact "
                    "2-apex filter, then every degree-3 site",
                    0,
                    "literature",
                    sweep,
                )
            )

        def order9_identity():
            if "n2a9" not in base:
                raise BudgetExceeded("order-9 sweep skipped")
            plain = [
                canonical_key(g)
                for g in base["n2a9"]
                if min(g.degrees()) >= 3
            ]
            expect = sorted(k for k, g in zip(fam.keys, fam.classes) if g.n == 9)
            cores_ok = all(
                canonical_key(_strip_isolated(g)) in fam_keys
                for g in base["n2a9"]
            )
            return (
                {
                    "plain_matches_family": sorted(plain) == expect,
                    "padded_cores_in_family": cores_ok,
                },
                tuple(sorted(plain)),
            )

        claims.append(
            _claim(
                "move-images.order9-identity",
                "the not-2-apex (9,21) classes are exactly the order-9 "
                "closure classes, possibly with one or two isolated "
                "vertices added",
                "canonical key comparison of the sweep survivors "
                "against the closure, isolated vertices stripped for "
                "the padded ones",
                {
                    "plain_matches_family": True,
                    "padded_cores_in_family": True,
                },
                "literature",
                order9_identity,
            )
        )
    return claims


# ---------------------------------------------------------------------------
# group: sweeps (structure lemmas)


def verify_sweeps(budget: Budget | None = None, threads: int = 1) -> list[Claim]:
    clock = _Clock(budget)
    claims: list[Claim] = []
    levels = split_closure(complete_bipartite(3, 3), 4)
    oracle_keys = {canonical_key(g) for lvl in levels[:4] for g in lvl}

    def recognizer_agreement():
        disagreements = []

        def check(g: Graph) -> None:
            cert = is_split_k33(g)
            if (cert is not None) != (canonical_key(g) in oracle_keys):
                disagreements.append(canonical_key(g))
            elif cert is not None:
                cert.validate(g)

        for order in range(10):
            clock.remaining()
            if order <= 7:
                spec = EnumSpec(order=order)
            else:
                # only size order+3 can pass the euler-characteristic
                # gate; all other sizes are rejected by definition
                spec = EnumSpec(order=order, size=order + 3)
            for g in enumerate_graphs(spec, clock.sub_budget(), threads=threads):
                check(g)
        return len(disagreements), tuple(disagreements)

    claims.append(
        _claim(
            "sweeps.split-recognizer",
            "the split K3,3 recognizer agrees with the "
            "split-generation oracle on every class of order <= 9, "
            "and every certificate validates",
            "oracle = classes reachable from K3,3 by at most 3 vertex "
            "splits; recognizer run on the full census at orders <= 7 "
            "and on all classes of matching euler characteristic at "
            "orders 8 and 9",
            0,
            "derived",
            recognizer_agreement,
        )
    )

    def attachment_implication():
        bad = []
        for g in (h for lvl in levels[:3] for h in lvl):
            clock.remaining()
            cert = is_split_k33(g)
            a = g.n
            for bits in range(1, 1 << g.n):
                adj = list(g.adj) + [0]
                m = bits
                while m:
                    low = m & -m
                    w = low.bit_length() - 1
                    adj[w] |= 1 << a
                    adj[a] |= 1 << w
                    m ^= low
                ext = Graph(g.n + 1, adj)
                blockable = any(
                    not has_clean_path(ext, a, v, cert.originals)
                    for v in cert.originals
                )
                if blockable and not is_n_apex(ext, 1):
                    bad.append(emit_graph6(ext))
        return len(bad), tuple(bad)

    claims.append(
        _claim(
            "sweeps.blocked-attachment-implies-1-apex",
            "attaching a vertex a to a split K3,3 so that every path "
            "from a to some surviving vertex v passes another "
            "surviving vertex forces the result to be 1-apex",
            "exhaustive over splits with at most 2 split moves and "
            "every nonempty attachment set",
            0,
            "literature",
            attachment_implication,
        )
    )

    def extension_totality():
        deg3_key = canonical_key(build_deg3_form())
        seen3: set[str] = set()
        seen4: set[str] = set()
        unmatched = []
        for g in (h for lvl in levels[:4] for h in lvl):
            clock.remaining()
            for d in (3, 4):
                if g.n < d:
                    continue
                for picks in combinations(range(g.n), d):
                    adj = list(g.adj) + [0]
                    a = g.n
                    for w in picks:
                        adj[w] |= 1 << a
                        adj[a] |= 1 << w
                    ext = Graph(g.n + 1, adj)
                    try:
                        kind = classify_extension(ext, a)
                    except LemmaViolation:
                        unmatched.append(emit_graph6(ext))
                        continue
                    if kind.kind != "one-apex":
                        s, _tr = simplify(ext)
                        (seen3 if d == 3 else seen4).add(canonical_key(s))
        return (
            {
                "unmatched": len(unmatched),
                "deg3_forms": sorted(seen3) == [deg3_key],
                "deg4_within_frozen": seen4 <= set(DEG4_FORM_KEYS),
            },
            tuple(unmatched),
        )

    claims.append(
        _claim(
            "sweeps.extension-classification",
            "every split K3,3 plus one degree-3 or degree-4 vertex "
            "classifies as 1-apex or as one of the 1 + 7 frozen "
            "simplification forms; the unmatched error never fires",
            "exhaustive over splits with at most 3 split moves and all "
            "degree-3/4 attachments; simplification keys of the "
            "non-1-apex cases compared to the frozen constants",
            {"unmatched": 0, "deg3_forms": True, "deg4_within_frozen": True},
            "derived",
            extension_totality,
        )
    )

    def deg4_recompute():
        seen: set[str] = set()
        for g in (h for lvl in levels for h in lvl):
            clock.remaining()
            if g.n < 4:
                continue
            for picks in combinations(range(g.n), 4):
                adj = list(g.adj) + [0]
                a = g.n
                for w in picks:
                    adj[w] |= 1 << a
                    adj[a] |= 1 << w
                ext = Graph(g.n + 1, adj)
                if not is_n_apex(ext, 1):
                    s, _tr = simplify(ext)
                    seen.add(canonical_key(s))
        return sorted(seen) == sorted(DEG4_FORM_KEYS), tuple(sorted(seen))

    claims.append(
        _claim(
            "sweeps.deg4-form-recomputation",
            "the frozen set of 7 degree-4 simplification forms is "
            "exactly what the generating sweep produces (the deepest "
            "forms need 4 splits, one more than the totality sweep)",
            "exhaustive over splits with at most 4 split moves and all "
            "degree-4 attachments; non-1-apex simplification keys "
            "compared to the frozen constants as sets",
            True,
            "derived",
            deg4_recompute,
        )
    )
    return claims


# ---------------------------------------------------------------------------
# dispatch and reporting


def run_groups(
    names: Iterable[str] | str = "all",
    budget: Budget | None = None,
    threads: int = 1,
    tier: str = "family",
    corpus: Iterable[Graph] | None = None,
) -> list[Claim]:
    """Run the selected claim groups; "all" runs every group in order."""
    if isinstance(names, str):
        names = GROUPS if names == "all" else (names,)
    claims: list[Claim] = []
    for name in names:
        if name == "families":
            claims.extend(verify_families(budget, threads))
        elif name == "catalogs":
            claims.extend(verify_catalogs(budget, threads))
        elif name == "order14":
            claims.extend(verify_order_14(budget, threads, corpus))
        elif name in ("order10", "order11", "order12", "order13"):
            claims.extend(verify_order_n(int(name[5:]), budget, threads))
        elif name == "mmn2a":
            claims.extend(verify_mmn2a(budget, threads))
        elif name == "move-images":
            claims.extend(verify_move_images(tier, budget, threads))
        elif name == "sweeps":
            claims.extend(verify_sweeps(budget, threads))
        else:
            raise GraphError(
                f"unknown claim group {name!r}; known: {', '.join(GROUPS)}"
            )
    return claims


@dataclass
class VerificationReport:
    """Bundle of claims plus toolchain metadata.

    ``canonical_json`` omits runtimes, so reports from runs with
    different thread counts compare byte-for-byte.
    """

    claims: list[Claim]
    corpus_sources: dict[str, str] = field(default_factory=dict)
    version: int = REPORT_VERSION
    backend: str = _kernels.BACKEND

    @property
    def overall(self) -> str:
        if any(c.status == "fail" for c in self.claims):
            return "fail"
        if any(c.status.startswith("skipped") for c in self.claims):
            return "incomplete"
        return "pass"

    def to_json(self, include_runtime: bool = True) -> dict:
        out = {
            "report_version": self.version,
            "preamble": PREAMBLE,
            "overall": self.overall,
            "corpus_sources": dict(sorted(self.corpus_sources.items())),
            "claims": [
                c.to_json(include_runtime)
                for c in sorted(self.claims, key=lambda c: c.id)
            ],
        }
        if include_runtime:
            out["backend"] = self.backend
        return out

    def canonical_json(self) -> str:
        return json.dumps(self.to_json(include_runtime=False), sort_keys=True)

    def full_json(self) -> str:
        return json.dumps(self.to_json(include_runtime=True), indent=2)

    def summary_text(self) -> str:
        lines = []
        for c in sorted(self.claims, key=lambda c: c.id):
            lines.append(
                f"[{c.status:>16}] {c.id}: expected {c.expected!r}, "
                f"observed {c.observed!r} ({c.provenance}, "
                f"{c.runtime:.2f}s)"
            )
        lines.append(f"overall: {self.overall}")
        return "\n".join(lines)


def emit_report(
    claims: Iterable[Claim],
    corpus_sources: dict[str, str] | None = None,
) -> VerificationReport:
    return VerificationReport(
        claims=list(claims), corpus_sources=corpus_sources or {}
    )
