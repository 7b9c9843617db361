"""Command-line surface over the library.

Subcommands: ``query`` (per-graph predicates), ``closure`` (move
families), ``enumerate`` (exhaustive generation with filters), and
``verify`` (the claim pipeline).  Graphs come in as graph6 lines on
stdin or a file, or as builtin names resolved from the closure families
(K7, H12, C14, ...).  JSON output is deterministic: identical inputs and
flags give byte-identical output regardless of thread count.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable

from .apex import is_mm_n2a, is_n2a, is_n_apex
from .canon import canonical_key
from .errors import BudgetExceeded
from .graph import Graph, GraphError, emit_graph6
from .enumeration import (
    Budget,
    EnumSpec,
    enumerate_graphs,
    filter_catalog,
    read_graph6_stream,
)
from .minors import is_split_k33
from .moves import MOVE_KINDS, NABLA_Y, Y_NABLA, closure, resolve_input
from .planarity import is_planar
from . import verify as verify_mod

QUERY_KINDS = (
    "planar",
    "apex",
    "n2a",
    "mmn2a",
    "split-k33",
    "triangle-free",
    "chi",
    "degseq",
)


def _default_budget_seconds() -> float:
    raw = os.environ.get("HEAWOOD_BUDGET_SECONDS")
    if raw is None:
        return Budget().max_seconds
    try:
        return float(raw.rstrip("s"))
    except ValueError:
        raise GraphError(f"bad HEAWOOD_BUDGET_SECONDS value {raw!r}")


def _parse_budget(text: str | None) -> Budget:
    if text is None:
        return Budget(max_seconds=_default_budget_seconds())
    try:
        seconds = float(text.rstrip("s"))
    except ValueError:
        raise GraphError(f"bad budget {text!r}; expected seconds like 600s")
    if seconds <= 0:
        raise GraphError("budget must be positive")
    return Budget(max_seconds=seconds)


def _input_graphs(args) -> Iterable[tuple[str, Graph]]:
    """Yield (label, graph) from positional tokens and/or a stream."""
    got = False
    for token in args.graphs:
        got = True
        yield token, resolve_input(token)
    if args.file is not None:
        fh = sys.stdin if args.file == "-" else open(args.file)
        try:
            for lineno, g in read_graph6_stream(fh, on_error=args.on_error):
                got = True
                yield f"line {lineno}", g
        finally:
            if fh is not sys.stdin:
                fh.close()
    if not got:
        raise GraphError("no input graphs; pass names/graph6 or --file")


def _print_json(payload) -> None:
    print(json.dumps(payload, sort_keys=True))


def cmd_query(args) -> int:
    # the optional positional is a deletion budget only for apex queries;
    # for the others it is the first input graph
    if args.kind == "apex":
        if args.n is None:
            raise GraphError("query apex needs a deletion budget, e.g. apex 2")
        try:
            args.n = int(args.n)
        except ValueError:
            raise GraphError(f"bad deletion budget {args.n!r}")
    elif args.n is not None:
        args.graphs = [args.n] + args.graphs
        args.n = None
    results = []
    for label, g in _input_graphs(args):
        if args.kind == "planar":
            value = is_planar(g)
        elif args.kind == "apex":
            verdict = is_n_apex(g, args.n)
            value = {
                "is_n_apex": verdict.is_n_apex,
                "witness": list(verdict.witness)
                if verdict.witness is not None
                else None,
            }
        elif args.kind == "n2a":
            value = is_n2a(g)
        elif args.kind == "mmn2a":
            value = is_mm_n2a(g)
        elif args.kind == "split-k33":
            cert = is_split_k33(g)
            value = cert.to_json() if cert is not None else None
        elif args.kind == "triangle-free":
            value = g.is_triangle_free()
        elif args.kind == "chi":
            value = g.euler_characteristic()
        else:  # degseq
            value = str(g.degree_sequence())
        results.append({"input": label, "graph6": emit_graph6(g), "value": value})
    if args.format == "json":
        _print_json(results)
    else:
        for r in results:
            value = r["value"]
            if isinstance(value, bool):
                value = "true" if value else "false"
            elif isinstance(value, dict) or value is None:
                value = json.dumps(value, sort_keys=True)
            print(f"{r['input']}\t{value}")
    return 0


def cmd_closure(args) -> int:
    moves = {
        "ty": (NABLA_Y,),
        "yt": (Y_NABLA,),
        "both": MOVE_KINDS,
    }[args.moves]
    seeds = [resolve_input(tok) for tok in args.seed]
    fam = closure(seeds, moves, max_order=args.max_order)
    if args.format == "graph6":
        for key in fam.keys:
            print(key)
    else:
        _print_json(fam.to_json())
    return 0


def _parse_size(text: str | None):
    if text is None:
        return None
    if ":" in text:
        lo, hi = text.split(":", 1)
        return (int(lo), int(hi))
    return int(text)


def cmd_enumerate(args) -> int:
    spec = EnumSpec(
        order=args.order,
        size=_parse_size(args.size),
        min_degree=args.min_degree,
        max_degree=args.max_degree,
        triangle_free=args.triangle_free,
        connected=args.connected,
        degree_sequence=tuple(args.degree_sequence)
        if args.degree_sequence
        else None,
    )
    budget = _parse_budget(args.budget)
    try:
        graphs = enumerate_graphs(
            spec, budget, strategy=args.strategy, threads=args.threads
        )
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 2
    if args.nonplanar:
        graphs = [e.graph for e in filter_catalog(graphs, nonplanar=True)]
    if args.count:
        print(len(graphs))
    elif args.format == "json":
        _print_json(
            [
                {
                    "graph6": canonical_key(g),
                    "order": g.n,
                    "size": g.size,
                    "degree_sequence": str(g.degree_sequence()),
                }
                for g in graphs
            ]
        )
    else:
        for g in graphs:
            print(canonical_key(g))
    return 0


def cmd_verify(args) -> int:
    names = "all" if args.claims == ["all"] else args.claims
    for name in [] if names == "all" else names:
        if name not in verify_mod.GROUPS:
            raise GraphError(
                f"unknown claim group {name!r}; known: "
                + ", ".join(verify_mod.GROUPS)
            )
    budget = _parse_budget(args.budget)
    corpus = None
    sources = {}
    if args.corpus is not None:
        with open(args.corpus) as fh:
            corpus = [g for _ln, g in read_graph6_stream(fh)]
        sources["order14"] = f"ingested:{os.path.basename(args.corpus)}"
    claims = verify_mod.run_groups(
        names,
        budget=budget,
        threads=args.threads,
        tier=args.tier,
        corpus=corpus,
    )
    report = verify_mod.emit_report(claims, sources)
    if args.report is not None:
        with open(args.report, "w") as fh:
            fh.write(report.canonical_json() + "\n")
    if args.format == "json":
        print(report.full_json() if args.timings else report.canonical_json())
    else:
        print(report.summary_text())
    return 0 if report.overall == "pass" else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="heawood",
        description="Graph machinery for the 21-edge not-2-apex "
        "classification: queries, move closures, exhaustive "
        "enumeration, and the verification pipeline.",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=max(os.cpu_count() or 1, 1),
        help="worker threads (results are independent of this)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    q = sub.add_parser("query", help="per-graph predicates")
    q.add_argument("kind", choices=QUERY_KINDS)
    q.add_argument(
        "n",
        nargs="?",
        default=None,
        help="deletion budget (apex queries only)",
    )
    q.add_argument("graphs", nargs="*", help="builtin names or graph6 records")
    q.add_argument("--file", help="graph6 file, or - for stdin")
    q.add_argument(
        "--on-error",
        choices=("raise", "skip"),
        default="raise",
        help="malformed graph6 line handling",
    )
    q.add_argument("--format", choices=("text", "json"), default="text")
    q.set_defaults(func=cmd_query)

    c = sub.add_parser("closure", help="move-closure families")
    c.add_argument("--moves", choices=("ty", "yt", "both"), required=True)
    c.add_argument(
        "--seed",
        nargs="+",
        required=True,
        help="seed graphs (builtin names or graph6 records)",
    )
    c.add_argument("--max-order", type=int, default=32)
    c.add_argument("--format", choices=("json", "graph6"), default="json")
    c.set_defaults(func=cmd_closure)

    e = sub.add_parser("enumerate", help="exhaustive class generation")
    e.add_argument("--order", type=int, required=True)
    e.add_argument("--size", help="exact count or lo:hi range")
    e.add_argument("--min-degree", type=int, default=0)
    e.add_argument("--max-degree", type=int, default=None)
    e.add_argument("--triangle-free", action="store_true")
    e.add_argument("--connected", action="store_true")
    e.add_argument(
        "--degree-sequence", type=int, nargs="+", default=None
    )
    e.add_argument(
        "--nonplanar", action="store_true", help="keep only nonplanar classes"
    )
    e.add_argument("--count", action="store_true", help="print only the count")
    e.add_argument("--strategy", choices=("last", "first"), default="last")
    e.add_argument("--budget", help="wall-clock budget, e.g. 600s")
    e.add_argument("--format", choices=("graph6", "json"), default="graph6")
    e.set_defaults(func=cmd_enumerate)

    v = sub.add_parser("verify", help="claim-by-claim verification")
    v.add_argument(
        "--claims",
        nargs="+",
        default=["all"],
        help="claim groups to run, or 'all'",
    )
    v.add_argument(
        "--tier",
        choices=verify_mod.TIERS,
        default="family",
        help="depth of the move-image checks",
    )
    v.add_argument("--budget", help="wall-clock budget, e.g. 600s")
    v.add_argument(
        "--corpus", help="graph6 census file for the order-14 claims"
    )
    v.add_argument("--report", help="write the canonical JSON report here")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument(
        "--timings",
        action="store_true",
        help="include runtimes in JSON output (not byte-stable)",
    )
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
