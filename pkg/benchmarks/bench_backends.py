"""Compare the pure-Python and compiled kernel backends.

Runs the same workloads through both implementations and prints a small
table.  Usage: python benchmarks/bench_backends.py [--quick]
"""

from __future__ import annotations

import argparse
import random
import time

from heawood._kernels import pure

try:
    from heawood._kernels import _speed
except ImportError:
    _speed = None


def _random_graphs(count, lo, hi, density, seed):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(lo, hi)
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < density:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        out.append((n, tuple(adj)))
    return out


def _time(fn, graphs, repeat):
    t0 = time.perf_counter()
    for _ in range(repeat):
        for n, adj in graphs:
            fn(n, adj)
    return time.perf_counter() - t0


def bench_kernels(quick: bool) -> list[tuple[str, float, float]]:
    repeat = 1 if quick else 3
    sparse = _random_graphs(200, 8, 16, 0.25, seed=1)
    dense = _random_graphs(100, 8, 14, 0.5, seed=2)
    rows = []
    for label, fn_name, graphs in (
        ("planar (sparse)", "planar", sparse),
        ("planar (dense)", "planar", dense),
        ("canon (sparse)", "canon", sparse),
        ("canon (dense)", "canon", dense),
        ("apex_witness k=2", None, dense),
    ):
        if fn_name is None:
            p = _time(lambda n, a: pure.apex_witness(n, a, 2), graphs, repeat)
            c = (
                _time(lambda n, a: _speed.apex_witness(n, a, 2), graphs, repeat)
                if _speed
                else float("nan")
            )
        else:
            p = _time(getattr(pure, fn_name), graphs, repeat)
            c = (
                _time(getattr(_speed, fn_name), graphs, repeat)
                if _speed
                else float("nan")
            )
        rows.append((label, p, c))
    return rows


def bench_enumeration(quick: bool) -> list[tuple[str, float, float]]:
    import importlib
    import os

    def run_once(force_pure: bool) -> float:
        env = os.environ.get("HEAWOOD_PURE")
        os.environ["HEAWOOD_PURE"] = "1" if force_pure else "0"
        import heawood._kernels as kernels
        import heawood.enumeration as enumeration

        importlib.reload(kernels)
        importlib.reload(enumeration)
        order = 8 if quick else 10
        spec = enumeration.EnumSpec(
            order=order,
            degree_sequence=(3,) * order,
            connected=True,
        )
        t0 = time.perf_counter()
        enumeration.enumerate_graphs(spec)
        dt = time.perf_counter() - t0
        if env is None:
            del os.environ["HEAWOOD_PURE"]
        else:
            os.environ["HEAWOOD_PURE"] = env
        importlib.reload(kernels)
        importlib.reload(enumeration)
        return dt

    label = "enumerate cubic " + ("8" if quick else "10")
    p = run_once(True)
    c = run_once(False) if _speed else float("nan")
    return [(label, p, c)]


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--quick", action="store_true", help="smaller workloads")
    args = parser.parse_args()
    if _speed is None:
        print("compiled backend not available; showing pure timings only")
    rows = bench_kernels(args.quick) + bench_enumeration(args.quick)
    width = max(len(r[0]) for r in rows)
    print(f"{'workload':<{width}}  {'pure':>9}  {'compiled':>9}  {'speedup':>8}")
    for label, p, c in rows:
        ratio = p / c if c == c and c > 0 else float("nan")
        print(f"{label:<{width}}  {p:>8.3f}s  {c:>8.3f}s  {ratio:>7.1f}x")


if __name__ == "__main__":
    main()
