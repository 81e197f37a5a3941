#!/usr/bin/env python3
"""Compare the compiled and pure-Python kernel backends.

Times the neighbourhood counting kernel and the exact search on the same
inputs for every available backend and prints a speedup table.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

from __future__ import annotations

import argparse
import time

import numpy as np

from pcfcolour import gen_random_graph, gen_subdivided_complete, greedy_hpcf
from pcfcolour._kernels import available_backends, get_backend


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def bench_counts(backend, g, colours, repeat):
    return _time(lambda: backend.neighbourhood_counts(g.indptr, g.indices, colours), repeat)


def bench_search(backend, g, h, k, repeat):
    order = np.asarray(sorted(range(g.n), key=lambda v: (-g.degree(v), v)), dtype=np.int64)
    return _time(
        lambda: backend.search_colouring(g.indptr, g.indices, h, k, False, order, 10**9, None),
        repeat,
    )


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    cases = []
    g = gen_random_graph(400, 0.2, seed=1)
    col, _ = greedy_hpcf(g, 2)
    cases.append(("counts G(400,0.2)", "counts", g, col.colours, None))
    g2 = gen_subdivided_complete(7)
    cases.append(("search K7-subdivided k=6", "search", g2, None, (1, 6)))
    g3 = gen_random_graph(30, 0.3, seed=5)
    cases.append(("refute G(30,0.3) h=2 k=6", "search", g3, None, (2, 6)))

    backs = available_backends()
    print(f"backends: {', '.join(backs)}")
    header = f"{'case':<28}" + "".join(f"{b:>14}" for b in backs) + f"{'speedup':>10}"
    print(header)
    print("-" * len(header))
    for name, kind, g, colours, hk in cases:
        times = []
        for b in backs:
            backend = get_backend(b)
            if kind == "counts":
                times.append(bench_counts(backend, g, colours, args.repeat))
            else:
                times.append(bench_search(backend, g, *hk, args.repeat))
        row = f"{name:<28}" + "".join(f"{t * 1e3:>12.2f}ms" for t in times)
        if len(times) == 2 and times[0] > 0:
            row += f"{times[1] / times[0]:>9.1f}x"
        print(row)


if __name__ == "__main__":
    main()
