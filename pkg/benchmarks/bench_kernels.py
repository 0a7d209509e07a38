"""Benchmark the numba kernels against their uncompiled fallback.

Run: python benchmarks/bench_kernels.py [--n 150] [--p 0.15]

Kernel-level timings call the compiled dispatcher and its ``py_func`` on the
same snapshot. The end-to-end row runs the streaming miner in a child
process with ``SPANTRUSS_DISABLE_NUMBA=1``.
"""
from __future__ import annotations

import argparse
import os
import subprocess
import sys
import time

import numpy as np

from spantruss import Snapshot, kernels
from spantruss._jit import ENABLE_NUMBA, py_func
from spantruss.synthetic import markov_temporal_graph


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return min(times)


def kernel_rows(n, p, repeat):
    g = markov_temporal_graph(n, 1, p, 1.0, np.random.default_rng(0))
    s = Snapshot(g.index)
    s.add_edges(g.edges_at[0])
    ix = g.index
    ids = s.edge_ids()
    sup = np.zeros(len(ix), dtype=np.int64)
    sup_args = (ids, ix.eu, ix.ev, ix.indptr, ix.nbr, ix.nbr_eid, s.adj, s.cnt, s.active, sup)
    kernels.edge_supports(*sup_args)
    peel_args = (ids, sup, ix.eu, ix.ev, ix.indptr, ix.nbr, ix.nbr_eid, s.adj, s.adj_eid, s.cnt, s.scratch())

    rows = []
    for name, kern, args in (("edge_supports", kernels.edge_supports, sup_args),
                             ("peel_trussness", kernels.peel_trussness, peel_args)):
        kern(*args)  # compile
        jit_t = best_of(lambda: kern(*args), repeat)
        py_t = best_of(lambda: py_func(kern)(*args), max(1, repeat // 3))
        rows.append((name, jit_t, py_t))
    return g, rows


_E2E = """
import time
import numpy as np
from spantruss import mine_streaming
from spantruss.synthetic import markov_temporal_graph

g = markov_temporal_graph({n}, {timestamps}, 0.05, 0.95, np.random.default_rng(1), communities=3)
mine_streaming(g)
times = []
for _ in range({repeat}):
    t0 = time.perf_counter()
    mine_streaming(g)
    times.append(time.perf_counter() - t0)
print(min(times))
"""


def end_to_end(n, timestamps, repeat):
    code = _E2E.format(n=n, timestamps=timestamps, repeat=repeat)
    out = {}
    for label, flag in (("numba", ""), ("fallback", "1")):
        env = dict(os.environ, SPANTRUSS_DISABLE_NUMBA=flag)
        proc = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
        out[label] = float(proc.stdout.strip())
    return out


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=150)
    ap.add_argument("--p", type=float, default=0.15)
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--skip-end-to-end", action="store_true")
    args = ap.parse_args()

    if not ENABLE_NUMBA:
        print("numba disabled via SPANTRUSS_DISABLE_NUMBA; nothing to compare")
        return
    g, rows = kernel_rows(args.n, args.p, args.repeat)
    print(f"snapshot: n={args.n}, edges={g.edges_at[0].size}")
    print(f"{'kernel':<18}{'numba ms':>12}{'python ms':>12}{'speedup':>10}")
    for name, jit_t, py_t in rows:
        print(f"{name:<18}{jit_t * 1e3:>12.3f}{py_t * 1e3:>12.3f}{py_t / jit_t:>9.1f}x")

    if not args.skip_end_to_end:
        e2e = end_to_end(60, 8, 3)
        print(f"\nmine_streaming n=60 |T|=8: numba {e2e['numba']:.3f}s, "
              f"fallback {e2e['fallback']:.3f}s, speedup {e2e['fallback'] / e2e['numba']:.1f}x")


if __name__ == "__main__":
    main()
