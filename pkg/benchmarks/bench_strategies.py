"""Time the mining strategies on a synthetic temporal graph.

Run: python benchmarks/bench_strategies.py [--n 200] [--timestamps 20]
"""
import argparse

import numpy as np

from spantruss.cli import run_bench
from spantruss.synthetic import markov_temporal_graph


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=200)
    ap.add_argument("--timestamps", type=int, default=20)
    ap.add_argument("--p", type=float, default=0.03)
    ap.add_argument("--stay", type=float, default=0.95)
    ap.add_argument("--communities", type=int, default=6)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--algos", default="baseline,streaming,heuristic")
    args = ap.parse_args()

    g = markov_temporal_graph(args.n, args.timestamps, args.p, args.stay,
                              np.random.default_rng(args.seed), communities=args.communities)
    print(g)
    algos = args.algos.split(",")
    run_bench(g, algos, "synthetic")  # compile kernels outside the timed run
    reports, agree = run_bench(g, algos, "synthetic")
    for r in reports:
        skips = "" if r.skip_count is None else f"  skips={r.skip_count}"
        print(f"{r.algorithm:<10} {r.wall_time_seconds:8.3f}s  results={r.result_count}{skips}")
    print("results agree" if agree else "RESULTS DIFFER")


if __name__ == "__main__":
    main()
