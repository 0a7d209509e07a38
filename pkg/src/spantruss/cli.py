"""Command line front end.

    spantruss mine --input out.prosper-loans --format konect --window-seconds 604800
    spantruss bench --input data.tsv --format snap --algos baseline,streaming,heuristic
    spantruss decompose --input data.tsv --format snap --t-start 3 --t-end 5

Exit codes: 0 ok, 1 input error, 2 usage error, 3 strategies disagree.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
import time
from dataclasses import asdict, dataclass

from . import __version__
from .ingest import FORMATS, IngestConfig, load_dataset, load_graph
from .miner import MINERS, MinerStats
from .tgraph import Interval, TemporalGraph, interval_edges
from .truss import Snapshot, compute_supports, truss_decomposition

log = logging.getLogger("spantruss")

EXIT_OK, EXIT_INPUT, EXIT_USAGE, EXIT_MISMATCH = 0, 1, 2, 3


@dataclass
class RunReport:
    dataset: str
    algorithm: str
    wall_time_seconds: float
    result_count: int
    skip_count: int | None = None


class InputError(Exception):
    pass


def _setup_logging() -> None:
    level = os.environ.get("SPANTRUSS_LOG", "WARNING").upper()
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )


def _load(args) -> TemporalGraph:
    try:
        if args.format == "tgraph":
            with open(args.input) as fh:
                return load_graph(fh)
        cfg = IngestConfig(
            window_seconds=args.window_seconds,
            format=args.format,
            drop_self_loops=not args.keep_self_loops,
        )
        return load_dataset(args.input, cfg)
    except (OSError, ValueError, KeyError) as exc:
        raise InputError(str(exc)) from exc


def _positive_number(text: str):
    try:
        x = int(text)
    except ValueError:
        x = float(text)
    if x <= 0:
        raise argparse.ArgumentTypeError("must be positive")
    return x


def _algo_list(text: str) -> list[str]:
    names = [a.strip() for a in text.split(",") if a.strip()]
    if not names:
        raise argparse.ArgumentTypeError("need at least one algorithm")
    unknown = [a for a in names if a not in MINERS]
    if unknown:
        raise argparse.ArgumentTypeError(f"unknown algorithm(s): {', '.join(unknown)}")
    return names


def _edge_json(g: TemporalGraph, edges) -> list:
    return [[g.label(u), g.label(v)] for u, v in sorted(edges)]


def cmd_mine(args, out) -> int:
    g = _load(args)
    log.info("loaded %r", g)
    kwargs = {"paranoid": True} if args.paranoid and args.algo == "heuristic" else {}
    stats = MinerStats()
    t0 = time.perf_counter()
    result = MINERS[args.algo](g, stats=stats, **kwargs)
    log.info("%s: %d maximal span-trusses in %.3fs (%s)", args.algo, len(result), time.perf_counter() - t0, stats)
    for t in result:
        if t.order < args.min_k:
            continue
        rec = {"k": t.order, "t_start": t.span.t_start, "t_end": t.span.t_end, "num_edges": t.num_edges}
        if args.emit_edges:
            rec["edges"] = _edge_json(g, t.edges)
        out.write(json.dumps(rec) + "\n")
    return EXIT_OK


def run_bench(g: TemporalGraph, algos: list[str], dataset: str, paranoid: bool = False):
    """Run each strategy on ``g``; return reports and whether all results agree."""
    reports, results = [], []
    for name in algos:
        stats = MinerStats()
        kwargs = {"paranoid": True} if paranoid and name == "heuristic" else {}
        t0 = time.perf_counter()
        res = MINERS[name](g, stats=stats, **kwargs)
        elapsed = time.perf_counter() - t0
        results.append(res)
        reports.append(
            RunReport(dataset, name, elapsed, len(res), stats.skips if name == "heuristic" else None)
        )
    agree = all(r == results[0] for r in results[1:])
    return reports, agree


def cmd_bench(args, out) -> int:
    g = _load(args)
    dataset = args.dataset_name or os.path.basename(args.input)
    reports, agree = run_bench(g, args.algos, dataset, paranoid=args.paranoid)
    if args.output == "csv":
        w = csv.DictWriter(out, fieldnames=list(asdict(reports[0])), lineterminator="\n")
        w.writeheader()
        for r in reports:
            w.writerow(asdict(r))
    else:
        for r in reports:
            out.write(json.dumps(asdict(r)) + "\n")
    if not agree:
        counts = ", ".join(f"{r.algorithm}={r.result_count}" for r in reports)
        print(f"error: strategies returned different maximal sets ({counts})", file=sys.stderr)
        return EXIT_MISMATCH
    return EXIT_OK


def cmd_decompose(args, out) -> int:
    g = _load(args)
    try:
        span = Interval(args.t_start, args.t_end)
        span.check(g)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    ids = interval_edges(g, span)
    rec = {"t_start": span.t_start, "t_end": span.t_end, "innermost": None, "edges": []}
    if ids.size == 0:
        print(f"notice: no edge is active throughout {span}", file=sys.stderr)
    else:
        snap = Snapshot(g.index)
        snap.add_edges(ids)
        labels = truss_decomposition(snap, compute_supports(snap))
        rec["innermost"] = labels.max_order
        rec["edges"] = [
            {"u": g.label(u), "v": g.label(v), "trussness": k}
            for (u, v), k in sorted(labels.as_dict().items())
        ]
    out.write(json.dumps(rec) + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="spantruss", description="Mine maximal span-trusses of temporal graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def dataset_args(sp):
        sp.add_argument("--input", required=True, help="edge list or saved graph")
        sp.add_argument("--format", choices=FORMATS + ("tgraph",), default="konect",
                        help="input format; tgraph is the JSON graph document")
        sp.add_argument("--window-seconds", type=_positive_number, default=1,
                        help="length of one discrete timestamp in source time units")
        sp.add_argument("--keep-self-loops", action="store_true", help=argparse.SUPPRESS)

    sp = sub.add_parser("mine", help="emit maximal span-trusses as JSON lines")
    dataset_args(sp)
    sp.add_argument("--algo", choices=list(MINERS), default="heuristic")
    sp.add_argument("--min-k", type=int, default=2, help="drop results with order below K")
    sp.add_argument("--emit-edges", action="store_true")
    sp.add_argument("--paranoid", action="store_true", help="re-check every skipped interval (heuristic only)")
    sp.set_defaults(func=cmd_mine)

    sp = sub.add_parser("bench", help="time strategies and cross-check their results")
    dataset_args(sp)
    sp.add_argument("--algos", type=_algo_list, default=["baseline", "streaming", "heuristic"])
    sp.add_argument("--output", choices=("json", "csv"), default="json")
    sp.add_argument("--dataset-name")
    sp.add_argument("--paranoid", action="store_true")
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("decompose", help="truss decomposition of one interval")
    dataset_args(sp)
    sp.add_argument("--t-start", type=int, required=True)
    sp.add_argument("--t-end", type=int, required=True)
    sp.set_defaults(func=cmd_decompose)
    return p


def main(argv=None, out=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out if out is not None else sys.stdout)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
