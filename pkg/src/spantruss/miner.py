"""Maximal span-truss mining.

Four strategies, all returning the same sorted list of :class:`SpanTruss`:

``naive``
    innermost truss of every non-empty interval, then a pairwise dominance
    filter. Uses the plain-Python reference truss code only, so it doubles
    as the oracle for the other three.
``baseline``
    one pass per start timestamp, end timestamps descending, with the
    per-end and previous-end lower bounds deciding maximality on the fly.
    Supports are recomputed from scratch for every interval.
``streaming``
    as ``baseline`` but the snapshot only ever grows within a pass, so
    supports are updated incrementally as edges are inserted.
``heuristic``
    as ``streaming`` but skips the decomposition when the number of edges
    with support above ``k - 2`` is unchanged by an insertion, ``k`` being
    the innermost order of the previous (longer) interval. Such an interval
    keeps order ``k`` and is dominated by the longer one.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, Mapping

import numpy as np

from . import kernels
from .tgraph import Interval, TemporalGraph, build_delta_sets
from .truss import (
    Snapshot,
    compute_supports,
    innermost_truss,
    insert_edges_update,
    reference_innermost,
    truss_decomposition,
)

__all__ = [
    "SpanTruss",
    "MinerStats",
    "LowerBoundState",
    "HeuristicMismatch",
    "filter_maximal",
    "mine_naive",
    "mine_baseline",
    "mine_streaming",
    "mine_heuristic",
    "MINERS",
    "mine",
]

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class SpanTruss:
    order: int
    span: Interval
    edges: frozenset[tuple[int, int]]

    def dominated_by(self, other: "SpanTruss") -> bool:
        # equal (k, span) means the same truss, not domination
        if (other.order, other.span) == (self.order, self.span):
            return False
        return other.order >= self.order and other.span.contains(self.span)

    @property
    def num_edges(self) -> int:
        return len(self.edges)


def output_order(t: SpanTruss):
    return (t.span.t_start, -t.span.t_end, -t.order)


@dataclass
class MinerStats:
    intervals: int = 0
    decompositions: int = 0
    support_builds: int = 0
    skips: int = 0


class HeuristicMismatch(AssertionError):
    """A skipped interval did not have the order the skip rule predicted."""


@dataclass
class LowerBoundState:
    """Per-end orders from the previous start (``k_prime``) and the order of
    the previous, one-longer interval in the current pass (``k_double_prime``)."""

    k_prime: np.ndarray
    k_double_prime: int = 0

    @classmethod
    def for_graph(cls, g: TemporalGraph) -> "LowerBoundState":
        return cls(np.zeros(g.t_max + 1, dtype=np.int64))

    def start_pass(self) -> None:
        self.k_double_prime = 0

    def bound(self, t_end: int) -> int:
        return max(int(self.k_prime[t_end]), self.k_double_prime)

    def record(self, t_end: int, order: int) -> None:
        self.k_double_prime = order
        if order > self.k_prime[t_end]:
            self.k_prime[t_end] = order


def filter_maximal(candidates: Mapping[Interval, SpanTruss]) -> list[SpanTruss]:
    items = list(candidates.values())
    keep = [c for c in items if not any(c.dominated_by(o) for o in items)]
    return sorted(keep, key=output_order)


def _stats(stats: MinerStats | None) -> MinerStats:
    return stats if stats is not None else MinerStats()


def mine_naive(g: TemporalGraph, stats: MinerStats | None = None) -> list[SpanTruss]:
    stats = _stats(stats)
    candidates: dict[Interval, SpanTruss] = {}
    for ts in range(g.t_max + 1):
        cur = g.edges_at[ts]
        te = ts
        while cur.size:
            k, edges = reference_innermost(g.pairs(cur))
            span = Interval(ts, te)
            candidates[span] = SpanTruss(k, span, edges)
            stats.intervals += 1
            stats.decompositions += 1
            te += 1
            if te > g.t_max:
                break
            cur = np.intersect1d(cur, g.edges_at[te], assume_unique=True)
    return filter_maximal(candidates)


def _emit(g, out, state, ts, te, labels) -> int:
    k, ids = innermost_truss(labels)
    if k > state.bound(te):
        out.append(SpanTruss(k, Interval(ts, te), frozenset(g.pairs(ids))))
    return k


def mine_baseline(g: TemporalGraph, stats: MinerStats | None = None) -> list[SpanTruss]:
    stats = _stats(stats)
    state = LowerBoundState.for_graph(g)
    snap = Snapshot(g.index)
    sup = np.zeros(g.num_edges, dtype=np.int64)
    out: list[SpanTruss] = []
    for ts in range(g.t_max + 1):
        if g.edges_at[ts].size == 0:
            continue
        state.start_pass()
        for te, edges in build_delta_sets(g, ts).reconstruct():
            snap.clear()
            snap.add_edges(edges)
            compute_supports(snap, sup)
            stats.support_builds += 1
            stats.intervals += 1
            stats.decompositions += 1
            k = _emit(g, out, state, ts, te, truss_decomposition(snap, sup))
            state.record(te, k)
    return sorted(out, key=output_order)


def mine_streaming(g: TemporalGraph, stats: MinerStats | None = None) -> list[SpanTruss]:
    stats = _stats(stats)
    state = LowerBoundState.for_graph(g)
    snap = Snapshot(g.index)
    sup = np.zeros(g.num_edges, dtype=np.int64)
    out: list[SpanTruss] = []
    for ts in range(g.t_max + 1):
        if g.edges_at[ts].size == 0:
            continue
        state.start_pass()
        delta = build_delta_sets(g, ts)
        snap.clear()
        for te, add in delta.additions():
            if te == delta.t_star:
                snap.add_edges(add)
                compute_supports(snap, sup)
                stats.support_builds += 1
            else:
                insert_edges_update(snap, sup, add)
            stats.intervals += 1
            stats.decompositions += 1
            k = _emit(g, out, state, ts, te, truss_decomposition(snap, sup))
            state.record(te, k)
    return sorted(out, key=output_order)


def mine_heuristic(
    g: TemporalGraph, stats: MinerStats | None = None, paranoid: bool = False
) -> list[SpanTruss]:
    """Streaming miner with decomposition skipping.

    With ``paranoid`` set every skipped interval is decomposed anyway and
    :class:`HeuristicMismatch` is raised if its order differs from the one
    the skip rule assumed.
    """
    stats = _stats(stats)
    state = LowerBoundState.for_graph(g)
    snap = Snapshot(g.index)
    sup = np.zeros(g.num_edges, dtype=np.int64)
    out: list[SpanTruss] = []
    for ts in range(g.t_max + 1):
        if g.edges_at[ts].size == 0:
            continue
        state.start_pass()
        delta = build_delta_sets(g, ts)
        snap.clear()
        k_prev = 0
        for te, add in delta.additions():
            stats.intervals += 1
            skip = False
            if te == delta.t_star:
                snap.add_edges(add)
                compute_supports(snap, sup)
                stats.support_builds += 1
            else:
                before = kernels.count_above(snap.edge_ids(), sup, k_prev - 2)
                insert_edges_update(snap, sup, add)
                skip = kernels.count_above(snap.edge_ids(), sup, k_prev - 2) == before

            if skip:
                k = k_prev
                stats.skips += 1
                if paranoid:
                    actual = truss_decomposition(snap, sup).max_order
                    if actual != k:
                        raise HeuristicMismatch(
                            f"interval [{ts},{te}]: skip assumed order {k}, decomposition gives {actual}"
                        )
            else:
                stats.decompositions += 1
                k = _emit(g, out, state, ts, te, truss_decomposition(snap, sup))
            state.record(te, k)
            k_prev = k
    return sorted(out, key=output_order)


MINERS: dict[str, Callable[..., list[SpanTruss]]] = {
    "naive": mine_naive,
    "baseline": mine_baseline,
    "streaming": mine_streaming,
    "heuristic": mine_heuristic,
}


def mine(g: TemporalGraph, algo: str = "heuristic", stats: MinerStats | None = None, **kwargs) -> list[SpanTruss]:
    try:
        fn = MINERS[algo]
    except KeyError:
        raise ValueError(f"unknown algorithm {algo!r}; choose from {sorted(MINERS)}") from None
    log.debug("mining %r with %s", g, algo)
    return fn(g, stats=stats, **kwargs)
