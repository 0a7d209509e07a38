"""Temporal graph model, intervals and per-interval edge sets.

Edges are undirected and stored canonically as ``(u, v)`` with ``u < v``.
Every distinct edge of a temporal graph gets an integer id (its rank in
lexicographic order), and each timestamp holds a sorted array of ids, so
interval edge sets are plain sorted-array intersections.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

__all__ = [
    "EdgeIndex",
    "TemporalGraph",
    "Interval",
    "DeltaEdgeSets",
    "EmptyStartError",
    "interval_contains",
    "interval_edges",
    "max_nonempty_end",
    "build_delta_sets",
]

_EMPTY = np.empty(0, dtype=np.int64)


class EmptyStartError(ValueError):
    """No edge is active at the requested start timestamp."""


class EdgeIndex:
    """Canonical edge universe with a CSR adjacency over edge ids.

    ``nbr[indptr[u]:indptr[u + 1]]`` are the universe neighbours of ``u`` in
    ascending order and ``nbr_eid`` the id of the matching edge. Snapshots
    borrow this layout for their slot buffers and for edge lookup.
    """

    def __init__(self, num_vertices: int, pairs: np.ndarray):
        pairs = np.asarray(pairs, dtype=np.int64).reshape(-1, 2)
        self.num_vertices = int(num_vertices)
        self.eu = np.ascontiguousarray(pairs[:, 0])
        self.ev = np.ascontiguousarray(pairs[:, 1])
        self.keys = self.eu * self.num_vertices + self.ev
        if self.keys.size > 1 and not np.all(self.keys[1:] > self.keys[:-1]):
            raise ValueError("edge universe must be sorted and duplicate free")

        m = self.eu.size
        src = np.concatenate([self.eu, self.ev])
        dst = np.concatenate([self.ev, self.eu])
        eid = np.concatenate([np.arange(m), np.arange(m)]).astype(np.int64)
        order = np.lexsort((dst, src))
        self.indptr = np.zeros(self.num_vertices + 1, dtype=np.int64)
        np.cumsum(np.bincount(src, minlength=self.num_vertices), out=self.indptr[1:])
        self.nbr = np.ascontiguousarray(dst[order])
        self.nbr_eid = np.ascontiguousarray(eid[order])

    @classmethod
    def from_pairs(cls, num_vertices: int, pairs: Iterable[tuple[int, int]]) -> "EdgeIndex":
        arr = _canonical_pairs(num_vertices, pairs)
        keys = np.unique(arr[:, 0] * num_vertices + arr[:, 1])
        return cls(num_vertices, np.column_stack([keys // num_vertices, keys % num_vertices]))

    def __len__(self) -> int:
        return int(self.eu.size)

    def lookup(self, u: int, v: int) -> int:
        """Edge id of ``{u, v}`` or -1."""
        if u > v:
            u, v = v, u
        key = u * self.num_vertices + v
        i = int(np.searchsorted(self.keys, key))
        if i < self.keys.size and self.keys[i] == key:
            return i
        return -1

    def ids_of(self, pairs: Iterable[tuple[int, int]]) -> np.ndarray:
        """Sorted ids of the given edges; every edge must be in the universe."""
        arr = _canonical_pairs(self.num_vertices, pairs)
        keys = np.unique(arr[:, 0] * self.num_vertices + arr[:, 1])
        ids = np.searchsorted(self.keys, keys)
        bad = (ids >= self.keys.size) | (self.keys[np.minimum(ids, self.keys.size - 1)] != keys)
        if keys.size and bad.any():
            k = int(keys[bad][0])
            raise KeyError(f"edge {(k // self.num_vertices, k % self.num_vertices)} not in graph")
        return ids.astype(np.int64)

    def pairs_of(self, ids: Iterable[int]) -> list[tuple[int, int]]:
        ids = np.asarray(ids, dtype=np.int64)
        return list(zip(self.eu[ids].tolist(), self.ev[ids].tolist()))


def _canonical_pairs(num_vertices: int, pairs: Iterable[tuple[int, int]]) -> np.ndarray:
    arr = np.asarray(list(pairs) if not isinstance(pairs, np.ndarray) else pairs, dtype=np.int64)
    arr = arr.reshape(-1, 2)
    if arr.size == 0:
        return arr
    if (arr < 0).any() or (arr >= num_vertices).any():
        raise ValueError(f"edge endpoint out of range [0, {num_vertices})")
    if (arr[:, 0] == arr[:, 1]).any():
        raise ValueError("self-loops are not allowed")
    return np.sort(arr, axis=1)


class TemporalGraph:
    """Discrete-time temporal graph over vertices ``0..num_vertices-1``.

    ``edges_at[t]`` is the sorted id array of the edges active at timestamp
    ``t``; ids refer to ``index``. Instances are treated as immutable.
    """

    def __init__(
        self,
        num_vertices: int,
        edges_at: Sequence[Iterable[tuple[int, int]]],
        labels: Sequence | None = None,
    ):
        if len(edges_at) == 0:
            raise ValueError("a temporal graph needs at least one timestamp")
        n = int(num_vertices)
        per_t = [_canonical_pairs(n, es) for es in edges_at]
        per_keys = [np.unique(a[:, 0] * n + a[:, 1]) for a in per_t]
        universe = np.unique(np.concatenate(per_keys)) if per_keys else _EMPTY
        self.num_vertices = n
        self.index = EdgeIndex(n, np.column_stack([universe // max(n, 1), universe % max(n, 1)]))
        self.edges_at: tuple[np.ndarray, ...] = tuple(
            np.searchsorted(universe, k).astype(np.int64) for k in per_keys
        )
        if labels is not None and len(labels) != n:
            raise ValueError("need exactly one label per vertex")
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_temporal_edges(
        cls,
        num_vertices: int,
        triples: Iterable[tuple[int, int, int]],
        t_max: int | None = None,
        labels: Sequence | None = None,
    ) -> "TemporalGraph":
        triples = list(triples)
        last = max((t for _, _, t in triples), default=0)
        t_max = last if t_max is None else t_max
        if last > t_max or any(t < 0 for _, _, t in triples):
            raise ValueError("timestamp outside [0, t_max]")
        buckets: list[list[tuple[int, int]]] = [[] for _ in range(t_max + 1)]
        for u, v, t in triples:
            buckets[t].append((u, v))
        return cls(num_vertices, buckets, labels=labels)

    @property
    def t_max(self) -> int:
        return len(self.edges_at) - 1

    @property
    def num_edges(self) -> int:
        """Distinct static edges over the whole time domain."""
        return len(self.index)

    @property
    def num_temporal_edges(self) -> int:
        return int(sum(e.size for e in self.edges_at))

    def edge_set(self, t: int) -> set[tuple[int, int]]:
        return set(self.index.pairs_of(self.edges_at[t]))

    def pairs(self, ids: Iterable[int]) -> list[tuple[int, int]]:
        return self.index.pairs_of(ids)

    def label(self, v: int):
        return self.labels[v] if self.labels is not None else v

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TemporalGraph):
            return NotImplemented
        return (
            self.num_vertices == other.num_vertices
            and self.t_max == other.t_max
            and self.labels == other.labels
            and all(self.edge_set(t) == other.edge_set(t) for t in range(self.t_max + 1))
        )

    def __repr__(self) -> str:
        return (
            f"TemporalGraph(n={self.num_vertices}, t_max={self.t_max}, "
            f"edges={self.num_edges}, temporal_edges={self.num_temporal_edges})"
        )


@dataclass(frozen=True, order=True)
class Interval:
    """Inclusive timestamp span ``[t_start, t_end]``."""

    t_start: int
    t_end: int

    def __post_init__(self):
        if not 0 <= self.t_start <= self.t_end:
            raise ValueError(f"invalid interval [{self.t_start}, {self.t_end}]")

    def contains(self, inner: "Interval") -> bool:
        return self.t_start <= inner.t_start and self.t_end >= inner.t_end

    def check(self, g: TemporalGraph) -> None:
        if self.t_end > g.t_max:
            raise ValueError(f"interval {self} outside time domain [0, {g.t_max}]")

    def __len__(self) -> int:
        return self.t_end - self.t_start + 1

    def __str__(self) -> str:
        return f"[{self.t_start},{self.t_end}]"


def interval_contains(outer: Interval, inner: Interval) -> bool:
    return outer.contains(inner)


def interval_edges(g: TemporalGraph, d: Interval) -> np.ndarray:
    """Ids of the edges active at every timestamp of ``d``."""
    d.check(g)
    cur = g.edges_at[d.t_start]
    for t in range(d.t_start + 1, d.t_end + 1):
        if cur.size == 0:
            break
        cur = np.intersect1d(cur, g.edges_at[t], assume_unique=True)
    return cur


def max_nonempty_end(g: TemporalGraph, t_start: int) -> int | None:
    """Largest ``t_end`` with a non-empty ``[t_start, t_end]`` edge set."""
    cur = g.edges_at[t_start]
    if cur.size == 0:
        return None
    t = t_start
    while t < g.t_max:
        nxt = np.intersect1d(cur, g.edges_at[t + 1], assume_unique=True)
        if nxt.size == 0:
            break
        cur, t = nxt, t + 1
    return t


@dataclass
class DeltaEdgeSets:
    """Edge sets for all intervals starting at ``t_start``, in O(|E|) space.

    ``base`` holds the edges of ``[t_start, t_star]``; ``removed_at[i]`` holds
    the edges alive throughout ``[t_start, t_start + i]`` that vanish at
    ``t_start + i + 1``. Walking ``t_end`` downwards from ``t_star`` and adding
    ``removed(t_end)`` each step rebuilds every interval edge set.
    """

    t_start: int
    t_star: int
    base: np.ndarray
    removed_at: list[np.ndarray] = field(default_factory=list)

    def removed(self, t_end: int) -> np.ndarray:
        if not self.t_start <= t_end < self.t_star:
            raise IndexError(f"no delta set for t_end={t_end}")
        return self.removed_at[t_end - self.t_start]

    def additions(self) -> Iterator[tuple[int, np.ndarray]]:
        """``(t_end, edges to add)`` for ``t_end`` from ``t_star`` down to ``t_start``."""
        yield self.t_star, self.base
        for t_end in range(self.t_star - 1, self.t_start - 1, -1):
            yield t_end, self.removed_at[t_end - self.t_start]

    def reconstruct(self) -> Iterator[tuple[int, np.ndarray]]:
        """``(t_end, full sorted edge set)`` in the same descending order."""
        cur = _EMPTY
        for t_end, add in self.additions():
            cur = np.union1d(cur, add) if cur.size else add
            yield t_end, cur


def build_delta_sets(g: TemporalGraph, t_start: int) -> DeltaEdgeSets:
    cur = g.edges_at[t_start]
    if cur.size == 0:
        raise EmptyStartError(f"no edges at t={t_start}")
    removed = []
    t = t_start
    while t < g.t_max:
        nxt = np.intersect1d(cur, g.edges_at[t + 1], assume_unique=True)
        if nxt.size == 0:
            break
        removed.append(np.setdiff1d(cur, nxt, assume_unique=True))
        cur, t = nxt, t + 1
    return DeltaEdgeSets(t_start, t, cur, removed)
