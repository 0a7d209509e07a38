"""Static supports, streaming support updates and truss decomposition."""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import kernels
from .tgraph import EdgeIndex

__all__ = [
    "Snapshot",
    "TrussLabels",
    "compute_supports",
    "insert_edges_update",
    "truss_decomposition",
    "innermost_truss",
    "reference_k_truss",
    "reference_trussness",
    "reference_innermost",
]


class Snapshot:
    """Mutable static graph whose edges are drawn from an :class:`EdgeIndex`.

    Adjacency lives in per-vertex slot buffers laid out like the universe
    CSR, so a snapshot never reallocates while edges are added. ``clear``
    resets only what was touched, which keeps reuse across many intervals
    proportional to the snapshot size rather than the universe size.
    """

    def __init__(self, index: EdgeIndex):
        self.index = index
        m2 = index.nbr.size
        self.adj = np.empty(m2, dtype=np.int64)
        self.adj_eid = np.empty(m2, dtype=np.int64)
        self.cnt = np.zeros(index.num_vertices, dtype=np.int64)
        self.active = np.zeros(len(index), dtype=np.bool_)
        self._chunks: list[np.ndarray] = []
        self._ids: np.ndarray | None = np.empty(0, dtype=np.int64)
        self._scratch: np.ndarray | None = None

    @classmethod
    def from_pairs(cls, num_vertices: int, pairs: Iterable[tuple[int, int]]) -> "Snapshot":
        pairs = list(pairs)
        s = cls(EdgeIndex.from_pairs(num_vertices, pairs))
        s.add_edges(s.index.ids_of(pairs))
        return s

    @property
    def num_vertices(self) -> int:
        return self.index.num_vertices

    @property
    def edge_count(self) -> int:
        return int(self.cnt.sum()) // 2

    def edge_ids(self) -> np.ndarray:
        """Sorted ids of the live edges."""
        if self._ids is None:
            self._ids = np.sort(np.concatenate(self._chunks))
            self._chunks = [self._ids]
        return self._ids

    def degree(self, u: int) -> int:
        return int(self.cnt[u])

    def neighbors(self, u: int) -> np.ndarray:
        start = self.index.indptr[u]
        return self.adj[start:start + self.cnt[u]].copy()

    def has_edge(self, u: int, v: int) -> bool:
        if u == v:
            return False
        e = self.index.lookup(u, v)
        return e >= 0 and bool(self.active[e])

    def pairs(self) -> list[tuple[int, int]]:
        return self.index.pairs_of(self.edge_ids())

    def _check_new(self, eids: np.ndarray) -> None:
        if eids.size == 0:
            return
        if self.active[eids].any():
            e = int(eids[self.active[eids]][0])
            raise ValueError(f"edge {self.index.pairs_of([e])[0]} is already in the snapshot")
        if np.unique(eids).size != eids.size:
            raise ValueError("duplicate edge in insertion batch")

    def _record(self, eids: np.ndarray) -> None:
        if eids.size:
            self._chunks.append(eids)
            self._ids = None

    def add_edges(self, eids) -> None:
        """Add edges without touching any support values."""
        eids = np.asarray(eids, dtype=np.int64)
        self._check_new(eids)
        ix = self.index
        kernels.activate_edges(eids, ix.eu, ix.ev, ix.indptr, self.adj, self.adj_eid, self.cnt, self.active)
        self._record(eids)

    def clear(self) -> None:
        ids = self.edge_ids()
        self.active[ids] = False
        self.cnt[self.index.eu[ids]] = 0
        self.cnt[self.index.ev[ids]] = 0
        self._chunks = []
        self._ids = np.empty(0, dtype=np.int64)

    def scratch(self) -> np.ndarray:
        if self._scratch is None:
            self._scratch = np.full(len(self.index), -1, dtype=np.int64)
        return self._scratch

    def support_dict(self, sup: np.ndarray) -> dict[tuple[int, int], int]:
        ids = self.edge_ids()
        return dict(zip(self.index.pairs_of(ids), sup[ids].tolist()))


def compute_supports(s: Snapshot, sup: np.ndarray | None = None) -> np.ndarray:
    """Support of every live edge, as an array indexed by edge id.

    Entries of edges outside the snapshot are left at zero (or untouched
    when ``sup`` is supplied).
    """
    if sup is None:
        sup = np.zeros(len(s.index), dtype=np.int64)
    ix = s.index
    kernels.edge_supports(s.edge_ids(), ix.eu, ix.ev, ix.indptr, ix.nbr, ix.nbr_eid, s.adj, s.cnt, s.active, sup)
    return sup


def insert_edges_update(s: Snapshot, sup: np.ndarray, new_edges) -> None:
    """Insert ``new_edges`` (ids) into ``s`` and update ``sup`` in place."""
    eids = np.asarray(new_edges, dtype=np.int64)
    s._check_new(eids)
    ix = s.index
    kernels.insert_edges(
        eids, ix.eu, ix.ev, ix.indptr, ix.nbr, ix.nbr_eid, s.adj, s.adj_eid, s.cnt, s.active, sup
    )
    s._record(eids)


@dataclass
class TrussLabels:
    """Trussness per edge; ``edge_ids`` sorted, ``trussness`` aligned to it."""

    index: EdgeIndex
    edge_ids: np.ndarray
    trussness: np.ndarray

    @property
    def max_order(self) -> int:
        return int(self.trussness.max()) if self.trussness.size else 0

    def as_dict(self) -> dict[tuple[int, int], int]:
        return dict(zip(self.index.pairs_of(self.edge_ids), self.trussness.tolist()))

    def k_truss(self, k: int) -> np.ndarray:
        return self.edge_ids[self.trussness >= k]


def truss_decomposition(s: Snapshot, sup: np.ndarray) -> TrussLabels:
    """Peel the snapshot; neither ``s`` nor ``sup`` is modified."""
    ix = s.index
    ids = s.edge_ids()
    truss = kernels.peel_trussness(
        ids, sup, ix.eu, ix.ev, ix.indptr, ix.nbr, ix.nbr_eid, s.adj, s.adj_eid, s.cnt, s.scratch()
    )
    return TrussLabels(ix, ids, truss)


def innermost_truss(labels: TrussLabels) -> tuple[int, np.ndarray]:
    """Order and edge ids of the highest non-empty truss."""
    if labels.edge_ids.size == 0:
        raise ValueError("no truss: the graph has no edges")
    k = labels.max_order
    return k, labels.k_truss(k)


# Plain-Python reference versions. They share nothing with the kernels
# above and serve as the oracle for the naive miner and the test suite.

def _adjacency(edges: Iterable[tuple[int, int]]) -> dict[int, set[int]]:
    adj: dict[int, set[int]] = defaultdict(set)
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def reference_k_truss(edges: Iterable[tuple[int, int]], k: int) -> set[tuple[int, int]]:
    """The k-truss by iterated deletion until every edge has support >= k-2."""
    alive = {(min(u, v), max(u, v)) for u, v in edges}
    adj = _adjacency(alive)
    changed = True
    while changed:
        changed = False
        for u, v in sorted(alive):
            if len(adj[u] & adj[v]) < k - 2:
                alive.discard((u, v))
                adj[u].discard(v)
                adj[v].discard(u)
                changed = True
    return alive


def reference_trussness(edges: Iterable[tuple[int, int]]) -> dict[tuple[int, int], int]:
    current = {(min(u, v), max(u, v)) for u, v in edges}
    out = {e: 2 for e in current}
    k = 3
    while current:
        current = reference_k_truss(current, k)
        for e in current:
            out[e] = k
        k += 1
    return out


def reference_innermost(edges: Iterable[tuple[int, int]]) -> tuple[int, frozenset[tuple[int, int]]]:
    current = {(min(u, v), max(u, v)) for u, v in edges}
    if not current:
        raise ValueError("no truss: the graph has no edges")
    k = 2
    while True:
        nxt = reference_k_truss(current, k + 1)
        if not nxt:
            return k, frozenset(current)
        current, k = nxt, k + 1
