"""Random temporal graph generators for tests and benchmarks."""
from __future__ import annotations

import numpy as np

from .tgraph import TemporalGraph


def _all_pairs(n: int) -> np.ndarray:
    return np.column_stack(np.triu_indices(n, 1)).astype(np.int64)


def independent_temporal_graph(n: int, num_timestamps: int, p: float, rng: np.random.Generator) -> TemporalGraph:
    """Each timestamp is an independent G(n, p) draw."""
    pairs = _all_pairs(n)
    return TemporalGraph(n, [pairs[rng.random(len(pairs)) < p] for _ in range(num_timestamps)])


def markov_temporal_graph(
    n: int,
    num_timestamps: int,
    p: float,
    stay: float,
    rng: np.random.Generator,
    communities: int = 0,
    community_size: int = 12,
    p_in: float = 0.8,
    stay_in: float = 0.99,
) -> TemporalGraph:
    """Edges follow a two-state Markov chain per vertex pair.

    Background pairs start alive with probability ``p`` and survive each
    step with probability ``stay``; a dead pair revives with the rate that
    keeps density near ``p``. Optionally ``communities`` disjoint vertex
    groups get denser (``p_in``), stickier (``stay_in``) internal edges.
    """
    pairs = _all_pairs(n)
    m = len(pairs)
    dens = np.full(m, p)
    keep = np.full(m, stay)
    if communities:
        group = np.full(n, -1)
        members = rng.permutation(n)[: communities * community_size]
        group[members] = np.repeat(np.arange(communities), community_size)
        inside = (group[pairs[:, 0]] >= 0) & (group[pairs[:, 0]] == group[pairs[:, 1]])
        dens[inside] = p_in
        keep[inside] = stay_in
    revive = np.clip(dens * (1 - keep) / np.maximum(1 - dens, 1e-12), 0.0, 1.0)

    alive = rng.random(m) < dens
    per_t = []
    for _ in range(num_timestamps):
        per_t.append(pairs[alive])
        r = rng.random(m)
        alive = np.where(alive, r < keep, r < revive)
    return TemporalGraph(n, per_t)


def constant_temporal_graph(n: int, num_timestamps: int, p: float, rng: np.random.Generator) -> TemporalGraph:
    """One G(n, p) draw repeated at every timestamp."""
    pairs = _all_pairs(n)
    e = pairs[rng.random(len(pairs)) < p]
    return TemporalGraph(n, [e] * num_timestamps)
