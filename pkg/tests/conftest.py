import itertools

import numpy as np
import pytest

from spantruss import TemporalGraph

TRIANGLE = [(0, 1), (1, 2), (0, 2)]
K4 = list(itertools.combinations(range(4), 2))


@pytest.fixture
def tri_then_edge():
    """Triangle at t=0 and t=1, only (0, 1) at t=2."""
    return TemporalGraph(3, [TRIANGLE, TRIANGLE, [(0, 1)]])


def brute_k_truss(edges, k):
    """Iterated deletion: drop every edge with in-subgraph support < k-2 until stable."""
    es = {tuple(sorted(e)) for e in edges}
    while True:
        nb = {}
        for u, v in es:
            nb.setdefault(u, set()).add(v)
            nb.setdefault(v, set()).add(u)
        weak = {(u, v) for u, v in es if len(nb[u] & nb[v]) < k - 2}
        if not weak:
            return es
        es -= weak


def brute_trussness(edges):
    es = {tuple(sorted(e)) for e in edges}
    out = {}
    for e in es:
        k = 2
        while e in brute_k_truss(es, k + 1):
            k += 1
        out[e] = k
    return out


def brute_supports(edges):
    es = {tuple(sorted(e)) for e in edges}
    verts = {x for e in es for x in e}
    return {(u, v): sum(1 for w in verts if tuple(sorted((u, w))) in es and tuple(sorted((v, w))) in es)
            for u, v in es}


def brute_interval_edges(g, ts, te):
    sets = [g.edge_set(t) for t in range(ts, te + 1)]
    return set.intersection(*sets)


def brute_maximal_span_trusses(g):
    """Every (k, span)-truss of every interval, then dominance by definition.

    Returns {(k, ts, te): frozenset(edges)}. Exponentially dumb, small inputs only.
    """
    trusses = {}
    for ts in range(g.t_max + 1):
        for te in range(ts, g.t_max + 1):
            es = brute_interval_edges(g, ts, te)
            k = 2
            while True:
                t = brute_k_truss(es, k)
                if not t:
                    break
                trusses[(k, ts, te)] = frozenset(t)
                k += 1
    out = {}
    for (k, ts, te), t in trusses.items():
        dominated = any(
            (k2, s2, e2) != (k, ts, te) and k2 >= k and s2 <= ts and e2 >= te
            for (k2, s2, e2) in trusses
        )
        if not dominated:
            out[(k, ts, te)] = t
    return out


def as_triples(result):
    return {(t.order, t.span.t_start, t.span.t_end): t.edges for t in result}


def random_static_edges(rng, n_max=20):
    n = int(rng.integers(2, n_max + 1))
    p = float(rng.choice([0.1, 0.2, 0.3, 0.5, 0.8]))
    pairs = [e for e in itertools.combinations(range(n), 2) if rng.random() < p]
    return n, pairs


ACCEPTANCE_LINES = []


@pytest.fixture
def record_criterion():
    def record(number, title, passed, detail=""):
        status = {True: "PASS", False: "FAIL", None: "SKIP", "soft": "SOFT"}[passed]
        ACCEPTANCE_LINES.append(f"criterion {number} [{status}] {title}" + (f" ({detail})" if detail else ""))
        return passed

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1])):
            terminalreporter.write_line(line)
