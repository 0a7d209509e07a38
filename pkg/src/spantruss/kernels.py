"""Hot loops: triangle supports, streaming insertion and bin-sort peeling.

All kernels work on the CSR layout of :class:`~spantruss.tgraph.EdgeIndex`:

* ``indptr, nbr, nbr_eid``: universe adjacency, rows sorted by neighbour.
* ``adj, adj_eid, cnt``: snapshot slot buffers sharing ``indptr``. The live
  neighbours of ``u`` are ``adj[indptr[u]:indptr[u] + cnt[u]]``.
* ``active``: per-edge-id membership of the snapshot.

Every function here compiles with numba unless ``SPANTRUSS_DISABLE_NUMBA`` is
set, in which case it runs as ordinary Python.
"""
import numpy as np

from ._jit import jit_kernel


@jit_kernel
def find_edge(indptr, nbr, nbr_eid, a, b):
    """Universe id of edge ``{a, b}`` by binary search in row ``a``, or -1."""
    lo = indptr[a]
    hi = indptr[a + 1]
    while lo < hi:
        mid = (lo + hi) >> 1
        x = nbr[mid]
        if x < b:
            lo = mid + 1
        elif x > b:
            hi = mid
        else:
            return nbr_eid[mid]
    return -1


@jit_kernel
def activate_edges(eids, eu, ev, indptr, adj, adj_eid, cnt, active):
    for i in range(eids.shape[0]):
        e = eids[i]
        u = eu[e]
        v = ev[e]
        adj[indptr[u] + cnt[u]] = v
        adj_eid[indptr[u] + cnt[u]] = e
        cnt[u] += 1
        adj[indptr[v] + cnt[v]] = u
        adj_eid[indptr[v] + cnt[v]] = e
        cnt[v] += 1
        active[e] = True


@jit_kernel
def edge_supports(eids, eu, ev, indptr, nbr, nbr_eid, adj, cnt, active, sup):
    """Write the triangle count of each edge in ``eids`` into ``sup``.

    Scans the live neighbours of the lower-degree endpoint and checks the
    closing edge against the other endpoint.
    """
    for i in range(eids.shape[0]):
        e = eids[i]
        a = eu[e]
        b = ev[e]
        if cnt[a] > cnt[b]:
            a, b = b, a
        s = 0
        start = indptr[a]
        for j in range(start, start + cnt[a]):
            w = adj[j]
            if w == b:
                continue
            f = find_edge(indptr, nbr, nbr_eid, b, w)
            if f >= 0 and active[f]:
                s += 1
        sup[e] = s


@jit_kernel
def insert_edges(eids, eu, ev, indptr, nbr, nbr_eid, adj, adj_eid, cnt, active, sup):
    """Add edges one at a time, bumping the support of every closed triangle.

    A triangle with several new edges is counted once, when its last edge
    arrives.
    """
    for i in range(eids.shape[0]):
        e = eids[i]
        u = eu[e]
        v = ev[e]
        adj[indptr[u] + cnt[u]] = v
        adj_eid[indptr[u] + cnt[u]] = e
        cnt[u] += 1
        adj[indptr[v] + cnt[v]] = u
        adj_eid[indptr[v] + cnt[v]] = e
        cnt[v] += 1
        active[e] = True
        sup[e] = 0

        a = u
        b = v
        if cnt[a] > cnt[b]:
            a, b = b, a
        start = indptr[a]
        for j in range(start, start + cnt[a]):
            w = adj[j]
            if w == b:
                continue
            f = find_edge(indptr, nbr, nbr_eid, b, w)
            if f >= 0 and active[f]:
                sup[e] += 1
                sup[adj_eid[j]] += 1
                sup[f] += 1


@jit_kernel
def peel_trussness(eids, sup_in, eu, ev, indptr, nbr, nbr_eid, adj, adj_eid, cnt, local):
    """Trussness of each edge of the snapshot ``eids`` (sorted) by peeling.

    ``sup_in`` is indexed by edge id and left untouched. ``local`` is a
    scratch array over all edge ids, filled with -1 on entry and restored
    to -1 on exit.
    """
    m = eids.shape[0]
    s = np.empty(m, dtype=np.int64)
    maxs = 0
    for i in range(m):
        local[eids[i]] = i
        s[i] = sup_in[eids[i]]
        if s[i] > maxs:
            maxs = s[i]

    # counting sort by support; stable, so ties stay in edge-id order
    bin_start = np.zeros(maxs + 2, dtype=np.int64)
    for i in range(m):
        bin_start[s[i] + 1] += 1
    for k in range(1, maxs + 2):
        bin_start[k] += bin_start[k - 1]
    fill = bin_start.copy()
    order = np.empty(m, dtype=np.int64)
    pos = np.empty(m, dtype=np.int64)
    for i in range(m):
        p = fill[s[i]]
        order[p] = i
        pos[i] = p
        fill[s[i]] += 1

    removed = np.zeros(m, dtype=np.bool_)
    truss = np.empty(m, dtype=np.int64)
    for i in range(m):
        x = order[i]
        sx = s[x]
        truss[x] = sx + 2
        removed[x] = True
        e = eids[x]
        a = eu[e]
        b = ev[e]
        if cnt[a] > cnt[b]:
            a, b = b, a
        start = indptr[a]
        for j in range(start, start + cnt[a]):
            w = adj[j]
            if w == b:
                continue
            f1 = local[adj_eid[j]]
            if f1 < 0 or removed[f1]:
                continue
            g = find_edge(indptr, nbr, nbr_eid, b, w)
            if g < 0:
                continue
            f2 = local[g]
            if f2 < 0 or removed[f2]:
                continue
            for y in (f1, f2):
                sy = s[y]
                if sy > sx:
                    # swap y to the front of its bin, then shrink the bin
                    py = pos[y]
                    pw = bin_start[sy]
                    z = order[pw]
                    if z != y:
                        order[py] = z
                        pos[z] = py
                        order[pw] = y
                        pos[y] = pw
                    bin_start[sy] += 1
                    s[y] = sy - 1

    for i in range(m):
        local[eids[i]] = -1
    return truss


@jit_kernel
def count_above(eids, sup, threshold):
    c = 0
    for i in range(eids.shape[0]):
        if sup[eids[i]] > threshold:
            c += 1
    return c
