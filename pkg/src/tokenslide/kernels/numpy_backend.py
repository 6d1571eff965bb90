"""Pure-numpy fallback kernels, signature-compatible with the numba backend.

BFS runs level-synchronously on vectorised frontiers.  Results are
bit-identical to the numba backend (same -1 / 0 conventions).
"""

import numpy as np

# above this size has_short_cycle switches from a dense matmul to a
# per-vertex stamp loop to keep memory linear
_DENSE_LIMIT = 2048


def _frontier_neighbors(indptr, indices, frontier):
    """All CSR neighbours of the vertices in ``frontier`` (with repeats)."""
    counts = indptr[frontier + 1] - indptr[frontier]
    total = int(counts.sum())
    if total == 0:
        return np.empty(0, np.int64)
    starts = np.repeat(indptr[frontier], counts)
    local = np.arange(total, dtype=np.int64) - np.repeat(
        np.cumsum(counts) - counts, counts
    )
    return indices[starts + local]


def bfs_distances(indptr, indices, source, limit):
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, np.int64)
    dist[source] = 0
    frontier = np.array([source], np.int64)
    depth = 0
    while frontier.size and (limit < 0 or depth < limit):
        nbrs = _frontier_neighbors(indptr, indices, frontier)
        fresh = np.unique(nbrs[dist[nbrs] < 0])
        if fresh.size == 0:
            break
        depth += 1
        dist[fresh] = depth
        frontier = fresh
    return dist


def eccentricities(indptr, indices):
    n = indptr.shape[0] - 1
    ecc = np.zeros(n, np.int64)
    for s in range(n):
        dist = bfs_distances(indptr, indices, s, -1)
        ecc[s] = dist.max()
    return ecc


def any_eccentricity_exceeds(indptr, indices, limit):
    n = indptr.shape[0] - 1
    for s in range(n):
        dist = bfs_distances(indptr, indices, s, limit + 1)
        if (dist > limit).any():
            return True
    return False


def girth(indptr, indices):
    n = indptr.shape[0] - 1
    if n == 0 or indices.size == 0:
        return 0
    edge_u = np.repeat(np.arange(n, dtype=np.int64), indptr[1:] - indptr[:-1])
    edge_v = indices
    best = 2 * n + 8
    for s in range(n):
        dist = bfs_distances(indptr, indices, s, -1)
        du = dist[edge_u]
        dv = dist[edge_v]
        seen = (du >= 0) & (dv >= 0)
        # same-level edge -> odd closed walk through s
        level = seen & (du == dv)
        if level.any():
            best = min(best, int(2 * du[level].min() + 1))
        # a vertex with two neighbours one level up closes an even walk
        down = seen & (dv == du + 1)
        parents = np.zeros(n, np.int64)
        np.add.at(parents, edge_v[down], 1)
        multi = parents >= 2
        if multi.any():
            best = min(best, int(2 * dist[multi].min()))
    if best >= 2 * n + 8:
        return 0
    return best


def _has_short_cycle_dense(indptr, indices):
    n = indptr.shape[0] - 1
    adj = np.zeros((n, n), bool)
    edge_u = np.repeat(np.arange(n, dtype=np.int64), indptr[1:] - indptr[:-1])
    adj[edge_u, indices] = True
    paths2 = adj.astype(np.int32) @ adj.astype(np.int32)
    if (adj & (paths2 > 0)).any():
        return True  # triangle
    np.fill_diagonal(paths2, 0)
    return bool((paths2 >= 2).any())  # C4


def _has_short_cycle_sparse(indptr, indices):
    n = indptr.shape[0] - 1
    nbr_stamp = np.full(n, -1, np.int64)
    two_stamp = np.full(n, -1, np.int64)
    for u in range(n):
        nbr_stamp[indices[indptr[u] : indptr[u + 1]]] = u
        for v in indices[indptr[u] : indptr[u + 1]]:
            for w in indices[indptr[v] : indptr[v + 1]]:
                if w == u:
                    continue
                if nbr_stamp[w] == u:
                    return True
                if two_stamp[w] == u:
                    return True
                two_stamp[w] = u
    return False


def has_short_cycle(indptr, indices):
    n = indptr.shape[0] - 1
    if n <= _DENSE_LIMIT:
        return _has_short_cycle_dense(indptr, indices)
    return _has_short_cycle_sparse(indptr, indices)


def component_labels(indptr, indices):
    n = indptr.shape[0] - 1
    labels = np.full(n, -1, np.int64)
    current = 0
    for s in range(n):
        if labels[s] >= 0:
            continue
        labels[s] = current
        frontier = np.array([s], np.int64)
        while frontier.size:
            nbrs = _frontier_neighbors(indptr, indices, frontier)
            fresh = np.unique(nbrs[labels[nbrs] < 0])
            labels[fresh] = current
            frontier = fresh
        current += 1
    return labels
