"""Numba-compiled graph kernels over CSR adjacency arrays.

Distances use -1 for "unreachable"; ``girth`` returns 0 when the graph is
acyclic.  All functions are deterministic: neighbours are scanned in CSR
(ascending) order.
"""

import numpy as np
from numba import njit


@njit(cache=True)
def bfs_distances(indptr, indices, source, limit):
    """Single-source BFS; vertices beyond ``limit`` stay at -1 (limit<0: none)."""
    n = indptr.shape[0] - 1
    dist = np.full(n, -1, np.int64)
    dist[source] = 0
    queue = np.empty(n, np.int64)
    queue[0] = source
    head, tail = 0, 1
    while head < tail:
        u = queue[head]
        head += 1
        du = dist[u]
        if limit >= 0 and du >= limit:
            continue
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            if dist[v] < 0:
                dist[v] = du + 1
                queue[tail] = v
                tail += 1
    return dist


@njit(cache=True)
def eccentricities(indptr, indices):
    """Per-vertex max finite BFS distance (component-local eccentricity)."""
    n = indptr.shape[0] - 1
    ecc = np.zeros(n, np.int64)
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        for i in range(n):
            dist[i] = -1
        dist[s] = 0
        queue[0] = s
        head, tail = 0, 1
        far = 0
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            if du > far:
                far = du
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if dist[v] < 0:
                    dist[v] = du + 1
                    queue[tail] = v
                    tail += 1
        ecc[s] = far
    return ecc


@njit(cache=True)
def any_eccentricity_exceeds(indptr, indices, limit):
    """True iff some vertex has eccentricity > limit (early exit on witness)."""
    n = indptr.shape[0] - 1
    dist = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        for i in range(n):
            dist[i] = -1
        dist[s] = 0
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if dist[v] < 0:
                    if du + 1 > limit:
                        return True
                    dist[v] = du + 1
                    queue[tail] = v
                    tail += 1
    return False


@njit(cache=True)
def girth(indptr, indices):
    """Length of a shortest cycle, 0 if none.

    BFS from every vertex; a scanned edge that does not lead to the parent
    closes a walk of length d(u)+d(v)+1 which contains a cycle no longer
    than that, and for a root on a shortest cycle the bound is attained.
    """
    n = indptr.shape[0] - 1
    sentinel = np.int64(2) * n + 8
    best = sentinel
    dist = np.empty(n, np.int64)
    parent = np.empty(n, np.int64)
    queue = np.empty(n, np.int64)
    for s in range(n):
        for i in range(n):
            dist[i] = -1
        dist[s] = 0
        parent[s] = -1
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            du = dist[u]
            if 2 * du >= best:
                break
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if dist[v] < 0:
                    dist[v] = du + 1
                    parent[v] = u
                    queue[tail] = v
                    tail += 1
                elif v != parent[u]:
                    c = du + dist[v] + 1
                    if c < best:
                        best = c
    if best >= sentinel:
        return 0
    return best


@njit(cache=True)
def has_short_cycle(indptr, indices):
    """True iff the graph contains a cycle of length 3 or 4."""
    n = indptr.shape[0] - 1
    nbr_stamp = np.full(n, -1, np.int64)
    two_stamp = np.full(n, -1, np.int64)
    for u in range(n):
        for j in range(indptr[u], indptr[u + 1]):
            nbr_stamp[indices[j]] = u
        for j in range(indptr[u], indptr[u + 1]):
            v = indices[j]
            for l in range(indptr[v], indptr[v + 1]):
                w = indices[l]
                if w == u:
                    continue
                if nbr_stamp[w] == u:
                    return True  # triangle u-v-w
                if two_stamp[w] == u:
                    return True  # two distinct 2-paths u..w close a C4
                two_stamp[w] = u
    return False


@njit(cache=True)
def component_labels(indptr, indices):
    """Connected-component labels, numbered 0.. in order of smallest member."""
    n = indptr.shape[0] - 1
    labels = np.full(n, -1, np.int64)
    queue = np.empty(n, np.int64)
    current = 0
    for s in range(n):
        if labels[s] >= 0:
            continue
        labels[s] = current
        queue[0] = s
        head, tail = 0, 1
        while head < tail:
            u = queue[head]
            head += 1
            for j in range(indptr[u], indptr[u + 1]):
                v = indices[j]
                if labels[v] < 0:
                    labels[v] = current
                    queue[tail] = v
                    tail += 1
        current += 1
    return labels
