"""Undirected simple graphs on dense integer vertex ids, plus the BFS-based
primitives the rest of the package is built on.

Graphs are immutable after construction; every "mutation" builds a new
graph.  Adjacency lists are strictly sorted tuples, so equality is
structural and deterministic.  The heavy primitives (girth, distances,
eccentricities, components) run on a cached CSR copy through the selected
kernel backend (see :mod:`tokenslide.kernels`).
"""

from __future__ import annotations

import math
from typing import Iterable, Sequence

import numpy as np

from . import kernels

VertexSet = tuple  # strictly increasing tuple of vertex ids


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    """Normalise an iterable of vertex ids to a sorted duplicate-free tuple."""
    return tuple(sorted(set(int(v) for v in vertices)))


class Graph:
    """Simple undirected graph with vertices 0..n-1."""

    def __init__(self, n: int, adjacency: Sequence[Iterable[int]]):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        if len(adjacency) != n:
            raise ValueError("adjacency size does not match vertex count")
        adj = []
        for u, nbrs in enumerate(adjacency):
            row = tuple(sorted(nbrs))
            for v in row:
                if v == u:
                    raise ValueError(f"self-loop at vertex {u}")
                if not 0 <= v < n:
                    raise ValueError(f"neighbour {v} of {u} out of range")
            if len(set(row)) != len(row):
                raise ValueError(f"duplicate neighbour in adjacency of {u}")
            adj.append(row)
        for u, row in enumerate(adj):
            for v in row:
                if u not in adj[v]:
                    raise ValueError(f"edge {u}-{v} is not symmetric")
        self.n = n
        self.adjacency = tuple(adj)
        self._csr = None
        self._nbr_sets = None

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple]) -> "Graph":
        adj = [[] for _ in range(n)]
        seen = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"duplicate edge {u}-{v}")
            seen.add(key)
            adj[u].append(v)
            adj[v].append(u)
        return cls(n, adj)

    @property
    def m(self) -> int:
        return sum(len(row) for row in self.adjacency) // 2

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple:
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset:
        if self._nbr_sets is None:
            self._nbr_sets = tuple(frozenset(row) for row in self.adjacency)
        return self._nbr_sets[v]

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        return v in self.neighbor_set(u)

    def edges(self):
        for u, row in enumerate(self.adjacency):
            for v in row:
                if u < v:
                    yield (u, v)

    def csr(self):
        if self._csr is None:
            indptr = np.zeros(self.n + 1, np.int64)
            for u, row in enumerate(self.adjacency):
                indptr[u + 1] = indptr[u] + len(row)
            indices = np.fromiter(
                (v for row in self.adjacency for v in row),
                np.int64,
                count=int(indptr[-1]),
            )
            self._csr = (indptr, indices)
        return self._csr

    def __eq__(self, other):
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.adjacency == other.adjacency
        )

    def __hash__(self):
        return hash((self.n, self.adjacency))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.m})"


def girth(g: Graph) -> float:
    """Length of a shortest cycle; ``math.inf`` for forests."""
    if g.n == 0 or g.m == 0:
        return math.inf
    indptr, indices = g.csr()
    result = int(kernels.girth(indptr, indices))
    return math.inf if result == 0 else result


def has_short_cycle(g: Graph) -> bool:
    """True iff g contains a cycle of length three or four (girth < 5)."""
    if g.n == 0 or g.m < 3:
        return False
    indptr, indices = g.csr()
    return bool(kernels.has_short_cycle(indptr, indices))


def bfs_distances(g: Graph, source: int) -> list:
    """Shortest-path distances from ``source``; ``math.inf`` if unreachable."""
    if not 0 <= source < g.n:
        raise ValueError(f"source {source} out of range")
    indptr, indices = g.csr()
    dist = kernels.bfs_distances(indptr, indices, source, -1)
    return [math.inf if d < 0 else int(d) for d in dist]


def connected_components(g: Graph) -> list:
    """Maximal connected vertex sets, ordered by smallest member."""
    if g.n == 0:
        return []
    indptr, indices = g.csr()
    labels = kernels.component_labels(indptr, indices)
    comps = [[] for _ in range(int(labels.max()) + 1)]
    for v in range(g.n):
        comps[int(labels[v])].append(v)
    return [tuple(c) for c in comps]


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    """True iff no edge of g has both endpoints in s."""
    chosen = list(s)
    chosen_set = set(chosen)
    for u in chosen:
        if g.neighbor_set(u) & chosen_set:
            return False
    return True


def induced_subgraph(g: Graph, s: Iterable[int]):
    """Subgraph induced by s plus the order-preserving old->new id mapping."""
    keep = vertex_set(s)
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range")
    mapping = {v: i for i, v in enumerate(keep)}
    adj = [
        [mapping[w] for w in g.adjacency[v] if w in mapping] for v in keep
    ]
    return Graph(len(keep), adj), mapping


def delete_vertices(g: Graph, doomed: Iterable[int]):
    """Remove vertices and recompact ids.

    Returns the new graph and an id map: ``id_map[old]`` is the new id or
    ``None`` for deleted vertices.
    """
    doomed_set = set(doomed)
    survivors = [v for v in range(g.n) if v not in doomed_set]
    sub, mapping = induced_subgraph(g, survivors)
    id_map = tuple(mapping.get(v) for v in range(g.n))
    return sub, id_map


def diameter_exceeds(g: Graph, limit: int) -> bool:
    """Exact decision: does any component of g have diameter > limit?

    Scans vertices as BFS sources and stops at the first eccentricity
    witness, so huge long-diameter components answer quickly.
    """
    if g.n == 0 or g.m == 0:
        return limit < 0
    indptr, indices = g.csr()
    return bool(kernels.any_eccentricity_exceeds(indptr, indices, limit))


def eccentricities(g: Graph) -> list:
    """Component-local eccentricity of every vertex (all-sources BFS)."""
    if g.n == 0:
        return []
    indptr, indices = g.csr()
    return [int(e) for e in kernels.eccentricities(indptr, indices)]


def component_diameter_path(g: Graph, c: Iterable[int]) -> list:
    """A longest shortest path within the connected induced subgraph G[c].

    The endpoints realise diam(G[c]); ties break towards smaller vertex
    ids, so the result is deterministic.  Raises ``ValueError`` when c is
    not connected in g.
    """
    comp = vertex_set(c)
    if not comp:
        raise ValueError("empty component")
    sub, mapping = induced_subgraph(g, comp)
    back = {i: v for v, i in mapping.items()}
    reach = bfs_distances(sub, 0)
    if any(d == math.inf for d in reach):
        raise ValueError("component is not connected")
    ecc = eccentricities(sub)
    diam = max(ecc)
    start = min(v for v in range(sub.n) if ecc[v] == diam)
    dist = bfs_distances(sub, start)
    end = min(v for v in range(sub.n) if dist[v] == diam)
    path = [end]
    cur, d = end, diam
    while d > 0:
        cur = min(w for w in sub.neighbors(cur) if dist[w] == d - 1)
        path.append(cur)
        d -= 1
    path.reverse()
    return [back[v] for v in path]
