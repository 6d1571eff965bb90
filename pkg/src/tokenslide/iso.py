"""Isomorphism of attached components that fixes the shared boundary.

Two components hanging off the same set of boundary vertices are
interchangeable when some isomorphism of the attached subgraphs maps the
boundary identically.  The test is plain backtracking over interior
bijections, pruned by per-vertex invariants (degree, exact boundary
neighbourhood, distance profile to every boundary vertex); interiors
compared in practice are small, so no canonical-labelling machinery is
needed.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .graph import Graph, vertex_set


@dataclass(frozen=True)
class AttachedComponent:
    """A component ``interior`` plus its neighbourhood ``boundary`` and the
    adjacency of the induced subgraph on their union."""

    interior: tuple
    boundary: tuple
    adj: dict = field(compare=False)

    def __post_init__(self):
        inside = set(self.interior)
        if inside & set(self.boundary):
            raise ValueError("interior and boundary overlap")
        for b in self.boundary:
            if not inside & set(self.adj.get(b, ())):
                raise ValueError(f"boundary vertex {b} has no interior neighbour")

    @classmethod
    def from_graph(cls, g: Graph, interior) -> "AttachedComponent":
        inside = vertex_set(interior)
        inside_set = set(inside)
        boundary = vertex_set(
            w for v in inside for w in g.neighbors(v) if w not in inside_set
        )
        union = set(inside) | set(boundary)
        adj = {
            v: tuple(w for w in g.neighbors(v) if w in union) for v in union
        }
        return cls(inside, boundary, adj)


def _distance_profiles(comp: AttachedComponent) -> dict:
    """For each interior vertex, its distances to every boundary vertex
    measured inside the attached subgraph (-1 when unreachable)."""
    profiles = {v: [] for v in comp.interior}
    for b in comp.boundary:
        dist = {b: 0}
        queue = deque([b])
        while queue:
            u = queue.popleft()
            for w in comp.adj[u]:
                if w not in dist:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        for v in comp.interior:
            profiles[v].append(dist.get(v, -1))
    return {v: tuple(p) for v, p in profiles.items()}


def _signatures(comp: AttachedComponent) -> dict:
    boundary = set(comp.boundary)
    profiles = _distance_profiles(comp)
    return {
        v: (
            len(comp.adj[v]),
            tuple(sorted(w for w in comp.adj[v] if w in boundary)),
            profiles[v],
        )
        for v in comp.interior
    }


def boundary_fixed_isomorphic(a: AttachedComponent, b: AttachedComponent) -> bool:
    """True iff a and b share the same boundary vertices and some
    isomorphism of the attached subgraphs is the identity on them."""
    if a.boundary != b.boundary:
        return False
    if len(a.interior) != len(b.interior):
        return False
    boundary = set(a.boundary)
    a_bb = {(u, v) for u in a.boundary for v in a.adj[u] if v in boundary}
    b_bb = {(u, v) for u in b.boundary for v in b.adj[u] if v in boundary}
    if a_bb != b_bb:
        return False

    sig_a = _signatures(a)
    sig_b = _signatures(b)
    if sorted(sig_a.values()) != sorted(sig_b.values()):
        return False

    candidates = {
        x: [y for y in b.interior if sig_b[y] == sig_a[x]] for x in a.interior
    }
    # match the most constrained vertices first: near the boundary, high degree
    def rank(x):
        dists = [d for d in sig_a[x][2] if d >= 0]
        return (min(dists) if dists else 10**9, -sig_a[x][0], x)

    order = sorted(a.interior, key=rank)
    interior_b = set(b.interior)
    mapping = {v: v for v in a.boundary}
    _inverse = {}
    used = set()

    def extend(idx):
        if idx == len(order):
            return True
        x = order[idx]
        adj_x = a.adj[x]
        for y in candidates[x]:
            if y in used:
                continue
            ok = True
            for x2 in adj_x:
                if x2 in mapping and x2 not in boundary:
                    if mapping[x2] not in b.adj[y]:
                        ok = False
                        break
            if ok:
                # mapped non-neighbours must stay non-neighbours
                for y2 in b.adj[y]:
                    if y2 in interior_b and y2 in used:
                        x2 = _inverse[y2]
                        if x2 not in adj_x:
                            ok = False
                            break
            if not ok:
                continue
            mapping[x] = y
            _inverse[y] = x
            used.add(y)
            if extend(idx + 1):
                return True
            del mapping[x]
            del _inverse[y]
            used.discard(y)
        return False

    return extend(0)
