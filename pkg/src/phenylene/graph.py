"""Undirected simple graphs: BFS distances, edge splits, the direct Mostar
index, an exact isomorphism test and a canonical certificate.

Vertices are the integers ``0 .. vertex_count - 1``.
"""

from __future__ import annotations

import struct
from collections import Counter, deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .errors import GraphInputError

Edge = tuple[int, int]


def _norm(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class MolecularGraph:
    vertex_count: int
    edges: frozenset[Edge]
    adjacency: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            if u == v:
                raise GraphInputError(f"loop at vertex {u}")
            if not (0 <= u < self.vertex_count and 0 <= v < self.vertex_count):
                raise GraphInputError(f"edge ({u}, {v}) out of range")
            nbrs[u].append(v)
            nbrs[v].append(u)
        object.__setattr__(self, "adjacency", tuple(tuple(sorted(n)) for n in nbrs))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[Edge]) -> "MolecularGraph":
        return cls(vertex_count, frozenset(_norm(u, v) for u, v in edges))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        return all(d >= 0 for d in bfs_distances(self, 0, _unreachable=-1))

    def is_bipartite(self) -> bool:
        side = [-1] * self.vertex_count
        for s in range(self.vertex_count):
            if side[s] >= 0:
                continue
            side[s] = 0
            queue = deque([s])
            while queue:
                u = queue.popleft()
                for w in self.adjacency[u]:
                    if side[w] < 0:
                        side[w] = 1 - side[u]
                        queue.append(w)
                    elif side[w] == side[u]:
                        return False
        return True


@dataclass(frozen=True)
class EdgeSplit:
    edge: Edge
    n_u: int
    n_v: int

    @property
    def phi(self) -> int:
        return abs(self.n_u - self.n_v)


def relabel(g: MolecularGraph, perm: Sequence[int]) -> MolecularGraph:
    """Return the graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.vertex_count)):
        raise GraphInputError("perm is not a permutation of the vertex set")
    return MolecularGraph.from_edges(g.vertex_count, ((perm[u], perm[v]) for u, v in g.edges))


def bfs_distances(g: MolecularGraph, src: int, *, _unreachable: int | None = None) -> list[int]:
    if not 0 <= src < g.vertex_count:
        raise GraphInputError(f"vertex {src} out of range 0..{g.vertex_count - 1}")
    dist = [-1] * g.vertex_count
    dist[src] = 0
    queue = deque([src])
    adj = g.adjacency
    while queue:
        u = queue.popleft()
        du = dist[u] + 1
        for w in adj[u]:
            if dist[w] < 0:
                dist[w] = du
                queue.append(w)
    if _unreachable is None and -1 in dist:
        raise GraphInputError("graph is disconnected")
    return dist


def all_distances(g: MolecularGraph) -> list[list[int]]:
    """Distance matrix by one BFS per vertex."""
    return [bfs_distances(g, v) for v in range(g.vertex_count)]


def _split(du: Sequence[int], dv: Sequence[int], edge: Edge) -> EdgeSplit:
    n_u = n_v = 0
    for a, b in zip(du, dv):
        if a < b:
            n_u += 1
        elif b < a:
            n_v += 1
    return EdgeSplit(edge, n_u, n_v)


def edge_split(g: MolecularGraph, e: Edge, *, distances: Sequence[Sequence[int]] | None = None) -> EdgeSplit:
    u, v = e
    if _norm(u, v) not in g.edges:
        raise GraphInputError(f"({u}, {v}) is not an edge")
    if distances is None:
        du, dv = bfs_distances(g, u), bfs_distances(g, v)
    else:
        du, dv = distances[u], distances[v]
    return _split(du, dv, (u, v))


def edge_splits(g: MolecularGraph) -> list[EdgeSplit]:
    """Splits for every edge in sorted edge order; each BFS runs once."""
    if not g.is_connected():
        raise GraphInputError("graph is disconnected")
    dist = all_distances(g)
    return [_split(dist[u], dist[v], (u, v)) for u, v in g.sorted_edges()]


def mostar_direct(g: MolecularGraph) -> int:
    """Mostar index straight from the definition: sum of |n_u - n_v| over edges."""
    return sum(s.phi for s in edge_splits(g))


# ---------------------------------------------------------------------------
# isomorphism
# ---------------------------------------------------------------------------

def _distance_profiles(g: MolecularGraph) -> list[tuple[int, ...]]:
    profiles = []
    for v in range(g.vertex_count):
        d = bfs_distances(g, v, _unreachable=-1)
        hist = [0] * (max(d) + 2)
        for x in d:
            hist[x] += 1  # -1 lands in the last slot
        profiles.append((g.degree(v), *hist))
    return profiles


def are_isomorphic(g1: MolecularGraph, g2: MolecularGraph) -> bool:
    """Exact isomorphism test by backtracking.

    Vertices are filtered by (degree, distance histogram) and matched in BFS
    order of ``g1``, so every new vertex after the first is adjacent to an
    already-mapped one and its candidates are neighbours of that image. This
    is fast on sparse connected graphs of a few dozen vertices; adversarial
    inputs (large regular graphs) can still take exponential time.
    """
    n = g1.vertex_count
    if n != g2.vertex_count or g1.edge_count != g2.edge_count:
        return False
    if n == 0:
        return True
    p1, p2 = _distance_profiles(g1), _distance_profiles(g2)
    if sorted(p1) != sorted(p2):
        return False

    # one BFS order per connected component of g1
    order: list[int] = []
    anchor: list[int] = []  # mapped neighbour used to restrict candidates, or -1
    seen = [False] * n
    freq = Counter(p1)
    for s in sorted(range(n), key=lambda v: (freq[p1[v]], v)):
        if seen[s]:
            continue
        seen[s] = True
        order.append(s)
        anchor.append(-1)
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for w in g1.adjacency[u]:
                if not seen[w]:
                    seen[w] = True
                    order.append(w)
                    anchor.append(u)
                    queue.append(w)

    adj1 = [set(a) for a in g1.adjacency]
    adj2 = [set(a) for a in g2.adjacency]
    fwd = [-1] * n
    used = [False] * n

    def consistent(u: int, x: int) -> bool:
        if p1[u] != p2[x]:
            return False
        for w in adj1[u]:
            if fwd[w] >= 0 and fwd[w] not in adj2[x]:
                return False
        mapped_nbrs = sum(1 for w in adj1[u] if fwd[w] >= 0)
        return mapped_nbrs == sum(1 for y in adj2[x] if used[y])

    def extend(i: int) -> bool:
        if i == n:
            return True
        u = order[i]
        a = anchor[i]
        pool = adj2[fwd[a]] if a >= 0 else range(n)
        for x in pool:
            if used[x] or not consistent(u, x):
                continue
            fwd[u] = x
            used[x] = True
            if extend(i + 1):
                return True
            fwd[u] = -1
            used[x] = False
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# canonical certificate
# ---------------------------------------------------------------------------

def _refine(adj: Sequence[Sequence[int]], colors: list[int]) -> list[int]:
    """Colour refinement to the coarsest equitable partition.

    Colours are renamed by sorted signature, so the result depends only on the
    isomorphism type of (graph, initial colouring).
    """
    ncells = len(set(colors))
    while True:
        sigs = [(colors[v], tuple(sorted(colors[w] for w in adj[v]))) for v in range(len(adj))]
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        colors = [rank[s] for s in sigs]
        if len(rank) == ncells:
            return colors
        ncells = len(rank)


def _individualize(colors: list[int], v: int) -> list[int]:
    keyed = [(c, 0 if u == v else 1) for u, c in enumerate(colors)]
    rank = {s: i for i, s in enumerate(sorted(set(keyed)))}
    return [rank[s] for s in keyed]


def _encode(g: MolecularGraph, labels: Sequence[int]) -> tuple[Edge, ...]:
    return tuple(sorted(_norm(labels[u], labels[v]) for u, v in g.edges))


def canonical_edges(g: MolecularGraph) -> tuple[Edge, ...]:
    """Minimum relabelled edge list over the individualisation-refinement tree."""
    n = g.vertex_count
    adj = g.adjacency
    best: list[tuple[Edge, ...] | None] = [None]

    def search(colors: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        if len(cells) == n:
            enc = _encode(g, colors)
            if best[0] is None or enc < best[0]:
                best[0] = enc
            return
        target = min((len(vs), c) for c, vs in cells.items() if len(vs) > 1)[1]
        for v in cells[target]:
            search(_refine(adj, _individualize(colors, v)))

    search(_refine(adj, [len(a) for a in adj]))
    assert best[0] is not None or n == 0
    return best[0] or ()


def certificate(g: MolecularGraph) -> bytes:
    """Label-invariant byte string; equal for isomorphic graphs."""
    edges = canonical_edges(g)
    flat = [x for e in edges for x in e]
    return struct.pack(f">II{len(flat)}H", g.vertex_count, len(edges), *flat)
