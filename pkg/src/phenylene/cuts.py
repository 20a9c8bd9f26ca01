"""Orthogonal cuts and the cut-method Mostar index."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .errors import GraphInputError
from .model import PhenyleneTree, check, connecting_edges, expand, hexagon_edge

Edge = tuple[int, int]


@dataclass(frozen=True)
class CutClass:
    """A class of mutually parallel edges.

    ``representative`` is the smallest edge ``(u, v)``; ``r_u`` and ``r_v``
    count the hexagons lying wholly in the component of ``u`` and of ``v``
    once the class is removed. Hexagons crossed by the cut count for neither.
    """

    edges: frozenset[Edge]
    representative: Edge
    r_u: int
    r_v: int

    @property
    def size(self) -> int:
        return len(self.edges)

    @property
    def contribution(self) -> int:
        return 6 * self.size * abs(self.r_u - self.r_v)

    def r_of(self, vertex_side: int) -> int:
        """Hexagon count on the side of the representative endpoint ``vertex_side``."""
        u, v = self.representative
        if vertex_side == u:
            return self.r_u
        if vertex_side == v:
            return self.r_v
        raise ValueError(f"{vertex_side} is not an endpoint of {self.representative}")


def _opposite_pairs(t: PhenyleneTree) -> list[tuple[Edge, Edge]]:
    pairs = []
    for i in range(t.h):
        for s in range(3):
            pairs.append((hexagon_edge(i, s), hexagon_edge(i, s + 3)))
    for j in t.junctions:
        pairs.append((hexagon_edge(j.a, j.slot_a), hexagon_edge(j.b, j.slot_b)))
        pairs.append(connecting_edges(j))
    return pairs


def edge_classes(t: PhenyleneTree) -> list[list[Edge]]:
    """Partition of the edge set under the transitive closure of 'opposite in a face'."""
    parent: dict[Edge, Edge] = {}

    def find(e: Edge) -> Edge:
        parent.setdefault(e, e)
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for e, f in _opposite_pairs(t):
        ra, rb = find(e), find(f)
        if ra != rb:
            parent[max(ra, rb)] = min(ra, rb)
    groups: dict[Edge, list[Edge]] = {}
    for e in parent:
        groups.setdefault(find(e), []).append(e)
    return sorted((sorted(g) for g in groups.values()), key=lambda g: g[0])


def _sides(adj: list[list[int]], removed: set[Edge], start: int) -> list[bool]:
    seen = [False] * len(adj)
    seen[start] = True
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for w in adj[u]:
            if not seen[w] and ((u, w) if u < w else (w, u)) not in removed:
                seen[w] = True
                queue.append(w)
    return seen


def cut_classes(t: PhenyleneTree) -> list[CutClass]:
    check(t)
    g = expand(t)
    adj = [list(a) for a in g.adjacency]
    out = []
    for group in edge_classes(t):
        removed = set(group)
        u, v = group[0]
        side_u = _sides(adj, removed, u)
        side_v = _sides(adj, removed, v)
        if side_u[v] or not all(a != b for a, b in zip(side_u, side_v)):
            raise GraphInputError(f"cut class through {group[0]} does not split the graph in two")
        r_u = r_v = 0
        for i in range(t.h):
            inside = [side_u[6 * i + p] for p in range(6)]
            if all(inside):
                r_u += 1
            elif not any(inside):
                r_v += 1
        out.append(CutClass(frozenset(group), (u, v), r_u, r_v))
    return out


def class_of(t: PhenyleneTree, edge: Edge) -> CutClass:
    e = tuple(sorted(edge))
    for c in cut_classes(t):
        if e in c.edges:
            return c
    raise GraphInputError(f"{edge} is not an edge of the expanded graph")


def mostar_cut(t: PhenyleneTree) -> int:
    """Mostar index as 6 * sum(|class| * |r_u - r_v|)."""
    return sum(c.contribution for c in cut_classes(t))


def split_counts(t: PhenyleneTree, u: int, v: int) -> tuple[int, int, int]:
    """``(o, r_u, r_v)`` for the cut class through edge ``(u, v)``, oriented as given."""
    c = class_of(t, (u, v))
    g = expand(t)
    side_u = _sides([list(a) for a in g.adjacency], set(c.edges), u)
    r_u = r_v = 0
    for i in range(t.h):
        inside = [side_u[6 * i + p] for p in range(6)]
        if all(inside):
            r_u += 1
        elif not any(inside):
            r_v += 1
    return c.size, r_u, r_v
