"""Exact plane embedding with regular unit hexagons and unit squares.

All hexagons of a phenylene are translates of one another. Coordinates are
stored in half-units as elements of Z[sqrt 3]: a stored pair ``(X, Y)`` is the
point ``(X/2, Y/2)``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .model import PhenyleneTree, check, vertex_id
from .surd import Surd, two_cos, two_sin

Point = tuple[Surd, Surd]

_STEP = Surd(1, 1)  # centre-to-centre distance sqrt(3)+1 across a quadrilateral


@dataclass(frozen=True)
class Embedding:
    vertices: tuple[Point, ...]  # indexed by vertex id 6*i + j
    centers: tuple[Point, ...]
    rotations: tuple[int, ...]
    overlap: bool

    def faces(self, t: PhenyleneTree) -> list[list[Point]]:
        return [pts for pts, _ in _faces(t, self.vertices)]


def _add(p: Point, q: Point) -> Point:
    return (p[0] + q[0], p[1] + q[1])


def _sub(p: Point, q: Point) -> Point:
    return (p[0] - q[0], p[1] - q[1])


def _dot(p: Point, q: Point) -> Surd:
    return p[0] * q[0] + p[1] * q[1]


def cross(p: Point, q: Point) -> Surd:
    return p[0] * q[1] - p[1] * q[0]


def _place(t: PhenyleneTree) -> tuple[list[Point], list[int]]:
    origin = (Surd(), Surd())
    centers: list[Point | None] = [None] * t.h
    rot: list[int] = [0] * t.h
    centers[0] = origin
    slots = t.slots()
    queue = deque([0])
    while queue:
        a = queue.popleft()
        ca = centers[a]
        assert ca is not None
        for sa, (b, sb) in slots[a].items():
            if centers[b] is not None:
                continue
            m = 2 * (sa + rot[a]) + 1  # outward normal of slot sa, in 30-degree steps
            centers[b] = _add(ca, (_STEP * two_cos(m), _STEP * two_sin(m)))
            rot[b] = (sa + rot[a] + 3 - sb) % 6
            queue.append(b)
    return [c for c in centers if c is not None], rot


def _faces(t: PhenyleneTree, verts: tuple[Point, ...]) -> list[tuple[list[Point], int]]:
    out = [([verts[vertex_id(i, p)] for p in range(6)], 6) for i in range(t.h)]
    for j in t.junctions:
        quad = [
            verts[vertex_id(j.a, j.slot_a)],
            verts[vertex_id(j.a, j.slot_a + 1)],
            verts[vertex_id(j.b, j.slot_b)],
            verts[vertex_id(j.b, j.slot_b + 1)],
        ]
        out.append((quad, 4))
    return out


def _interiors_overlap(p: list[Point], q: list[Point]) -> bool:
    """Separating-axis test for two convex polygons; touching is not overlap."""
    for poly in (p, q):
        for k in range(len(poly)):
            d = _sub(poly[(k + 1) % len(poly)], poly[k])
            axis = (-d[1], d[0])
            pp = [_dot(x, axis) for x in p]
            qq = [_dot(x, axis) for x in q]
            if max(pp) <= min(qq) or max(qq) <= min(pp):
                return False
    return True


def _scaled_center(pts: list[Point]) -> Point:
    k = 12 // len(pts)
    sx, sy = Surd(), Surd()
    for x, y in pts:
        sx, sy = sx + x, sy + y
    return (sx * k, sy * k)


# 12 * (hexagon circumradius + square circumradius), squared, in half-units: (12 * 4)^2
_FAR = Surd(48 * 48)


def find_overlaps(t: PhenyleneTree, verts: tuple[Point, ...]) -> list[tuple[int, int]]:
    """Pairs of face indices (hexagons first, then quadrilaterals) whose interiors meet."""
    faces = _faces(t, verts)
    centres = [_scaled_center(pts) for pts, _ in faces]
    hits = []
    for x in range(len(faces)):
        for y in range(x + 1, len(faces)):
            d = _sub(centres[x], centres[y])
            if _dot(d, d) >= _FAR:
                continue
            if _interiors_overlap(faces[x][0], faces[y][0]):
                hits.append((x, y))
    return hits


def geometric_embedding(t: PhenyleneTree) -> Embedding:
    check(t)
    centers, rot = _place(t)
    verts: list[Point] = []
    for i in range(t.h):
        for p in range(6):
            m = 2 * (p + rot[i])
            verts.append(_add(centers[i], (two_cos(m), two_sin(m))))
    vt = tuple(verts)
    coincide = len(set(vt)) < len(vt)
    overlap = coincide or bool(find_overlaps(t, vt))
    return Embedding(vt, tuple(centers), tuple(rot), overlap)


def has_overlap(t: PhenyleneTree) -> bool:
    return geometric_embedding(t).overlap
