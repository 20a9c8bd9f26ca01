"""Decorated-tree encoding of tree-like phenylenes.

Hexagon ``i`` has boundary vertices ``(i, 0) .. (i, 5)`` in cyclic order and
slot ``j`` is its boundary edge ``(i, j)-(i, j+1)``. A junction glues slot
``slot_a`` of hexagon ``a`` to slot ``slot_b`` of hexagon ``b`` through a
quadrilateral with the two new edges ``(a, slot_a)-(b, slot_b+1)`` and
``(a, slot_a+1)-(b, slot_b)``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Any, Iterable, Mapping

from .errors import InvalidTreeError, SlotError
from .graph import MolecularGraph


@dataclass(frozen=True)
class Junction:
    a: int
    slot_a: int
    b: int
    slot_b: int

    def ends(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return (self.a, self.slot_a), (self.b, self.slot_b)

    def to_dict(self) -> dict[str, int]:
        return {"a": self.a, "slot_a": self.slot_a, "b": self.b, "slot_b": self.slot_b}


@dataclass(frozen=True)
class PhenyleneTree:
    h: int
    junctions: tuple[Junction, ...] = ()

    @classmethod
    def build(cls, h: int, junctions: Iterable[tuple[int, int, int, int] | Junction] = ()) -> "PhenyleneTree":
        js = tuple(j if isinstance(j, Junction) else Junction(*j) for j in junctions)
        return cls(h, js)

    def slots(self) -> list[dict[int, tuple[int, int]]]:
        """Per hexagon: used slot -> (neighbour hexagon, neighbour's slot)."""
        out: list[dict[int, tuple[int, int]]] = [{} for _ in range(self.h)]
        for j in self.junctions:
            out[j.a][j.slot_a] = (j.b, j.slot_b)
            out[j.b][j.slot_b] = (j.a, j.slot_a)
        return out

    def neighbours(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.h)]
        for j in self.junctions:
            adj[j.a].append(j.b)
            adj[j.b].append(j.a)
        return adj

    def free_slots(self, hexagon: int) -> list[int]:
        """Slots of ``hexagon`` where another quadrilateral may still be attached."""
        used = self.slots()[hexagon]
        return [s for s in range(6) if all(_circ(s, u) >= 2 for u in used)]

    # JSON interchange ------------------------------------------------------

    def to_dict(self) -> dict[str, Any]:
        return {"h": self.h, "junctions": [j.to_dict() for j in self.junctions]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    @classmethod
    def from_dict(cls, data: Mapping[str, Any]) -> "PhenyleneTree":
        problems = []
        if not isinstance(data, Mapping):
            raise InvalidTreeError(["top-level value must be an object"])
        h = data.get("h")
        if not isinstance(h, int) or isinstance(h, bool):
            problems.append("'h' must be an integer")
        raw = data.get("junctions", [])
        if not isinstance(raw, list):
            problems.append("'junctions' must be a list")
            raw = []
        js = []
        for idx, item in enumerate(raw):
            if not isinstance(item, Mapping):
                problems.append(f"junction {idx} must be an object")
                continue
            vals = [item.get(k) for k in ("a", "slot_a", "b", "slot_b")]
            if not all(isinstance(v, int) and not isinstance(v, bool) for v in vals):
                problems.append(f"junction {idx} needs integer a, slot_a, b, slot_b")
                continue
            js.append(Junction(*vals))
        if problems:
            raise InvalidTreeError(problems)
        tree = cls(h, tuple(js))
        check(tree)
        return tree

    @classmethod
    def from_json(cls, text: str) -> "PhenyleneTree":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InvalidTreeError([f"malformed JSON: {exc}"]) from None
        return cls.from_dict(data)


def _circ(s: int, t: int) -> int:
    d = (s - t) % 6
    return min(d, 6 - d)


def validate(t: PhenyleneTree) -> list[str]:
    """Return every structural violation; an empty list means ``t`` is valid."""
    out: list[str] = []
    if t.h < 1:
        return [f"h must be >= 1, got {t.h}"]
    if len(t.junctions) != t.h - 1:
        out.append(f"expected {t.h - 1} junctions for h={t.h}, got {len(t.junctions)}")
    used: list[list[int]] = [[] for _ in range(t.h)]
    parent = list(range(t.h))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for idx, j in enumerate(t.junctions):
        ok = True
        for name, hx in (("a", j.a), ("b", j.b)):
            if not 0 <= hx < t.h:
                out.append(f"junction {idx}: hexagon {name}={hx} out of range 0..{t.h - 1}")
                ok = False
        for name, s in (("slot_a", j.slot_a), ("slot_b", j.slot_b)):
            if not 0 <= s < 6:
                out.append(f"junction {idx}: {name}={s} out of range 0..5")
                ok = False
        if not ok:
            continue
        if j.a == j.b:
            out.append(f"junction {idx}: hexagon {j.a} joined to itself")
            continue
        used[j.a].append(j.slot_a)
        used[j.b].append(j.slot_b)
        ra, rb = find(j.a), find(j.b)
        if ra == rb:
            out.append(f"junction {idx}: closes a cycle between hexagons {j.a} and {j.b}")
        else:
            parent[ra] = rb
    if len({find(i) for i in range(t.h)}) > 1:
        out.append("hexagons are not connected")
    for hx, slots in enumerate(used):
        if len(slots) != len(set(slots)):
            out.append(f"hexagon {hx}: slot used twice")
        for x in range(len(slots)):
            for y in range(x + 1, len(slots)):
                s1, s2 = slots[x], slots[y]
                if s1 != s2 and _circ(s1, s2) < 2:
                    out.append(f"hexagon {hx}: slots {s1},{s2} at circular distance 1")
    return out


def check(t: PhenyleneTree) -> None:
    problems = validate(t)
    if problems:
        raise InvalidTreeError(problems)


def vertex_id(hexagon: int, position: int) -> int:
    return 6 * hexagon + position % 6


def hexagon_edge(hexagon: int, slot: int) -> tuple[int, int]:
    u, v = vertex_id(hexagon, slot), vertex_id(hexagon, slot + 1)
    return (u, v) if u < v else (v, u)


def connecting_edges(j: Junction) -> tuple[tuple[int, int], tuple[int, int]]:
    e1 = (vertex_id(j.a, j.slot_a), vertex_id(j.b, j.slot_b + 1))
    e2 = (vertex_id(j.a, j.slot_a + 1), vertex_id(j.b, j.slot_b))
    return tuple(sorted(e1)), tuple(sorted(e2))  # type: ignore[return-value]


def expand(t: PhenyleneTree) -> MolecularGraph:
    """The molecular graph: 6h vertices, 8h-2 edges; vertex (i, j) gets id 6i+j."""
    check(t)
    edges = [hexagon_edge(i, s) for i in range(t.h) for s in range(6)]
    for j in t.junctions:
        edges.extend(connecting_edges(j))
    return MolecularGraph.from_edges(6 * t.h, edges)


def join(p1: PhenyleneTree, hex1: int, slot1: int, p2: PhenyleneTree, hex2: int, slot2: int) -> PhenyleneTree:
    """Glue ``p2`` to ``p1`` with one new quadrilateral.

    ``p2``'s hexagons are renumbered after ``p1``'s. With ``u1, v1`` the
    vertices ``(hex1, slot1), (hex1, slot1+1)`` and ``u2, v2`` the vertices
    ``(hex2, slot2+1), (hex2, slot2)``, the result connects u1-u2 and v1-v2.
    """
    check(p1)
    check(p2)
    for name, tree, hx, s in (("first", p1, hex1, slot1), ("second", p2, hex2, slot2)):
        if not 0 <= hx < tree.h or not 0 <= s < 6:
            raise SlotError(f"{name} operand: no slot {s} on hexagon {hx}")
        if s not in tree.free_slots(hx):
            raise SlotError(f"{name} operand: slot {s} on hexagon {hx} is occupied or adjacent to a used slot")
    off = p1.h
    moved = tuple(Junction(j.a + off, j.slot_a, j.b + off, j.slot_b) for j in p2.junctions)
    return PhenyleneTree(p1.h + p2.h, p1.junctions + moved + (Junction(hex1, slot1, hex2 + off, slot2),))


def mirror(t: PhenyleneTree) -> PhenyleneTree:
    """Reflect every hexagon's labelling; the result is the mirror image."""
    return PhenyleneTree(t.h, tuple(Junction(j.a, 5 - j.slot_a, j.b, 5 - j.slot_b) for j in t.junctions))


def renumber(t: PhenyleneTree, order: list[int]) -> PhenyleneTree:
    """Rename hexagon ``order[k]`` to ``k``."""
    pos = {old: new for new, old in enumerate(order)}
    return PhenyleneTree(t.h, tuple(Junction(pos[j.a], j.slot_a, pos[j.b], j.slot_b) for j in t.junctions))
