"""Hexagon classification and the segment decomposition of chains."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import NotAChainError
from .geometry import cross, geometric_embedding
from .model import PhenyleneTree, check


class HexClass(str, Enum):
    ISOLATED = "isolated"
    TERMINAL = "terminal"
    STRAIGHT = "straight"
    TURN = "turn"
    FULL = "full"


@dataclass(frozen=True)
class HexagonReport:
    labels: tuple[HexClass, ...]

    @property
    def full_count(self) -> int:
        return self.labels.count(HexClass.FULL)

    @property
    def turn_count(self) -> int:
        return self.labels.count(HexClass.TURN)

    @property
    def terminal_count(self) -> int:
        return self.labels.count(HexClass.TERMINAL)

    @property
    def straight_count(self) -> int:
        return self.labels.count(HexClass.STRAIGHT)

    @property
    def is_chain(self) -> bool:
        return self.full_count == 0


def classify_hexagons(t: PhenyleneTree) -> HexagonReport:
    check(t)
    labels = []
    for used in t.slots():
        s = sorted(used)
        if len(s) == 0:
            labels.append(HexClass.ISOLATED)
        elif len(s) == 1:
            labels.append(HexClass.TERMINAL)
        elif len(s) == 2:
            labels.append(HexClass.STRAIGHT if (s[1] - s[0]) % 6 == 3 else HexClass.TURN)
        else:
            labels.append(HexClass.FULL)
    return HexagonReport(tuple(labels))


def chain_order(t: PhenyleneTree) -> list[int]:
    """Hexagons of a chain from one end to the other, starting at the smaller end id."""
    if not classify_hexagons(t).is_chain:
        raise NotAChainError("phenylene has a full hexagon")
    if t.h == 1:
        return [0]
    adj = t.neighbours()
    start = min(i for i in range(t.h) if len(adj[i]) == 1)
    order = [start]
    prev = -1
    while len(order) < t.h:
        cur = order[-1]
        nxt = next(w for w in adj[cur] if w != prev)
        prev = cur
        order.append(nxt)
    return order


def turn_word(t: PhenyleneTree, order: list[int] | None = None) -> str:
    """Letters S/L/R for the internal hexagons along ``order``.

    Entering hexagon ``i`` through slot ``p`` and leaving through ``q``:
    offset 3 is straight, 4 a left turn and 2 a right turn.
    """
    order = order or chain_order(t)
    slots = t.slots()
    word = []
    for k in range(1, len(order) - 1):
        here = slots[order[k]]
        p = next(s for s, (b, _) in here.items() if b == order[k - 1])
        q = next(s for s, (b, _) in here.items() if b == order[k + 1])
        word.append({3: "S", 4: "L", 2: "R"}[(q - p) % 6])
    return "".join(word)


class SegmentKind(str, Enum):
    TERMINAL = "terminal"
    ZIGZAG = "zigzag"
    NON_ZIGZAG = "non-zigzag"


@dataclass(frozen=True)
class Segment:
    hexagons: tuple[int, ...]
    kind: SegmentKind

    @property
    def length(self) -> int:
        return len(self.hexagons)


def segments(t: PhenyleneTree) -> list[Segment]:
    """Maximal linear sub-chains in chain order; neighbours share a turn hexagon.

    An internal segment is zigzag when the hexagons just beyond its two
    bounding turns lie on opposite sides of the line through its centres,
    decided exactly on the plane embedding.
    """
    check(t)
    order = chain_order(t)
    labels = classify_hexagons(t).labels
    turns = [k for k, i in enumerate(order) if labels[i] == HexClass.TURN]
    bounds = [0, *turns, len(order) - 1]
    if len(order) == 1:
        return [Segment((order[0],), SegmentKind.TERMINAL)]
    centers = geometric_embedding(t).centers
    out = []
    for idx in range(len(bounds) - 1):
        lo, hi = bounds[idx], bounds[idx + 1]
        hexes = tuple(order[lo:hi + 1])
        if idx == 0 or idx == len(bounds) - 2:
            kind = SegmentKind.TERMINAL
        else:
            a, b = centers[order[lo]], centers[order[hi]]
            axis = (b[0] - a[0], b[1] - a[1])
            before, after = centers[order[lo - 1]], centers[order[hi + 1]]
            s1 = cross(axis, (before[0] - a[0], before[1] - a[1])).sign()
            s2 = cross(axis, (after[0] - a[0], after[1] - a[1])).sign()
            kind = SegmentKind.ZIGZAG if s1 * s2 < 0 else SegmentKind.NON_ZIGZAG
        out.append(Segment(hexes, kind))
    return out


def segment_t_values(segs: list[Segment]) -> list[int]:
    """Segment lengths rewritten as t-values: terminal length t+1, internal length t+2."""
    if len(segs) == 1:
        return [segs[0].length - 1]
    return [s.length - (1 if s.kind == SegmentKind.TERMINAL else 2) for s in segs]
