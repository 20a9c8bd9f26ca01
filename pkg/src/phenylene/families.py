"""Constructors for the named phenylene families.

Family grammar (also used by the CLI): ``linear:h``, ``chain:WORD``,
``cl:t1,t2,...`` and ``pl:j,k,n``.
"""

from __future__ import annotations

import hashlib
import warnings
from dataclasses import dataclass
from typing import Sequence

from .errors import RangeError
from .graph import certificate
from .model import Junction, PhenyleneTree, expand

_EXIT = {"S": 3, "L": 4, "R": 2}


def linear(h: int) -> PhenyleneTree:
    """L_h: hexagon i is glued to hexagon i+1 through slots 0 and 3."""
    if h < 1:
        raise RangeError(f"linear chain needs h >= 1, got {h}")
    return PhenyleneTree(h, tuple(Junction(i, 0, i + 1, 3) for i in range(h - 1)))


def chain_from_turns(word: str) -> PhenyleneTree:
    """Chain with h = len(word) + 2 whose internal hexagons follow ``word``."""
    word = word.upper()
    bad = set(word) - set(_EXIT)
    if bad:
        raise RangeError(f"turn word may only use S, L, R; got {''.join(sorted(bad))}")
    junctions = [Junction(0, 0, 1, 3)]
    entry = 3
    for i, letter in enumerate(word, start=1):
        out = (entry + _EXIT[letter]) % 6
        junctions.append(Junction(i, out, i + 1, (out + 3) % 6))
        entry = (out + 3) % 6
    return PhenyleneTree(len(word) + 2, tuple(junctions))


@dataclass(frozen=True)
class SegmentSpec:
    t_values: tuple[int, ...]
    zigzag: tuple[bool, ...] | None = None  # one flag per internal segment; default all zigzag

    def __post_init__(self) -> None:
        t = self.t_values
        if len(t) < 2:
            raise RangeError("a segment chain needs at least two segments")
        if t[0] < 1 or t[-1] < 1:
            raise RangeError(f"terminal t-values must be >= 1, got {t[0]} and {t[-1]}")
        if any(x < 0 for x in t[1:-1]):
            raise RangeError("internal t-values must be >= 0")
        if self.zigzag is not None and len(self.zigzag) != len(t) - 2:
            raise RangeError(f"need {len(t) - 2} zigzag flags, got {len(self.zigzag)}")

    @property
    def h(self) -> int:
        return sum(self.t_values) + len(self.t_values) - 1


def segment_word(spec: SegmentSpec) -> str:
    t = spec.t_values
    flags = spec.zigzag if spec.zigzag is not None else (True,) * (len(t) - 2)
    turns = []
    pos = t[0]
    for x in t[1:-1]:
        turns.append(pos)
        pos += x + 1
    turns.append(pos)
    letters = ["S"] * (spec.h - 2)
    hand = "L"
    for idx, p in enumerate(turns):
        if idx > 0 and flags[idx - 1]:
            hand = "R" if hand == "L" else "L"
        letters[p - 1] = hand
    return "".join(letters)


def segment_chain(spec: SegmentSpec | Sequence[int]) -> PhenyleneTree:
    if not isinstance(spec, SegmentSpec):
        spec = SegmentSpec(tuple(spec))
    return chain_from_turns(segment_word(spec))


def cl(*t_values: int) -> PhenyleneTree:
    """C_L(t_1, ..., t_{k+1}) with every internal segment zigzag."""
    return segment_chain(SegmentSpec(tuple(t_values)))


def pl(j: int, k: int, n: int) -> PhenyleneTree:
    """P_L(j, k, n): one full hexagon (id 0, slots 0/2/4) with linear branches."""
    if not 1 <= j <= k <= n:
        raise RangeError(f"P_L needs 1 <= j <= k <= n, got ({j}, {k}, {n})")
    junctions = []
    nxt = 1
    for slot, length in ((0, j), (2, k), (4, n)):
        junctions.append(Junction(0, slot, nxt, (slot + 3) % 6))
        for step in range(length - 1):
            junctions.append(Junction(nxt + step, slot, nxt + step + 1, (slot + 3) % 6))
        nxt += length
    return PhenyleneTree(j + k + n + 1, tuple(junctions))


def second_minimal_set(h: int) -> list[PhenyleneTree]:
    """C_L(1, h-2) and C_L(1, h-4, 1)."""
    if h < 4:
        raise RangeError(f"second minimal chains need h >= 4, got {h}")
    return [cl(1, h - 2), cl(1, h - 4, 1)]


THIRD_MINIMAL_PATTERNS: tuple[tuple[str, ...], ...] = (
    ("2", "h-3"),
    ("1", "0", "h-3"),
    ("1", "h-5", "2"),
    ("2", "h-6", "2"),
    ("1", "0", "h-5", "1"),
    ("1", "0", "h-6", "2"),
    ("1", "0", "h-6", "0", "1"),
)


def _instantiate(pattern: tuple[str, ...], h: int) -> tuple[int, ...]:
    return tuple(h - int(p[2:]) if p.startswith("h-") else int(p) for p in pattern)


def third_minimal_chain_set(h: int) -> list[tuple[tuple[int, ...], PhenyleneTree]]:
    """The seven chains tied at the third smallest value among chains.

    Members whose t-values are inadmissible at this ``h`` are dropped, and so
    are members isomorphic to an earlier one; a warning names what was lost.
    """
    picked: list[tuple[tuple[int, ...], PhenyleneTree]] = []
    seen: set[bytes] = set()
    dropped = []
    for pattern in THIRD_MINIMAL_PATTERNS:
        t = _instantiate(pattern, h)
        try:
            tree = cl(*t)
        except RangeError:
            dropped.append(f"C_L({','.join(pattern)}) inadmissible")
            continue
        cert = certificate(expand(tree))
        if cert in seen:
            dropped.append(f"C_L{t} duplicates an earlier member")
            continue
        seen.add(cert)
        picked.append((t, tree))
    if not picked:
        raise RangeError(f"no third minimal chain is admissible at h={h}")
    if dropped:
        warnings.warn(f"h={h}: {len(picked)} of 7 members; " + "; ".join(dropped), stacklevel=2)
    return picked


# ---------------------------------------------------------------------------
# family specification strings
# ---------------------------------------------------------------------------

def _ints(body: str) -> list[int]:
    try:
        return [int(x) for x in body.split(",")]
    except ValueError:
        raise RangeError(f"expected comma-separated integers, got {body!r}") from None


def parse_family(spec: str) -> PhenyleneTree:
    kind, sep, body = spec.strip().partition(":")
    if not sep:
        raise RangeError(f"family spec must look like NAME:PARAMS, got {spec!r}")
    kind = kind.lower()
    if kind == "linear":
        vals = _ints(body)
        if len(vals) != 1:
            raise RangeError("linear takes one parameter h")
        return linear(vals[0])
    if kind == "chain":
        return chain_from_turns(body)
    if kind == "cl":
        return cl(*_ints(body))
    if kind == "pl":
        vals = _ints(body)
        if len(vals) != 3:
            raise RangeError("pl takes three parameters j,k,n")
        return pl(*vals)
    raise RangeError(f"unknown family {kind!r}; expected linear, chain, cl or pl")


# ---------------------------------------------------------------------------
# back-matching representatives to family names
# ---------------------------------------------------------------------------

def _swap(word: str) -> str:
    return word.translate(str.maketrans("LR", "RL"))


def _same_graph(a: PhenyleneTree, b: PhenyleneTree) -> bool:
    return certificate(expand(a)) == certificate(expand(b))


def describe(t: PhenyleneTree) -> str:
    """Family name in the CLI grammar, or ``cert:<hash>`` when none applies.

    Every proposed name is rebuilt and compared by certificate, so a class is
    never given a name that describes a different graph.
    """
    from .structure import HexClass, SegmentKind, classify_hexagons, segment_t_values, segments, turn_word

    report = classify_hexagons(t)
    name = None
    candidate: PhenyleneTree | None = None
    if report.is_chain:
        segs = segments(t)
        if len(segs) == 1:
            name, candidate = f"linear:{t.h}", linear(t.h)
        elif all(s.kind != SegmentKind.NON_ZIGZAG for s in segs):
            tv = segment_t_values(segs)
            tv = min(tv, tv[::-1], key=lambda x: (x[0] > x[-1], x))
            name, candidate = "cl:" + ",".join(map(str, tv)), cl(*tv)
        else:
            w = turn_word(t)
            w = min(w, _swap(w), w[::-1], _swap(w[::-1]))
            name, candidate = f"chain:{w}", chain_from_turns(w)
    elif report.full_count == 1 and report.turn_count == 0:
        centre = report.labels.index(HexClass.FULL)
        adj = t.neighbours()
        lengths = []
        for start in adj[centre]:
            prev, cur, n = centre, start, 1
            while len(adj[cur]) == 2:
                prev, cur = cur, next(w for w in adj[cur] if w != prev)
                n += 1
            lengths.append(n)
        j, k, n = sorted(lengths)
        name, candidate = f"pl:{j},{k},{n}", pl(j, k, n)
    if candidate is not None and _same_graph(candidate, t):
        return name  # type: ignore[return-value]
    return "cert:" + hashlib.sha1(certificate(expand(t))).hexdigest()[:12]
