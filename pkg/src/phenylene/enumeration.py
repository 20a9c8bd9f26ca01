"""Exhaustive generation of tree-like phenylenes up to isomorphism."""

from __future__ import annotations

import os
import random
from collections import Counter
from dataclasses import dataclass, field

from .cuts import mostar_cut
from .errors import RangeError, ResourceBoundError
from .geometry import has_overlap
from .graph import certificate
from .model import Junction, PhenyleneTree, expand
from .structure import classify_hexagons

DEFAULT_MAX_H = 9
MAX_H_ENV = "PHENYLENE_MAX_H"


def resource_bound() -> int:
    raw = os.environ.get(MAX_H_ENV)
    if raw is None:
        return DEFAULT_MAX_H
    try:
        return int(raw)
    except ValueError:
        raise RangeError(f"{MAX_H_ENV} must be an integer, got {raw!r}") from None


# ---------------------------------------------------------------------------
# decorated-tree canonical form
# ---------------------------------------------------------------------------

def _encode_from(slots: list[dict[int, tuple[int, int]]], node: int, entry: int, sign: int) -> tuple:
    kids = []
    for s, (b, sb) in slots[node].items():
        if s == entry:
            continue
        kids.append(((sign * (s - entry)) % 6, _encode_from(slots, b, sb, sign)))
    return tuple(sorted(kids))


def tree_key(t: PhenyleneTree) -> tuple:
    """Canonical form of the decorated tree under hexagon renaming, per-hexagon
    rotation and global reflection.

    Within a hexagon only the offsets between used slots matter, and a
    reflection negates them. Taking the minimum over every root hexagon, every
    starting slot at the root and both reflections gives a complete invariant.
    """
    slots = t.slots()
    if t.h == 1:
        return ()
    best = None
    for root in range(t.h):
        for sign in (1, -1):
            for start in slots[root]:
                parts = []
                for s, (b, sb) in slots[root].items():
                    parts.append(((sign * (s - start)) % 6, _encode_from(slots, b, sb, sign)))
                enc = tuple(sorted(parts))
                if best is None or enc < best:
                    best = enc
    return best


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

@dataclass
class Entry:
    tree: PhenyleneTree
    certificate: bytes
    mo: int
    overlap: bool
    full_count: int

    @property
    def is_chain(self) -> bool:
        return self.full_count == 0


@dataclass
class ClassCatalog:
    h: int
    entries: list[Entry]
    chains_only: bool = False
    planar_only: bool = False
    counts: dict[str, object] = field(default_factory=dict)

    @property
    def representatives(self) -> list[PhenyleneTree]:
        return [e.tree for e in self.entries]

    def __len__(self) -> int:
        return len(self.entries)


def _children(t: PhenyleneTree) -> list[PhenyleneTree]:
    """Attach hexagon ``t.h`` through its slot 0 at every free compatible slot."""
    out = []
    for hx in range(t.h):
        for s in t.free_slots(hx):
            out.append(PhenyleneTree(t.h + 1, t.junctions + (Junction(hx, s, t.h, 0),)))
    return out


_LEVELS: dict[tuple[int, str], list[PhenyleneTree]] = {}


def _graph_key(t: PhenyleneTree) -> bytes:
    return certificate(expand(t))


def _level(h: int, dedupe: str = "certificate") -> list[PhenyleneTree]:
    """One tree per isomorphism class with ``h`` hexagons (no filters).

    ``dedupe="certificate"`` keys candidates by the certificate of the
    expanded graph; ``dedupe="tree"`` keys them by :func:`tree_key` and is
    kept as an independent cross-check.
    """
    if dedupe not in ("certificate", "tree"):
        raise ValueError(f"unknown dedupe mode {dedupe!r}")
    if h == 1:
        return [PhenyleneTree(1)]
    if (h, dedupe) in _LEVELS:
        return _LEVELS[h, dedupe]
    key = tree_key if dedupe == "tree" else _graph_key
    seen: dict = {}
    for parent in _level(h - 1, dedupe):
        for child in _children(parent):
            seen.setdefault(key(child), child)
    reps = [seen[k] for k in sorted(seen)]
    _LEVELS[h, dedupe] = reps
    return reps


def _entry(t: PhenyleneTree) -> Entry:
    g = expand(t)
    return Entry(t, certificate(g), mostar_cut(t), has_overlap(t), classify_hexagons(t).full_count)


_ENTRIES: dict[int, list[Entry]] = {}


def _all_entries(h: int) -> list[Entry]:
    if h not in _ENTRIES:
        entries = [_entry(t) for t in _level(h)]
        _ENTRIES[h] = sorted(entries, key=lambda e: (e.mo, e.certificate))
    return _ENTRIES[h]


def enumerate_classes(h: int, chains_only: bool = False, planar_only: bool = False,
                      max_h: int | None = None) -> ClassCatalog:
    """All isomorphism classes with ``h`` hexagons, sorted by (Mostar value, certificate).

    Candidates are grown from the ``h-1`` classes by one attachment at every
    free slot and deduplicated level by level on the certificate of their
    expanded graph.
    """
    if h < 1:
        raise RangeError(f"h must be >= 1, got {h}")
    bound = resource_bound() if max_h is None else max_h
    if h > bound:
        raise ResourceBoundError(
            f"h={h} exceeds the enumeration bound {bound}; raise it with {MAX_H_ENV} or --max-h")
    entries = [e for e in _all_entries(h)
               if (not chains_only or e.is_chain) and (not planar_only or not e.overlap)]
    per_full = Counter(e.full_count for e in entries)
    counts = {
        "total": len(entries),
        "chains": sum(e.is_chain for e in entries),
        "by_full_hexagons": {str(i): per_full[i] for i in sorted(per_full)},
        "overlapping": sum(e.overlap for e in entries),
        "planar": sum(not e.overlap for e in entries),
    }
    return ClassCatalog(h, entries, chains_only, planar_only, counts)


def count_by_invariant(catalog: ClassCatalog) -> dict[int, list[Entry]]:
    """Mostar value -> entries attaining it, keys ascending."""
    hist: dict[int, list[Entry]] = {}
    for e in catalog.entries:
        hist.setdefault(e.mo, []).append(e)
    return dict(sorted(hist.items()))


def sample(catalog: ClassCatalog, rng: random.Random) -> PhenyleneTree:
    """A representative drawn uniformly over isomorphism classes."""
    return rng.choice(catalog.entries).tree
