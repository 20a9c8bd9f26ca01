"""Ranking by Mostar index and computational checks of the extremal results."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Any, Callable

from .cuts import mostar_cut, split_counts
from .enumeration import ClassCatalog, Entry, count_by_invariant, enumerate_classes
from .errors import RangeError
from .families import cl, describe, linear, pl, second_minimal_set
from .formulas import mo_linear, mo_pl, mo_second
from .geometry import has_overlap
from .graph import certificate, mostar_direct
from .model import PhenyleneTree, expand, join, mirror, vertex_id
from .structure import HexClass, classify_hexagons

THEOREMS = ("3.5", "4.4", "5.4")


@dataclass
class Group:
    value: int
    members: list[Entry]

    def names(self) -> list[str]:
        return [describe(e.tree) for e in self.members]


@dataclass
class Verdict:
    claim: str
    h: int
    status: str  # "pass", "fail" or "no-claim"
    expected_value: int | None = None
    observed_value: int | None = None
    expected_members: list[str] = field(default_factory=list)
    observed_members: list[str] = field(default_factory=list)
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim, "h": self.h, "status": self.status,
            "expected_value": self.expected_value, "observed_value": self.observed_value,
            "expected_members": self.expected_members, "observed_members": self.observed_members,
            "detail": self.detail,
        }


@dataclass
class RankingReport:
    h: int
    groups: list[Group]
    chains_only: bool
    planar_only: bool
    direct_checked: int
    verdicts: list[Verdict] = field(default_factory=list)

    def to_dict(self, top: int | None = None) -> dict[str, Any]:
        groups = self.groups if top is None else self.groups[:top]
        return {
            "h": self.h,
            "filters": {"chains_only": self.chains_only, "planar_only": self.planar_only},
            "direct_checked": self.direct_checked,
            "groups": [
                {"rank": i + 1, "mo": g.value, "class_count": len(g.members), "members": g.names()}
                for i, g in enumerate(groups)
            ],
            "verdicts": [v.to_dict() for v in self.verdicts],
        }


def rank(h: int, chains_only: bool = False, planar_only: bool = False,
         max_h: int | None = None, direct_sample: int = 25) -> RankingReport:
    """Group a catalog by Mostar value, ascending.

    Values come from the cut method; an evenly spaced sample of
    ``direct_sample`` classes is recomputed from the definition.
    """
    catalog = enumerate_classes(h, chains_only, planar_only, max_h=max_h)
    entries = catalog.entries
    step = max(1, len(entries) // max(1, direct_sample))
    checked = 0
    for e in entries[::step][:direct_sample]:
        direct = mostar_direct(expand(e.tree))
        if direct != e.mo:
            raise AssertionError(f"cut method {e.mo} != direct {direct} for {e.tree.to_json()}")
        checked += 1
    groups = [Group(v, es) for v, es in count_by_invariant(catalog).items()]
    return RankingReport(h, groups, chains_only, planar_only, checked)


def _certs(trees: list[PhenyleneTree]) -> set[bytes]:
    return {certificate(expand(t)) for t in trees}


def _group_verdict(claim: str, report: RankingReport, index: int,
                   expected: list[PhenyleneTree], value: int) -> Verdict:
    exp_names = sorted(describe(t) for t in expected)
    if index >= len(report.groups):
        return Verdict(claim, report.h, "fail", value, None, exp_names, [],
                       f"ranking has only {len(report.groups)} groups")
    g = report.groups[index]
    obs = {e.certificate for e in g.members}
    ok = g.value == value and obs == _certs(expected)
    return Verdict(claim, report.h, "pass" if ok else "fail", value, g.value,
                   exp_names, sorted(g.names()), f"group {index + 1} of the ranking")


def verify_min(h: int, report: RankingReport | None = None) -> Verdict:
    report = report or rank(h)
    return _group_verdict("3.5", report, 0, [linear(h)], mo_linear(h).value)


def verify_second(h: int, report: RankingReport | None = None) -> Verdict:
    report = report or rank(h)
    if h >= 5:
        return _group_verdict("4.4", report, 1, second_minimal_set(h), mo_second(h).value)
    if h == 4:
        return _group_verdict("4.4", report, 1, [pl(1, 1, 1)], mo_pl(1, 1, 1).value)
    return _observed("4.4", report, 1)


def verify_third(h: int, report: RankingReport | None = None) -> Verdict:
    report = report or rank(h)
    if h >= 5:
        return _group_verdict("5.4", report, 2, [pl(1, 1, h - 3)], mo_pl(1, 1, h - 3).value)
    return _observed("5.4", report, 2)


def _observed(claim: str, report: RankingReport, index: int) -> Verdict:
    if index >= len(report.groups):
        return Verdict(claim, report.h, "no-claim", detail=f"only {len(report.groups)} groups")
    g = report.groups[index]
    return Verdict(claim, report.h, "no-claim", observed_value=g.value,
                   observed_members=sorted(g.names()),
                   detail=f"outside the stated range; group {index + 1} reported as observed")


VERIFIERS: dict[str, Callable[..., Verdict]] = {"3.5": verify_min, "4.4": verify_second, "5.4": verify_third}


def verify(theorem: str, h: int, planar_only: bool = False, max_h: int | None = None) -> Verdict:
    if theorem not in VERIFIERS:
        raise RangeError(f"unknown theorem {theorem!r}; expected one of {', '.join(THEOREMS)}")
    report = rank(h, planar_only=planar_only, max_h=max_h)
    v = VERIFIERS[theorem](h, report)
    v.detail += "; planar classes only" if planar_only else "; all classes"
    return v


def verify_filter_stability(theorem: str, h: int, max_h: int | None = None) -> tuple[Verdict, Verdict, bool]:
    """Verdicts with and without overlapping classes and whether they agree."""
    a = verify(theorem, h, planar_only=False, max_h=max_h)
    b = verify(theorem, h, planar_only=True, max_h=max_h)
    same = (a.status, a.observed_value, a.observed_members) == (b.status, b.observed_value, b.observed_members)
    return a, b, same


# ---------------------------------------------------------------------------
# transformation checks
# ---------------------------------------------------------------------------

@dataclass
class LemmaCheck:
    lemma: str
    passed: bool
    values: dict[str, Any]

    def to_dict(self) -> dict[str, Any]:
        return {"lemma": self.lemma, "passed": self.passed, **self.values}


def _attach_linear(p: PhenyleneTree, hexagon: int, slot: int, k: int, at: int = 3) -> PhenyleneTree:
    """Glue L_k to ``p``; ``at`` picks the slot on L_k's end hexagon (3 = para)."""
    return join(p, hexagon, slot, linear(k), 0, at)


def _require_slot(p: PhenyleneTree, hexagon: int, slot: int) -> None:
    if not 0 <= hexagon < p.h or slot not in p.free_slots(hexagon):
        raise RangeError(f"slot {slot} of hexagon {hexagon} is not free for attachment")


def check_lemma_3_1(p: PhenyleneTree, hexagon: int, slot: int, k: int) -> LemmaCheck:
    """Attach L_k at a free boundary edge ``st`` in its three orientations.

    P_2 is the para attachment; of the two meta attachments, P_1 puts the
    body of L_k on the side of ``s`` (the endpoint whose side holds fewer
    hexagons) and P_3 on the side of ``t``. The sides are read off the cut
    class of ``st`` after joining.
    """
    n = p.h
    if k < 2 or n < k - 1:
        raise RangeError(f"need k >= 2 and n >= k-1, got k={k}, n={n}")
    _require_slot(p, hexagon, slot)
    a, b = vertex_id(hexagon, slot), vertex_id(hexagon, slot + 1)
    o, r_a, r_b = split_counts(p, a, b)
    s, t, r_s, r_t = (a, b, r_a, r_b) if r_a <= r_b else (b, a, r_b, r_a)

    p2 = _attach_linear(p, hexagon, slot, k, 3)
    metas = []
    for at in (2, 4):
        q = _attach_linear(p, hexagon, slot, k, at)
        _, rs_new, rt_new = split_counts(q, s, t)
        metas.append((rs_new - r_s, rt_new - r_t, q))
    p1 = next(q for ds, dt, q in metas if ds == k - 1 and dt == 0)
    p3 = next(q for ds, dt, q in metas if dt == k - 1 and ds == 0)
    mo1, mo2, mo3 = mostar_cut(p1), mostar_cut(p2), mostar_cut(p3)

    gap = r_t - r_s
    equality_expected = gap >= k - 1 and r_s == 0
    # per-orientation expressions in n, k, o, r_s, r_t; reported, not gated on
    phi1 = 6 * (2 * (n - k + 1) + 2 * k * n + (o + 2) * abs(gap - (k - 1)))
    phi2 = 6 * (4 * (n - k + 1) + (o + 2 * k) * gap)
    phi3 = 6 * (2 * (n - k + 1) + 2 * k * n + (o + 2) * (gap + k - 1))
    ok = mo2 <= mo1 and (mo1 == mo2) == equality_expected and mo2 < mo3
    return LemmaCheck("3.1", ok, {
        "n": n, "k": k, "o_st": o, "r_s": r_s, "r_t": r_t,
        "mo_p1": mo1, "mo_p2": mo2, "mo_p3": mo3,
        "equality_expected": equality_expected,
        "predicted_p1_minus_p2": phi1 - phi2, "predicted_p3_minus_p2": phi3 - phi2,
        "differences_match": (mo1 - mo2, mo3 - mo2) == (phi1 - phi2, phi3 - phi2),
        "trees": [p1.to_dict(), p2.to_dict(), p3.to_dict()],
    })


def turn_attachment_slot(p: PhenyleneTree, hexagon: int) -> int:
    """The one free slot of a turn hexagon where a third quadrilateral fits."""
    if classify_hexagons(p).labels[hexagon] != HexClass.TURN:
        raise RangeError(f"hexagon {hexagon} is not a turn hexagon")
    (slot,) = p.free_slots(hexagon)
    return slot


def check_corollary_3_2(p: PhenyleneTree, hexagon: int, chain: PhenyleneTree,
                        chain_hexagon: int, chain_slot: int) -> LemmaCheck:
    """Linear branch versus an arbitrary chain C_k at a turn hexagon of ``p``."""
    report = classify_hexagons(chain)
    if not report.is_chain:
        raise RangeError("second operand must be a phenylene chain")
    if chain.h > 1 and report.labels[chain_hexagon] != HexClass.TERMINAL:
        raise RangeError(f"hexagon {chain_hexagon} is not a terminal hexagon of the chain")
    slot = turn_attachment_slot(p, hexagon)
    _require_slot(chain, chain_hexagon, chain_slot)
    with_linear = _attach_linear(p, hexagon, slot, chain.h)
    with_chain = join(p, hexagon, slot, chain, chain_hexagon, chain_slot)
    mo_lin, mo_chain = mostar_cut(with_linear), mostar_cut(with_chain)
    return LemmaCheck("3.2", mo_lin <= mo_chain, {
        "n": p.h, "k": chain.h, "mo_linear_branch": mo_lin, "mo_chain_branch": mo_chain,
        "trees": [with_linear.to_dict(), with_chain.to_dict()],
    })


def check_lemma_3_3(p: PhenyleneTree, terminal: int, j: int, k: int) -> LemmaCheck:
    """Two linear branches on a terminal hexagon versus one merged branch of length j+k."""
    n = p.h - 1
    if j < 1 or k < 1 or n < max(j, k):
        raise RangeError(f"need j, k >= 1 and n >= max(j, k); got j={j}, k={k}, n={n}")
    slots = p.slots()[terminal]
    if len(slots) != 1:
        raise RangeError(f"hexagon {terminal} is not a terminal hexagon")
    (c,) = slots
    a, b = vertex_id(terminal, c + 3), vertex_id(terminal, c + 4)
    _, r_a, r_b = split_counts(p, a, b)
    # t's side receives L_k, s's side L_j
    if r_a <= r_b:
        slot_k, slot_j, r_s, r_t = (c + 4) % 6, (c + 2) % 6, r_a, r_b
    else:
        slot_k, slot_j, r_s, r_t = (c + 2) % 6, (c + 4) % 6, r_b, r_a
    p1 = _attach_linear(_attach_linear(p, terminal, slot_k, k), terminal, slot_j, j)
    p2 = _attach_linear(p, terminal, (c + 3) % 6, j + k)
    mo1, mo2 = mostar_cut(p1), mostar_cut(p2)
    return LemmaCheck("3.3", mo2 < mo1, {
        "n": n, "j": j, "k": k, "r_s": r_s, "r_t": r_t, "mo_p1": mo1, "mo_p2": mo2,
        "trees": [p1.to_dict(), p2.to_dict()],
    })


def check_lemma_4_1(h: int) -> LemmaCheck:
    if h < 4:
        raise RangeError(f"need h >= 4, got {h}")
    values = [mostar_cut(cl(j, h - j - 1)) for j in range(1, (h - 1) // 2 + 1)]
    ok = all(x < y for x, y in zip(values, values[1:]))
    return LemmaCheck("4.1", ok, {"h": h, "values": values})


def _triples(h: int):
    for j in range(1, h):
        for k in range(j, h):
            n = h - 1 - j - k
            if n >= k:
                yield j, k, n


def check_lemma_4_3(h: int) -> LemmaCheck:
    if h < 4:
        raise RangeError(f"need h >= 4, got {h}")
    ref = mostar_cut(cl(1, h - 2))
    rows, ok = [], True
    for j, k, n in _triples(h):
        mo = mostar_cut(pl(j, k, n))
        good = mo > ref if n >= 2 else mo < ref
        ok &= good
        rows.append({"jkn": [j, k, n], "mo": mo, "ok": good})
    return LemmaCheck("4.3", ok, {"h": h, "reference": ref, "rows": rows})


def check_lemma_5_2(h: int) -> LemmaCheck:
    """Sign of Mo(P_L(j,k,n)) - Mo(C_L(2,h-3)) over every admissible triple."""
    if h < 5:
        raise RangeError(f"need h >= 5, got {h}")
    ref = mostar_cut(cl(2, h - 3))
    below = {(1, 1, h - 3), (2, 2, 2)}
    rows, ok = [], True
    for j, k, n in _triples(h):
        mo = mostar_cut(pl(j, k, n))
        if (j, k, n) in below:
            expected = -1
        elif (j, k, n) == (1, 2, 2):
            expected = 0
        else:
            expected = 1
        sign = (mo > ref) - (mo < ref)
        ok &= sign == expected
        rows.append({"jkn": [j, k, n], "mo": mo, "expected_sign": expected, "sign": sign})
    return LemmaCheck("5.2", ok, {"h": h, "reference": ref, "rows": rows})


# ---------------------------------------------------------------------------
# seeded random trials
# ---------------------------------------------------------------------------

def _planar_result(res: LemmaCheck) -> bool:
    return not any(has_overlap(PhenyleneTree.from_dict(d)) for d in res.values["trees"])


def _catalog(h: int, chains_only: bool = False) -> ClassCatalog:
    return enumerate_classes(h, chains_only=chains_only, planar_only=True)


def random_lemma_3_1(rng: random.Random, max_h: int) -> LemmaCheck:
    while True:
        n = rng.randint(1, max_h - 2)
        k = rng.randint(2, min(n + 1, max_h - n))
        p = rng.choice(_catalog(n).entries).tree
        spots = [(hx, s) for hx in range(p.h) for s in p.free_slots(hx)]
        if not spots:
            continue
        hx, s = rng.choice(spots)
        res = check_lemma_3_1(p, hx, s, k)
        if _planar_result(res):
            return res


def random_corollary_3_2(rng: random.Random, max_h: int) -> LemmaCheck:
    while True:
        n = rng.randint(3, max_h - 1)
        k = rng.randint(1, max_h - n)
        p = rng.choice(_catalog(n).entries).tree
        turns = [i for i, lab in enumerate(classify_hexagons(p).labels) if lab == HexClass.TURN]
        if not turns:
            continue
        hx = rng.choice(turns)
        chain = rng.choice(_catalog(k, chains_only=True).entries).tree
        if rng.random() < 0.5:
            chain = mirror(chain)
        labels = classify_hexagons(chain).labels
        ends = [i for i, lab in enumerate(labels) if lab in (HexClass.TERMINAL, HexClass.ISOLATED)]
        ch = rng.choice(ends)
        cs = rng.choice(chain.free_slots(ch))
        res = check_corollary_3_2(p, hx, chain, ch, cs)
        if _planar_result(res):
            return res


def random_lemma_3_3(rng: random.Random, max_h: int) -> LemmaCheck:
    while True:
        j = rng.randint(1, (max_h - 2) // 2)
        k = rng.randint(1, (max_h - 2) // 2)
        n = rng.randint(max(j, k), max_h - 1 - j - k) if max(j, k) <= max_h - 1 - j - k else None
        if n is None:
            continue
        p = rng.choice(_catalog(n + 1).entries).tree
        terminals = [i for i, lab in enumerate(classify_hexagons(p).labels) if lab == HexClass.TERMINAL]
        if not terminals:
            continue
        res = check_lemma_3_3(p, rng.choice(terminals), j, k)
        if _planar_result(res):
            return res


RANDOM_CHECKS = {
    "3.1": random_lemma_3_1,
    "3.2": random_corollary_3_2,
    "3.3": random_lemma_3_3,
}


@dataclass
class TrialSummary:
    lemma: str
    trials: int
    seed: int
    max_h: int
    violations: list[dict[str, Any]]
    equality_cases: int = 0

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict[str, Any]:
        return {"lemma": self.lemma, "trials": self.trials, "seed": self.seed, "max_h": self.max_h,
                "violations": self.violations, "equality_cases": self.equality_cases,
                "passed": self.passed}


def run_trials(lemma: str, trials: int, seed: int, max_h: int = 8) -> TrialSummary:
    if lemma not in RANDOM_CHECKS:
        raise RangeError(f"no random check for lemma {lemma!r}")
    rng = random.Random(f"{lemma}:{seed}")
    violations = []
    equal = 0
    for _ in range(trials):
        res = RANDOM_CHECKS[lemma](rng, max_h)
        if not res.passed:
            violations.append(res.to_dict())
        if lemma == "3.1" and res.values["equality_expected"]:
            equal += 1
    return TrialSummary(lemma, trials, seed, max_h, violations, equal)
