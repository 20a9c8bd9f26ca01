import itertools
import random

import pytest

from naive_oracle import naive_classes
from phenylene import enumeration
from phenylene.enumeration import (MAX_H_ENV, count_by_invariant, enumerate_classes, resource_bound, sample,
                                   tree_key)
from phenylene.errors import RangeError, ResourceBoundError
from phenylene.families import chain_from_turns, cl, linear, pl
from phenylene.graph import are_isomorphic, certificate
from phenylene.model import expand, mirror, renumber


def certs(trees):
    return {certificate(expand(t)) for t in trees}


def test_small_counts():
    assert [len(enumerate_classes(h)) for h in range(1, 5)] == [1, 1, 2, 5]


def test_h3_classes():
    assert certs(enumerate_classes(3).representatives) == certs([linear(3), cl(1, 1)])


def test_h4_histogram():
    hist = count_by_invariant(enumerate_classes(4))
    assert list(hist) == [240, 288, 312, 360]
    assert certs(e.tree for e in hist[240]) == certs([linear(4)])
    assert certs(e.tree for e in hist[288]) == certs([pl(1, 1, 1)])
    assert certs(e.tree for e in hist[312]) == certs([cl(1, 2), cl(1, 0, 1)])
    assert certs(e.tree for e in hist[360]) == certs([chain_from_turns("LL")])


def test_values_are_multiples_of_six():
    for h in range(1, 8):
        assert all(v % 6 == 0 for v in count_by_invariant(enumerate_classes(h)))


def test_naive_oracle_agrees_up_to_four():
    for h in range(1, 5):
        assert certs(naive_classes(h)) == certs(enumerate_classes(h).representatives)


def test_tree_key_dedupe_agrees_with_certificates():
    for h in range(1, 8):
        by_tree = enumeration._level(h, dedupe="tree")
        by_cert = enumeration._level(h, dedupe="certificate")
        assert len(by_tree) == len(by_cert)
        assert certs(by_tree) == certs(by_cert)


def test_tree_key_is_relabelling_invariant():
    t = pl(1, 2, 3)
    order = list(range(t.h))
    random.Random(2).shuffle(order)
    assert tree_key(renumber(t, order)) == tree_key(t) == tree_key(mirror(t))
    assert tree_key(cl(1, 0, 1)) != tree_key(chain_from_turns("LL"))


def test_representatives_pairwise_non_isomorphic():
    for h in range(1, 7):
        entries = enumerate_classes(h).entries
        for a, b in itertools.combinations(entries, 2):
            if a.mo == b.mo:
                assert not are_isomorphic(expand(a.tree), expand(b.tree))


def test_chain_counts_match_turn_words():
    for h in range(2, 8):
        words = ("".join(w) for w in itertools.product("SLR", repeat=h - 2))
        expected = len(certs(chain_from_turns(w) for w in words))
        assert enumerate_classes(h).counts["chains"] == expected
        assert len(enumerate_classes(h, chains_only=True)) == expected


def test_counts_monotone():
    chains = [enumerate_classes(h).counts["chains"] for h in range(1, 8)]
    assert chains == sorted(chains)
    for h in range(1, 8):
        c = enumerate_classes(h).counts
        assert c["total"] >= c["chains"]
        assert c["planar"] + c["overlapping"] == c["total"]
        assert sum(c["by_full_hexagons"].values()) == c["total"]


def test_planar_filter():
    full = enumerate_classes(8)
    planar = enumerate_classes(8, planar_only=True)
    assert len(full) - len(planar) == full.counts["overlapping"] == 7


def test_ordering_is_canonical():
    entries = enumerate_classes(6).entries
    keys = [(e.mo, e.certificate) for e in entries]
    assert keys == sorted(keys)


def test_resource_bound(monkeypatch):
    with pytest.raises(ResourceBoundError):
        enumerate_classes(10)
    assert len(enumerate_classes(4, max_h=4)) == 5
    monkeypatch.setenv(MAX_H_ENV, "3")
    assert resource_bound() == 3
    with pytest.raises(ResourceBoundError):
        enumerate_classes(4)
    monkeypatch.setenv(MAX_H_ENV, "lots")
    with pytest.raises(RangeError):
        resource_bound()


def test_bad_h():
    with pytest.raises(RangeError):
        enumerate_classes(0)


def test_sample_is_seeded():
    cat = enumerate_classes(5)
    a = [sample(cat, random.Random(9)) for _ in range(3)]
    b = [sample(cat, random.Random(9)) for _ in range(3)]
    assert a == b
