import pytest

from phenylene.cuts import class_of, cut_classes, edge_classes, mostar_cut, split_counts
from phenylene.errors import GraphInputError
from phenylene.families import cl, linear, pl
from phenylene.graph import all_distances, edge_split, mostar_direct
from phenylene.model import PhenyleneTree, expand


def test_classes_partition_the_edges():
    t = pl(1, 2, 2)
    edges = [e for c in edge_classes(t) for e in c]
    assert sorted(edges) == expand(t).sorted_edges()
    assert len(edges) == len(set(edges))


def test_single_hexagon_has_three_balanced_classes():
    classes = cut_classes(PhenyleneTree(1))
    assert [c.size for c in classes] == [2, 2, 2]
    assert mostar_cut(PhenyleneTree(1)) == 0


def test_linear_chain_long_class():
    # the class through the junction slots crosses every hexagon
    t = linear(5)
    c = class_of(t, (0, 1))
    assert c.size == 10 and (c.r_u, c.r_v) == (0, 0)


def test_per_edge_identity_on_examples():
    for t in (linear(4), cl(1, 2), cl(1, 0, 1), pl(1, 1, 2)):
        g = expand(t)
        dist = all_distances(g)
        for c in cut_classes(t):
            for e in c.edges:
                assert edge_split(g, e, distances=dist).phi == 6 * abs(c.r_u - c.r_v)


@pytest.mark.parametrize("t", [linear(2), linear(6), pl(1, 1, 1), cl(2, 3), cl(1, 0, 0, 0, 1)])
def test_cut_equals_direct(t):
    assert mostar_cut(t) == mostar_direct(expand(t))


def test_split_counts_orientation():
    t = linear(3)
    # edge (0,4)-(0,5) runs across hexagon 0 only; hexagons 1 and 2 lie on one side
    o, r_a, r_b = split_counts(t, 4, 5)
    o2, r_b2, r_a2 = split_counts(t, 5, 4)
    assert o == o2 == 2
    assert (r_a, r_b) == (r_a2, r_b2)
    assert sorted((r_a, r_b)) == [0, 2]


def test_class_of_rejects_non_edges():
    with pytest.raises(GraphInputError):
        class_of(linear(2), (0, 3))
