import pytest

from phenylene.enumeration import enumerate_classes
from phenylene.errors import RangeError, ResourceBoundError
from phenylene.families import cl, linear, pl
from phenylene.verify import (check_corollary_3_2, check_lemma_3_1, check_lemma_3_3, check_lemma_4_1,
                              check_lemma_4_3, check_lemma_5_2, rank, run_trials, turn_attachment_slot,
                              verify, verify_filter_stability, verify_min, verify_second, verify_third)


def test_rank_h4():
    report = rank(4)
    assert [g.value for g in report.groups] == [240, 288, 312, 360]
    assert [len(g.members) for g in report.groups] == [1, 1, 2, 1]
    assert report.direct_checked == 5


def test_rank_h6_head():
    groups = rank(6).groups
    assert [g.value for g in groups[:4]] == [576, 696, 720, 768]
    assert sorted(groups[1].names()) == ["cl:1,2,1", "cl:1,4"]
    assert groups[2].names() == ["pl:1,1,3"]
    assert "pl:1,2,2" in groups[3].names() and "cl:2,3" in groups[3].names()
    assert len(groups[3].members) == 8


def test_groups_increase_and_cover_the_catalog():
    for h in range(1, 8):
        report = rank(h)
        values = [g.value for g in report.groups]
        assert values == sorted(set(values))
        assert sum(len(g.members) for g in report.groups) == len(enumerate_classes(h))


def test_extremal_verdicts():
    assert verify_min(4).status == "pass"
    v = verify_second(4)
    assert (v.status, v.observed_value) == ("pass", 288)
    assert verify_second(5).observed_value == 480
    assert verify_second(7).observed_value == 936
    assert (verify_third(5).status, verify_third(5).observed_value) == ("pass", 504)
    assert verify_third(6).observed_value == 720
    assert verify_third(7).observed_value == 960


def test_small_h_makes_no_claim():
    assert verify_second(3).status == "no-claim"
    third = verify_third(4)
    assert third.status == "no-claim" and third.observed_value == 312
    assert third.passed


def test_verdict_records_expected_and_observed():
    d = verify("4.4", 6).to_dict()
    assert d["expected_value"] == d["observed_value"] == 696
    assert d["expected_members"] == d["observed_members"] == ["cl:1,2,1", "cl:1,4"]


def test_verify_rejects_unknown_theorem_and_large_h():
    with pytest.raises(RangeError):
        verify("9.9", 5)
    with pytest.raises(ResourceBoundError):
        verify("3.5", 12)


def test_filter_stability():
    for th in ("3.5", "4.4", "5.4"):
        a, b, same = verify_filter_stability(th, 8)
        assert same and a.status == b.status == "pass"


def test_para_attachment_ties_when_one_side_is_empty():
    # terminal hexagon of L_3, edge beside the junction: r_s = 0, r_t = 2
    res = check_lemma_3_1(linear(3), 0, 2, 2)
    v = res.values
    assert (v["r_s"], v["r_t"]) == (0, 2)
    assert res.passed and v["equality_expected"] and v["mo_p1"] == v["mo_p2"] < v["mo_p3"]


def test_para_attachment_strict_when_both_sides_are_occupied():
    t = cl(1, 1)
    res = check_lemma_3_1(t, 1, turn_attachment_slot(t, 1), 2)
    v = res.values
    assert min(v["r_s"], v["r_t"]) > 0
    assert res.passed and v["mo_p2"] < v["mo_p1"]


def test_attachment_preconditions():
    with pytest.raises(RangeError):
        check_lemma_3_1(linear(3), 0, 2, 1)
    with pytest.raises(RangeError):
        check_lemma_3_1(linear(3), 1, 1, 2)


def test_linear_branch_at_a_turn_is_no_worse():
    base = cl(1, 1)
    same = check_corollary_3_2(base, 1, linear(3), 0, 3)
    assert same.passed and same.values["mo_linear_branch"] == same.values["mo_chain_branch"]
    strict = check_corollary_3_2(base, 1, linear(3), 0, 2)
    assert strict.values["mo_linear_branch"] < strict.values["mo_chain_branch"]
    with pytest.raises(RangeError):
        check_corollary_3_2(linear(3), 1, linear(2), 0, 3)


def test_merged_branch_beats_two_branches():
    assert check_lemma_3_3(linear(3), 0, 1, 1).passed
    assert check_lemma_3_3(linear(3), 0, 1, 2).passed
    with pytest.raises(RangeError):
        check_lemma_3_3(linear(3), 0, 0, 1)
    with pytest.raises(RangeError):
        check_lemma_3_3(linear(3), 1, 1, 1)


def test_two_segment_chains_increase():
    assert check_lemma_4_1(5).values["values"] == [480, 528]
    assert check_lemma_4_1(4).passed
    assert check_lemma_4_1(8).passed and len(check_lemma_4_1(8).values["values"]) == 3


def test_branched_against_second_minimum():
    for h in range(4, 11):
        assert check_lemma_4_3(h).passed
    assert check_lemma_4_3(4).values["reference"] == 312


def test_branched_against_third_chain():
    rows = {tuple(r["jkn"]): r for r in check_lemma_5_2(6).values["rows"]}
    assert rows[(1, 2, 2)]["mo"] == 768 == check_lemma_5_2(6).values["reference"]
    h7 = check_lemma_5_2(7)
    assert h7.passed and h7.values["reference"] == 1032
    assert {tuple(r["jkn"]): r["mo"] for r in h7.values["rows"]}[(1, 1, 4)] == 960
    assert check_lemma_5_2(8).passed


def test_trials_are_seeded():
    a = run_trials("3.1", 20, seed=4, max_h=7).to_dict()
    b = run_trials("3.1", 20, seed=4, max_h=7).to_dict()
    assert a == b and a["passed"]
    with pytest.raises(RangeError):
        run_trials("4.1", 5, seed=0)
