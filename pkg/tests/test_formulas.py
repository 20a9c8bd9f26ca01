import pytest

from phenylene.cuts import mostar_cut
from phenylene.errors import RangeError
from phenylene.families import cl, linear, pl
from phenylene.formulas import FORMULAS, mo_linear, mo_pl, mo_second, mo_third_chain


def test_linear_values():
    assert [mo_linear(h).value for h in range(1, 7)] == [0, 48, 120, 240, 384, 576]
    for h in range(1, 13):
        assert mo_linear(h).value == mostar_cut(linear(h))


def test_pl_branches():
    assert mo_pl(1, 1, 1) == mo_pl(1, 1, 1)
    assert mo_pl(1, 1, 1).branch == "case-1"
    assert mo_pl(1, 1, 4).branch == "case-2-odd"
    assert mo_pl(1, 1, 5).branch == "case-2-even"
    assert mo_pl(1, 1, 1).value == 288


@pytest.mark.parametrize("jkn", [(1, 1, 2), (1, 2, 2), (2, 2, 2), (1, 1, 3), (1, 2, 3), (1, 1, 5), (2, 2, 4)])
def test_pl_matches_computation(jkn):
    assert mo_pl(*jkn).value == mostar_cut(pl(*jkn))


def test_second_and_third():
    assert mo_second(5).value == 480
    assert mo_second(7).value == 936
    assert mo_third_chain(6).value == 768
    for h in range(5, 10):
        assert mo_second(h).value == mostar_cut(cl(1, h - 2))
        assert mo_third_chain(h).value == mostar_cut(cl(2, h - 3))


def test_domain_errors():
    for call in (lambda: mo_linear(0), lambda: mo_pl(2, 1, 3), lambda: mo_second(2), lambda: mo_third_chain(4)):
        with pytest.raises(RangeError):
            call()


def test_registry():
    assert set(FORMULAS) == {"linear", "pl", "second", "third"}
