import itertools

import pytest

from graphvc.exceptions import BudgetExceededError, CapExceededError
from graphvc.graph import greedy_maximal_matching
from graphvc.oracle import (
    brute_max_matching,
    brute_vcdim,
    enumerate_shattered,
    is_shattered,
    max_shattered_sets,
)

from conftest import complete, cycle, edgeless, path, random_family, star


def test_is_shattered_examples():
    assert is_shattered(star(3), [])
    assert is_shattered(star(3), [1, 2])
    assert not any(is_shattered(complete(3), [v]) for v in range(3))
    # the center has no vertex outside its closed neighborhood
    assert not is_shattered(star(3), [0])


@pytest.mark.parametrize("g, d", [
    (path(3), 1), (star(3), 2), (complete(5), 0), (complete(1), 0),
    (edgeless(2), 1), (edgeless(5), 1), (cycle(4), 1),
])
def test_brute_vcdim_fixtures(g, d):
    assert brute_vcdim(g) == d


def test_enumerate_examples():
    # hand count on K_{1,3}: leaves {1},{2},{3} and pairs {1,2},{1,3},{2,3}
    count, sets = enumerate_shattered(star(3), 4, collect=True)
    assert sets == [(1,), (1, 2), (1, 3), (2,), (2, 3), (3,)]
    assert count == 6
    assert enumerate_shattered(complete(3)) == 0
    assert enumerate_shattered(edgeless(3)) == 3


def test_enumeration_is_downward_closed_and_consistent():
    for g in random_family(120):
        count, sets = enumerate_shattered(g, collect=True)
        family = set(sets)
        for s in sets:
            for r in range(1, len(s)):
                assert all(sub in family for sub in itertools.combinations(s, r))
        assert max((len(s) for s in sets), default=0) == brute_vcdim(g)
        top = [s for s in sets if len(s) == brute_vcdim(g)]
        if brute_vcdim(g):
            assert top == max_shattered_sets(g)


def test_is_shattered_agrees_with_enumeration():
    for g in random_family(36, max_n=6):
        _, sets = enumerate_shattered(g, collect=True)
        family = set(sets)
        for r in range(1, g.n + 1):
            for c in itertools.combinations(range(g.n), r):
                assert is_shattered(g, c) == (c in family)


def test_enumerate_budget():
    with pytest.raises(BudgetExceededError) as err:
        enumerate_shattered(edgeless(12), budget=5)
    assert err.value.partial == 5


@pytest.mark.parametrize("g, nu", [(star(3), 1), (path(4), 2), (cycle(6), 3), (edgeless(4), 0)])
def test_matching_number(g, nu):
    assert brute_max_matching(g) == nu


def test_matching_bounds_vcdim():
    for g in random_family(180):
        d = brute_vcdim(g)
        nu = brute_max_matching(g)
        assert len(greedy_maximal_matching(g)) <= nu
        if g.edge_count:
            assert d <= nu + 1
            assert d <= 2 * len(greedy_maximal_matching(g))


def test_caps_refuse():
    big = path(21)
    with pytest.raises(CapExceededError):
        brute_vcdim(big)
    with pytest.raises(CapExceededError):
        enumerate_shattered(big)
    with pytest.raises(CapExceededError):
        is_shattered(path(70), range(63))
