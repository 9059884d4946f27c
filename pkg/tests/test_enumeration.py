from __future__ import annotations

import pytest

from fundigraph.core import FunctionalDigraph, canonical_form, components, cyclic_part, is_isomorphic
from fundigraph.enumeration import (
    EnumFilter,
    all_digraphs,
    brute_force_digraphs,
    constructive_digraphs,
    count_digraphs,
    rooted_trees,
)
from fundigraph.errors import SizeLimitError

from oracles import orbit_classes

# number of functional digraphs on n vertices up to isomorphism
COUNTS = {1: 1, 2: 3, 3: 7, 4: 19, 5: 47, 6: 130, 7: 343}


def test_small_sizes():
    assert [X.succ for X in all_digraphs(1)] == [(0,)]
    two = all_digraphs(2)
    assert len(two) == 3
    for target in ((1, 0), (0, 1), (0, 0)):
        assert sum(is_isomorphic(X, FunctionalDigraph(target)) for X in two) == 1


@pytest.mark.parametrize("n", range(1, 6))
def test_brute_force_matches_orbit_oracle(n):
    assert len(brute_force_digraphs(n)) == len(orbit_classes(n)) == COUNTS[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_strategies_agree(n):
    a = [canonical_form(X) for X in all_digraphs(n)]
    b = [canonical_form(X) for X in all_digraphs(n, strategy="brute-force")]
    assert a == b and len(a) == COUNTS[n]


def test_constructive_has_no_duplicates():
    for n in range(1, 9):
        reps = constructive_digraphs(EnumFilter(n))
        assert len({canonical_form(X) for X in reps}) == len(reps)


def test_parallel_brute_force_is_deterministic():
    assert brute_force_digraphs(5, workers=2) == brute_force_digraphs(5)


def test_rooted_tree_counts():
    assert [len(rooted_trees(k)) for k in range(1, 8)] == [1, 1, 2, 4, 9, 20, 48]


@pytest.mark.parametrize("n", range(1, 7))
def test_filters(n):
    conn = all_digraphs(n, connected_only=True)
    assert all(len(components(X)) == 1 for X in conn)
    assert len(conn) == sum(1 for X in all_digraphs(n) if len(components(X)) == 1)
    for ell in range(1, n + 1):
        sel = all_digraphs(n, cycle_len=ell)
        assert all(set(cyclic_part(X).lengths) == {ell} for X in sel)
        assert len(sel) == sum(1 for X in all_digraphs(n) if set(cyclic_part(X).lengths) == {ell})
        sel_c = all_digraphs(n, connected_only=True, cycle_len=ell)
        assert len(sel_c) == sum(1 for X in conn if cyclic_part(X).lengths == (ell,))


def test_connected_counts():
    # connected functional digraphs: 1, 2, 4, 9, 20, 51
    assert [count_digraphs(n, connected_only=True) for n in range(1, 7)] == [1, 2, 4, 9, 20, 51]


def test_limits():
    with pytest.raises(SizeLimitError):
        all_digraphs(10)
    with pytest.raises(SizeLimitError):
        brute_force_digraphs(8)
    with pytest.raises(ValueError):
        all_digraphs(3, strategy="magic")
    with pytest.raises(ValueError):
        EnumFilter(3, cycle_len=0)


def test_size_zero():
    assert all_digraphs(0) == [FunctionalDigraph(())]
    assert all_digraphs(0, connected_only=True) == []


@pytest.mark.slow
def test_size_seven_cross_check():
    a = [canonical_form(X) for X in all_digraphs(7)]
    b = [canonical_form(X) for X in brute_force_digraphs(7)]
    assert a == b and len(a) == COUNTS[7]
