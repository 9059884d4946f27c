from __future__ import annotations

import itertools
from math import gcd

import pytest

from fundigraph.algebra import (
    add,
    cycle,
    cycle_product,
    identity,
    lcm,
    lemma3_structure,
    product,
    scalar,
    sum_of_cycles_product,
    zero,
)
from fundigraph.core import FunctionalDigraph, SumOfCycles, canonical_form, components, cyclic_part, is_isomorphic
from fundigraph.enumeration import all_digraphs

from oracles import naive_components, naive_cycle_lengths, naive_product, naive_sum, perm_isomorphic


def small_pool(n):
    return [X for k in range(1, n + 1) for X in all_digraphs(k)]


def test_constructors():
    assert cycle(1).succ == (0,)
    assert cycle(2).succ == (1, 0)
    assert cyclic_part(cycle(5)) == SumOfCycles.of(5)
    assert identity() == cycle(1)
    assert zero().n == 0
    with pytest.raises(ValueError):
        cycle(0)


def test_scalar():
    assert scalar(0, cycle(3)).n == 0
    assert cyclic_part(scalar(3, cycle(2))) == SumOfCycles.of(2, 2, 2)
    with pytest.raises(ValueError):
        scalar(-1, cycle(2))


def test_sum_example():
    assert cyclic_part(add(cycle(1), cycle(2))) == SumOfCycles.of(1, 2)
    assert add(zero(), cycle(2)) == cycle(2)


def test_product_matches_naive_labelling():
    for A, B in itertools.product(small_pool(3), repeat=2):
        succ, _ = naive_product(A.succ, B.succ)
        assert product(A, B).succ == succ
        assert add(A, B).succ == naive_sum(A.succ, B.succ)


def test_product_vertex_numbering():
    A, B = cycle(2), FunctionalDigraph((0, 0, 1))
    P = product(A, B)
    for a in range(A.n):
        for b in range(B.n):
            assert P.succ[a * B.n + b] == A.succ[a] * B.n + B.succ[b]


@pytest.mark.parametrize(
    "a,b,expected",
    [(2, 2, (2, 2)), (1, 5, (5,)), (4, 6, (12, 12)), (3, 5, (15,)), (4, 4, (4, 4, 4, 4))],
)
def test_cycle_product(a, b, expected):
    assert cycle_product(a, b).lengths == expected
    assert is_isomorphic(product(cycle(a), cycle(b)), SumOfCycles(expected).to_digraph())


def test_cycle_product_against_oracle():
    for a in range(1, 13):
        for b in range(1, 13):
            succ, _ = naive_product(cycle(a).succ, cycle(b).succ)
            # a sum of cycles is determined by its cycle lengths
            assert naive_cycle_lengths(succ) == [lcm(a, b)] * gcd(a, b)
            assert len(naive_components(succ)) == gcd(a, b)
            if a * b <= 6:
                assert perm_isomorphic(succ, scalar(gcd(a, b), cycle(lcm(a, b))).succ)


def test_sum_of_cycles_product_examples():
    assert sum_of_cycles_product(SumOfCycles.of(2), SumOfCycles.of(2, 1, 1)) == SumOfCycles.of(2, 2, 2, 2)
    for ell in range(1, 8):
        assert sum_of_cycles_product(SumOfCycles.of(ell), SumOfCycles.of(1)) == SumOfCycles.of(ell)
    assert sum_of_cycles_product(SumOfCycles.of(4), SumOfCycles.of(4)) == SumOfCycles.of(4, 4, 4, 4)
    # brute-force cross-check of the multiset arithmetic on explicit digraphs
    for SA in (SumOfCycles.of(2, 3), SumOfCycles.of(1, 4), SumOfCycles.of(6)):
        for SB in (SumOfCycles.of(2), SumOfCycles.of(3, 3), SumOfCycles.of(1, 2)):
            assert cyclic_part(product(SA.to_digraph(), SB.to_digraph())) == SA * SB


def test_semiring_identities():
    for A in small_pool(3):
        assert product(A, identity()) == A
        assert canonical_form(product(identity(), A)) == canonical_form(A)
        assert add(A, zero()) == A
        assert product(A, zero()).n == 0


class TestCycleTimesConnected:
    def test_fixed_point_times_c2(self):
        g, comp = lemma3_structure(2, FunctionalDigraph((0, 0)))
        assert g == 1 and cyclic_part(comp) == SumOfCycles.of(2)

    def test_divisor_case(self):
        X = FunctionalDigraph((1, 2, 3, 0, 0))  # C4 with one tail vertex
        assert is_isomorphic(product(cycle(2), X), scalar(2, X))
        g, comp = lemma3_structure(2, X)
        assert g == 2 and is_isomorphic(comp, X)

    def test_f2_size3(self):
        X = FunctionalDigraph((1, 0, 1))
        g, comp = lemma3_structure(4, X)
        assert g == 2 and comp.n == 6 and cyclic_part(comp) == SumOfCycles.of(4)
        assert all(c.digraph.n == 6 for c in components(product(cycle(4), X)))

    def test_rejects_disconnected(self):
        with pytest.raises(ValueError):
            lemma3_structure(2, add(cycle(1), cycle(1)))
        with pytest.raises(ValueError):
            lemma3_structure(0, cycle(1))
