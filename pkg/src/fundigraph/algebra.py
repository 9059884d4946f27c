"""Semiring operations on functional digraphs and sums of cycles."""
from __future__ import annotations

from math import gcd
from typing import Tuple

from . import kernels
from .core import (
    EMPTY,
    Component,
    FunctionalDigraph,
    SumOfCycles,
    components,
    cyclic_part,
    is_isomorphic,
)

__all__ = [
    "SumOfCycles",
    "add",
    "product",
    "scalar",
    "cycle",
    "cycle_product",
    "sum_of_cycles_product",
    "lemma3_structure",
    "lcm",
]


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b


def add(A: FunctionalDigraph, B: FunctionalDigraph) -> FunctionalDigraph:
    """Disjoint union; vertices of ``B`` are shifted by ``|A|``."""
    k = A.n
    return FunctionalDigraph(A.succ + tuple(s + k for s in B.succ))


def product(A: FunctionalDigraph, B: FunctionalDigraph) -> FunctionalDigraph:
    """Direct product; vertex ``(a, b)`` is numbered ``a*|B| + b``."""
    return FunctionalDigraph(tuple(kernels.product_successors(A.succ, B.succ)))


def scalar(k: int, A: FunctionalDigraph) -> FunctionalDigraph:
    if k < 0:
        raise ValueError("multiplicity must be non-negative")
    n = A.n
    return FunctionalDigraph(tuple(j * n + s for j in range(k) for s in A.succ))


def cycle(ell: int) -> FunctionalDigraph:
    if ell < 1:
        raise ValueError(f"cycle length must be at least 1, got {ell}")
    return FunctionalDigraph(tuple((i + 1) % ell for i in range(ell)))


def cycle_product(a: int, b: int) -> SumOfCycles:
    """``C_a C_b = gcd(a, b) C_lcm(a, b)``."""
    if a < 1 or b < 1:
        raise ValueError("cycle lengths must be positive")
    return SumOfCycles((lcm(a, b),) * gcd(a, b))


def sum_of_cycles_product(A: SumOfCycles, B: SumOfCycles) -> SumOfCycles:
    out = []
    for a in A.lengths:
        for b in B.lengths:
            out.extend((lcm(a, b),) * gcd(a, b))
    return SumOfCycles(tuple(out))


def lemma3_structure(n: int, X: FunctionalDigraph) -> Tuple[int, FunctionalDigraph]:
    """Split ``C_n X`` for connected ``X`` in F_ell.

    Checks that the product has ``gcd(n, ell)`` pairwise isomorphic components,
    each with a cycle of length ``lcm(n, ell)``, and returns that count and the
    component containing vertex 0.
    """
    if n < 1:
        raise ValueError("n must be positive")
    cyc = cyclic_part(X).lengths
    if len(cyc) != 1:
        raise ValueError("X must be connected")
    ell = cyc[0]
    prod = product(cycle(n), X)
    comps = components(prod)
    g, m = gcd(n, ell), lcm(n, ell)
    if len(comps) != g:
        raise AssertionError(f"C_{n}X has {len(comps)} components, expected {g}")
    rep: Component = comps[0]
    for c in comps:
        if c.cycle_len != m:
            raise AssertionError(f"component with cycle length {c.cycle_len}, expected {m}")
        if not is_isomorphic(c.digraph, rep.digraph):
            raise AssertionError("components of C_nX are not pairwise isomorphic")
    return g, rep.digraph


def identity() -> FunctionalDigraph:
    """``C_1``, the multiplicative identity."""
    return cycle(1)


def zero() -> FunctionalDigraph:
    return EMPTY
