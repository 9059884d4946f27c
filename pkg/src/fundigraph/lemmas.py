"""Property suites behind ``fundigraph check-lemmas``.

Every suite takes a size cap and returns a :class:`SuiteResult`; a suite
never skips silently, it either checks at least one case or fails.
"""
from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from math import gcd
from typing import Callable, Iterator, List, Optional, Tuple

from .algebra import add, cycle, lcm, product, scalar, sum_of_cycles_product
from .core import (
    FunctionalDigraph,
    SumOfCycles,
    canonical_form,
    check_iso_map,
    components,
    cyclic_part,
    height_profile,
    is_isomorphic,
)
from .division import Tri, cyclic_divides, is_irreducible, naive_divides, quotients
from .enumeration import all_digraphs
from .witness import F1Construction, branch_C, branch_D, build_witness, verify_witness


@dataclass
class SuiteResult:
    name: str
    module: str
    passed: bool
    checked: int
    detail: str = ""
    seconds: float = 0.0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        msg = f"{status}  {self.module:<8} {self.name:<28} {self.checked:>7} cases  {self.seconds:6.2f}s"
        return msg + (f"  {self.detail}" if self.detail else "")


def _digraphs_up_to(n: int, **kw) -> List[FunctionalDigraph]:
    return [X for k in range(1, n + 1) for X in all_digraphs(k, **kw)]


def _cycle_multisets(max_len: int, max_parts: int) -> Iterator[SumOfCycles]:
    for k in range(1, max_parts + 1):
        for combo in itertools.combinations_with_replacement(range(1, max_len + 1), k):
            yield SumOfCycles(combo)


# ---------------------------------------------------------------- algebra


def cycle_products(cap: int) -> Tuple[int, str]:
    m = min(12, max(cap, 1) * 3)
    n = 0
    for a in range(1, m + 1):
        for b in range(1, m + 1):
            lhs = canonical_form(product(cycle(a), cycle(b)))
            rhs = canonical_form(scalar(gcd(a, b), cycle(lcm(a, b))))
            if lhs != rhs:
                return -1, f"C{a}*C{b}"
            n += 1
    return n, ""


def semiring_laws(cap: int) -> Tuple[int, str]:
    pool = _digraphs_up_to(min(3, cap))
    n = 0
    for A, B in itertools.product(pool, repeat=2):
        if canonical_form(product(A, B)) != canonical_form(product(B, A)):
            return -1, f"commutativity {A} {B}"
        n += 1
    for A, B, C in itertools.product(pool, repeat=3):
        if canonical_form(product(product(A, B), C)) != canonical_form(product(A, product(B, C))):
            return -1, f"associativity {A} {B} {C}"
        if canonical_form(product(A, add(B, C))) != canonical_form(add(product(A, B), product(A, C))):
            return -1, f"distributivity {A} {B} {C}"
        n += 1
    return n, ""


def cyclic_part_product(cap: int) -> Tuple[int, str]:
    pool = _digraphs_up_to(min(4, cap))
    n = 0
    for A, B in itertools.product(pool, repeat=2):
        if cyclic_part(product(A, B)) != sum_of_cycles_product(cyclic_part(A), cyclic_part(B)):
            return -1, f"[{A}*{B}]"
        n += 1
    return n, ""


def sums_of_cycles(cap: int) -> Tuple[int, str]:
    max_len, max_parts = min(6, cap + 2), min(4, cap)
    pool = list(_cycle_multisets(max_len, max_parts))
    n = 0
    for SA, SB in itertools.product(pool, repeat=2):
        AB = cyclic_part(product(SA.to_digraph(), SB.to_digraph()))
        lens = set(AB.lengths)
        pairs = {lcm(a, b) for a in SA.lengths for b in SB.lengths}
        if lens != pairs:
            return -1, f"(a) {SA}*{SB}"
        if max(AB.lengths) > max(SA.lengths) * max(SB.lengths):
            return -1, f"(b) {SA}*{SB}"
        if len(SA.lengths) == 1 and min(AB.lengths) < SA.lengths[0]:
            return -1, f"(c) {SA}*{SB}"
        n += 1
    return n, ""


def prime_power_cycles(cap: int) -> Tuple[int, str]:
    lens = [ell for ell in (2, 3, 4, 5, 7, 8, 9) if ell <= max(2, cap * 3)]
    for ell in lens:
        if is_irreducible(cycle(ell)) != Tri.YES:
            return -1, f"C{ell}"
    return len(lens), ""


def cycle_times_connected(cap: int) -> Tuple[int, str]:
    size = min(6, cap + 2)
    n = 0
    for X in _digraphs_up_to(size, connected_only=True):
        ell = cyclic_part(X).lengths[0]
        for k in range(1, 7):
            comps = components(product(cycle(k), X))
            if len(comps) != gcd(k, ell):
                return -1, f"count C{k}*{X}"
            if any(c.cycle_len != lcm(k, ell) for c in comps):
                return -1, f"cycle length C{k}*{X}"
            if any(not is_isomorphic(c.digraph, comps[0].digraph) for c in comps):
                return -1, f"isomorphism C{k}*{X}"
            if ell % k == 0 and not is_isomorphic(product(cycle(k), X), scalar(k, X)):
                return -1, f"(b) C{k}*{X}"
            n += 1
    return n, ""


def height_law(cap: int) -> Tuple[int, str]:
    pool = _digraphs_up_to(min(5, cap + 1), connected_only=True, cycle_len=1)
    n = 0
    for X, Y in itertools.product(pool, repeat=2):
        d = height_profile(product(X, Y)).height
        if d != max(height_profile(X).height, height_profile(Y).height):
            return -1, f"{X}*{Y}"
        n += 1
    return n, ""


# ---------------------------------------------------------------- division


def cyclic_part_division(cap: int) -> Tuple[int, str]:
    pool = _digraphs_up_to(min(4, cap))
    n = 0
    for X, A in itertools.product(pool, repeat=2):
        if naive_divides(X, A):
            if not cyclic_divides(cyclic_part(X), cyclic_part(A)):
                return -1, f"{X} | {A}"
            n += 1
    return n, ""


def quotient_search(cap: int) -> Tuple[int, str]:
    pool = _digraphs_up_to(min(6, cap + 1))
    n = 0
    for X, A in itertools.product(pool, repeat=2):
        if A.n % X.n or X.n > A.n:
            continue
        pruned = quotients(X, A)
        plain = quotients(X, A, prune=False)
        if {canonical_form(Y) for Y in pruned.quotients} != {canonical_form(Y) for Y in plain.quotients}:
            return -1, f"prune {X} {A}"
        for Y in pruned.quotients:
            if not is_isomorphic(product(X, Y), A):
                return -1, f"soundness {X}*{Y} != {A}"
        n += 1
    return n, ""


# ---------------------------------------------------------------- witness


def all_witnesses(cap: int) -> Tuple[int, str]:
    n = 0
    for X in _digraphs_up_to(min(4, cap)):
        if X.n < 2:
            continue
        verify_witness(build_witness(X))
        n += 1
    return n, ""


def f1_equations(cap: int) -> Tuple[int, str]:
    n = 0
    for X in _digraphs_up_to(min(4, cap), connected_only=True, cycle_len=1):
        if X.n < 2:
            continue
        err = check_f1_equations(F1Construction(X))
        if err:
            return -1, f"{X}: {err}"
        n += 1
    return n, ""


def check_f1_equations(con: F1Construction) -> Optional[str]:
    """Pointwise check of the fixed point, stabilisation and commuting identities."""
    d, B = con.d, con.B
    Xs = con.X.succ
    beta = con.beta
    if con.b_successor(beta) != beta:
        return "beta is not fixed"
    depthX = con.profile.depth
    for j in range(con.size_B):
        b = con.decode(j)
        w = b
        for _ in range(d + 1):
            w = con.b_successor(w)
        if w != beta:
            return f"B^(d+1)({b}) != beta"
        w = b
        for _ in range(d):
            w = con.b_successor(w)
        if (w == beta) != (b[d] == con.t):
            return f"B^d({b}) = beta does not match b_(d+1) = t"
        for i in range(d + 1):
            bi = con.b_successor(b)
            pi = con.P.succ[i]
            for x in range(con.X.n):
                if i >= 1 and depthX[x] > i:
                    continue
                lhs = con.replace_component(bi, pi, Xs[x])
                rhs = con.b_successor(con.replace_component(b, i, x))
                if lhs != rhs:
                    return f"commuting identity fails at b={b}, i={i}, x={x}"
    tops = [con.decode(j) for j in range(con.size_B) if con.decode(j)[d] == con.t]
    for b, b2 in itertools.product(tops, repeat=2):
        w, w2 = b, b2
        for _ in range(d - 1):
            w, w2 = con.b_successor(w), con.b_successor(w2)
        x, x2 = b[d - 1], b2[d - 1]
        for _ in range(d - 1):
            x, x2 = Xs[x], Xs[x2]
        if (w == w2) != (x == x2):
            return f"(d-1)-step equivalence fails for {b}, {b2}"
    # successor component i depends on component i+1 only; component d+1 is constant
    for j in range(con.size_B):
        b = con.decode(j)
        nb = con.b_successor(b)
        for i in range(d + 1):
            for x in con.levels[i]:
                nb2 = con.b_successor(con.replace_component(b, i + 1, x))
                for k in range(d + 1):
                    if k != i - 1 and nb2[k] != nb[k]:
                        return f"successor component {k + 1} depends on component {i + 1}"
    if height_profile(B).height != d + 1:
        return "d(B) != d + 1"
    XY, AB = product(con.X, con.Y), product(con.A, B)
    if not check_iso_map(XY, AB, con.phi):
        return "phi is not an isomorphism"
    return None


def branch_d_identity(cap: int) -> Tuple[int, str]:
    n = 0
    for X in _digraphs_up_to(min(5, cap + 1)):
        if len(cyclic_part(X).lengths) < 2:
            continue
        A, B, Y = branch_D(X)
        if canonical_form(product(X, Y)) != canonical_form(product(A, B)):
            return -1, str(X)
        n += 1
    return n, ""


def branch_c_identity(cap: int) -> Tuple[int, str]:
    n = 0
    for X in _digraphs_up_to(min(6, cap + 2), connected_only=True):
        ell = cyclic_part(X).lengths[0]
        if not 2 <= ell <= 4:
            continue
        A, B, Y = branch_C(X)
        if canonical_form(product(X, Y)) != canonical_form(product(A, B)):
            return -1, str(X)
        n += 1
    return n, ""


SUITES: List[Tuple[str, str, Callable[[int], Tuple[int, str]]]] = [
    ("algebra", "cycle-product", cycle_products),
    ("algebra", "semiring-laws", semiring_laws),
    ("algebra", "cyclic-part-product", cyclic_part_product),
    ("algebra", "sums-of-cycles", sums_of_cycles),
    ("algebra", "prime-power-cycles", prime_power_cycles),
    ("algebra", "cycle-times-connected", cycle_times_connected),
    ("algebra", "height-law", height_law),
    ("division", "cyclic-part-division", cyclic_part_division),
    ("division", "quotient-search", quotient_search),
    ("witness", "witness-all-small", all_witnesses),
    ("witness", "f1-equations", f1_equations),
    ("witness", "branch-D-identity", branch_d_identity),
    ("witness", "branch-C-identity", branch_c_identity),
]


def run_suites(max_size: int = 4) -> List[SuiteResult]:
    out = []
    for module, name, fn in SUITES:
        t0 = time.perf_counter()
        try:
            checked, detail = fn(max_size)
            passed = checked > 0
            if checked == 0:
                detail = "no cases in range"
        except Exception as exc:  # a crash is a failure, reported with the suite
            checked, passed, detail = 0, False, f"{type(exc).__name__}: {exc}"
        out.append(SuiteResult(name, module, passed, max(checked, 0), detail, time.perf_counter() - t0))
    return out
