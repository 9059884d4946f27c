"""Divisibility, quotients and irreducibility by bounded exhaustive search."""
from __future__ import annotations

import enum
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Optional, Tuple

from .algebra import cycle_product, lcm, product
from .core import FunctionalDigraph, SumOfCycles, canonical_digraph, canonical_form, cyclic_part, is_isomorphic
from .enumeration import all_digraphs

DEFAULT_BOUND = 8


class Tri(str, enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class QuotientSet:
    """All ``Y`` (up to isomorphism) with ``XY = A``, when ``exhaustive`` is set."""

    divisor: FunctionalDigraph
    dividend: FunctionalDigraph
    quotients: Tuple[FunctionalDigraph, ...]
    exhaustive: bool
    candidates_checked: int = 0


# ---------------------------------------------------------------- sums of cycles


def _contribution(x_lengths: Tuple[int, ...], y: int) -> Counter:
    out: Counter = Counter()
    for x in x_lengths:
        for c in cycle_product(x, y).lengths:
            out[c] += 1
    return out


def cyclic_quotients(SX: SumOfCycles, SA: SumOfCycles) -> List[SumOfCycles]:
    """Every sum of cycles ``Z`` with ``SX * Z = SA``.

    Exact. Each candidate part ``y`` must satisfy ``lcm(x, y) in SA`` for all
    ``x in SX`` and the partial product must stay inside ``SA``.
    """
    if not SX.lengths:
        return [SumOfCycles()] if not SA.lengths else []
    if SA.size % SX.size:
        return []
    target_size = SA.size // SX.size
    a_set = set(SA.lengths)
    xs = SX.lengths
    allowed = sorted(
        (y for y in range(1, target_size + 1) if all(lcm(x, y) in a_set for x in xs)),
        reverse=True,
    )
    contrib = {y: _contribution(xs, y) for y in allowed}
    found: List[SumOfCycles] = []

    def rec(start: int, remaining_size: int, remaining: Counter, parts: List[int]) -> None:
        if remaining_size == 0:
            if not +remaining:
                found.append(SumOfCycles(tuple(parts)))
            return
        for k in range(start, len(allowed)):
            y = allowed[k]
            if y > remaining_size:
                continue
            c = contrib[y]
            if any(remaining[key] < cnt for key, cnt in c.items()):
                continue
            parts.append(y)
            rec(k, remaining_size - y, remaining - c, parts)
            parts.pop()

    rec(0, target_size, Counter(SA.lengths), [])
    found.sort()
    return found


def cyclic_divides(SX: SumOfCycles, SA: SumOfCycles) -> bool:
    return bool(cyclic_quotients(SX, SA))


# ---------------------------------------------------------------- digraphs


def _is_identity(X: FunctionalDigraph) -> bool:
    return X.succ == (0,)


def quotients(
    X: FunctionalDigraph, A: FunctionalDigraph, bound: int = DEFAULT_BOUND, prune: bool = True
) -> QuotientSet:
    """Search all ``Y`` of size ``|A|/|X|`` with ``XY = A``.

    With ``prune`` the cyclic part of ``Y`` must be one of the sums of cycles
    ``Z`` with ``[X] Z = [A]``; every such condition is necessary, so pruning
    never drops a quotient.  Sizes above ``bound`` give ``exhaustive=False``
    unless a prune already settles the question.
    """
    if X.n < 1:
        raise ValueError("divisor must be non-empty")
    if A.n % X.n:
        return QuotientSet(X, A, (), True)
    q = A.n // X.n
    if _is_identity(X):
        return QuotientSet(X, A, (canonical_digraph(A),), True, 1)
    allowed = None
    if prune:
        allowed = {z.lengths for z in cyclic_quotients(cyclic_part(X), cyclic_part(A))}
        if not allowed:
            return QuotientSet(X, A, (), True)
    if q > bound:
        return QuotientSet(X, A, (), False)
    target = canonical_form(A)
    found = []
    checked = 0
    for Y in all_digraphs(q, limit=max(bound, q)):
        if allowed is not None and cyclic_part(Y).lengths not in allowed:
            continue
        checked += 1
        if canonical_form(product(X, Y)) == target:
            found.append(Y)
    return QuotientSet(X, A, tuple(found), True, checked)


def divides(X: FunctionalDigraph, A: FunctionalDigraph, bound: int = DEFAULT_BOUND) -> Tri:
    qs = quotients(X, A, bound)
    if qs.quotients:
        return Tri.YES
    return Tri.NO if qs.exhaustive else Tri.UNKNOWN


def _divisors(n: int) -> Iterator[int]:
    for s in range(2, n):
        if s * s > n:
            break
        if n % s == 0:
            yield s


def factorization(
    X: FunctionalDigraph, bound: int = DEFAULT_BOUND
) -> Tuple[Tri, Optional[Tuple[FunctionalDigraph, FunctionalDigraph]]]:
    """Look for ``X = FG`` with ``F, G != C_1``.

    Returns ``(NO, (F, G))`` when one is found, ``(YES, None)`` when ``X`` is
    irreducible and ``(UNKNOWN, None)`` when the bound was hit. The smaller
    factor has at most ``sqrt|X|`` vertices, so only those sizes are enumerated.
    """
    if X.n < 1:
        raise ValueError("X must be non-empty")
    unknown = False
    for s in _divisors(X.n):
        if s > bound:
            unknown = True
            continue
        for F in all_digraphs(s, limit=max(bound, s)):
            qs = quotients(F, X, bound)
            if qs.quotients:
                return Tri.NO, (F, qs.quotients[0])
            if not qs.exhaustive:
                unknown = True
    return (Tri.UNKNOWN if unknown else Tri.YES), None


def is_irreducible(X: FunctionalDigraph, bound: int = DEFAULT_BOUND) -> Tri:
    return factorization(X, bound)[0]


@lru_cache(maxsize=4096)
def _exhaustive_cached(X: FunctionalDigraph, A: FunctionalDigraph, bound: int) -> QuotientSet:
    return quotients(X, A, bound, prune=False)


def exhaustive_quotients(X: FunctionalDigraph, A: FunctionalDigraph, bound: int = DEFAULT_BOUND) -> QuotientSet:
    """Unpruned search over every candidate of the quotient size."""
    return _exhaustive_cached(X, A, bound)


def naive_divides(X: FunctionalDigraph, A: FunctionalDigraph) -> bool:
    """Scan every class of size ``|A|/|X|``; no prunes, no shortcuts."""
    if A.n % X.n:
        return False
    q = A.n // X.n
    return any(is_isomorphic(product(X, Y), A) for Y in all_digraphs(q, limit=q))
