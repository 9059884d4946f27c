"""Functional digraphs of a given size, one per isomorphism class.

Two independent generators are provided. :func:`brute_force_digraphs` walks
all ``n**n`` endofunctions and deduplicates by canonical form; it is the
oracle. :func:`constructive_digraphs` assembles components from rooted
trees placed around cycles and is the one used everywhere else.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple, Union

from . import kernels
from .core import FunctionalDigraph, canonical_digraph, canonical_form, components
from .errors import SizeLimitError

CONSTRUCTIVE_LIMIT = 9
BRUTE_FORCE_LIMIT = 7


@dataclass(frozen=True)
class EnumFilter:
    """``cycle_len`` restricts every component to F_cycle_len."""

    size: int
    connected_only: bool = False
    cycle_len: Optional[int] = None

    def __post_init__(self) -> None:
        if self.size < 0:
            raise ValueError("size must be non-negative")
        if self.cycle_len is not None and self.cycle_len < 1:
            raise ValueError("cycle_len must be at least 1")

    def accepts(self, X: FunctionalDigraph) -> bool:
        comps = components(X)
        if self.connected_only and len(comps) != 1:
            return False
        if self.cycle_len is not None and any(c.cycle_len != self.cycle_len for c in comps):
            return False
        return True


# ---------------------------------------------------------------- rooted trees

# _TREES[k] lists the rooted trees with k vertices; a tree is the
# non-increasing tuple of the global ids of its root's subtrees.
_TREES: List[List[Tuple[int, ...]]] = [[], [()]]
_TREE_SIZE: List[int] = [1]
_TREE_ID_START: List[int] = [0, 0, 1]


def _multisets(total: int, max_id: int, ids_by_size) -> Iterator[Tuple[int, ...]]:
    """Non-increasing id tuples with sizes summing to ``total``, ids <= max_id."""
    if total == 0:
        yield ()
        return
    for tid in range(max_id, -1, -1):
        s = ids_by_size(tid)
        if s > total:
            continue
        for rest in _multisets(total - s, tid, ids_by_size):
            yield (tid,) + rest


def _ensure_trees(k: int) -> None:
    while len(_TREES) <= k:
        size = len(_TREES)
        last_id = len(_TREE_SIZE) - 1
        trees = list(_multisets(size - 1, last_id, _TREE_SIZE.__getitem__))
        trees.reverse()
        _TREES.append(trees)
        _TREE_SIZE.extend([size] * len(trees))
        _TREE_ID_START.append(_TREE_ID_START[-1] + len(trees))


def rooted_trees(k: int) -> List[int]:
    """Global ids of the rooted trees on ``k`` vertices."""
    _ensure_trees(k)
    return list(range(_TREE_ID_START[k], _TREE_ID_START[k + 1])) if k >= 1 else []


def _tree_children(tid: int) -> Tuple[int, ...]:
    size = _TREE_SIZE[tid]
    return _TREES[size][tid - _TREE_ID_START[size]]


def _emit_tree(tid: int, parent: int, succ: List[int]) -> None:
    stack = [(tid, parent)]
    while stack:
        t, p = stack.pop()
        v = len(succ)
        succ.append(p if p >= 0 else v)
        for c in _tree_children(t):
            stack.append((c, v))


def _component_succ(tree_ids: Sequence[int]) -> List[int]:
    """Cycle through the tree roots in order, each tree hanging off its root."""
    succ: List[int] = []
    roots = []
    for tid in tree_ids:
        roots.append(len(succ))
        _emit_tree(tid, -1, succ)
    for j, r in enumerate(roots):
        succ[r] = roots[(j + 1) % len(roots)]
    return succ


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for first in range(1, total - parts + 2):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _connected(m: int, ell: int) -> Tuple[Tuple[int, ...], ...]:
    """Successor lists of the connected classes with ``m`` vertices in F_ell."""
    _ensure_trees(m)
    out = []
    for sizes in _compositions(m, ell):
        for ids in itertools.product(*(rooted_trees(s) for s in sizes)):
            if min(ids[k:] + ids[:k] for k in range(ell)) != ids:
                continue
            out.append(tuple(_component_succ(ids)))
    return tuple(out)


@lru_cache(maxsize=None)
def _connected_all(max_size: int, cycle_len: Optional[int]) -> Tuple[Tuple[int, Tuple[int, ...]], ...]:
    out = []
    for m in range(1, max_size + 1):
        lens = [cycle_len] if cycle_len is not None else range(1, m + 1)
        for ell in lens:
            if ell <= m:
                out.extend((m, s) for s in _connected(m, ell))
    return tuple(out)


def constructive_digraphs(f: EnumFilter) -> List[FunctionalDigraph]:
    """Unsorted representatives built from components, one per class."""
    n = f.size
    if f.connected_only:
        if n == 0:
            return []
        lens = [f.cycle_len] if f.cycle_len is not None else range(1, n + 1)
        return [FunctionalDigraph(s) for ell in lens if ell <= n for s in _connected(n, ell)]
    conn = _connected_all(n, f.cycle_len)
    sizes = [m for m, _ in conn]
    out = []
    for combo in _multisets(n, len(conn) - 1, sizes.__getitem__):
        succ: List[int] = []
        for cid in combo:
            base = len(succ)
            succ.extend(base + s for s in conn[cid][1])
        out.append(FunctionalDigraph(tuple(succ)))
    return out


# ---------------------------------------------------------------- brute force


def _brute_chunk(args: Tuple[int, int]) -> Dict[Tuple[int, ...], Tuple[int, ...]]:
    n, first = args
    found: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
    label = kernels.canonical_labeling
    for rest in itertools.product(range(n), repeat=n - 1):
        f = (first,) + rest
        code = label(f)[0]
        if code not in found:
            found[code] = f
    return found


def brute_force_digraphs(
    n: int, limit: int = BRUTE_FORCE_LIMIT, workers: int = 1
) -> List[FunctionalDigraph]:
    """All ``n**n`` endofunctions deduplicated by canonical form, sorted by code.

    ``workers > 1`` splits the search by the image of vertex 0 over processes;
    the result does not depend on scheduling.
    """
    if n > limit:
        raise SizeLimitError(f"brute-force enumeration capped at n={limit}, got {n}")
    if n == 0:
        return [FunctionalDigraph(())]
    chunks = [(n, first) for first in range(n)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_brute_chunk, chunks))
    else:
        parts = [_brute_chunk(c) for c in chunks]
    merged: Dict[Tuple[int, ...], Tuple[int, ...]] = {}
    for part in parts:
        for code, f in part.items():
            merged.setdefault(code, f)
    return [canonical_digraph(FunctionalDigraph(merged[code])) for code in sorted(merged)]


# ---------------------------------------------------------------- public API


def _as_filter(f: Union[EnumFilter, int], connected_only: bool, cycle_len: Optional[int]) -> EnumFilter:
    if isinstance(f, EnumFilter):
        return f
    return EnumFilter(int(f), connected_only, cycle_len)


@lru_cache(maxsize=256)
def _all_cached(f: EnumFilter, strategy: str) -> Tuple[FunctionalDigraph, ...]:
    if strategy == "brute-force":
        reps = [X for X in brute_force_digraphs(f.size, limit=f.size) if f.accepts(X)]
    else:
        reps = [canonical_digraph(X) for X in constructive_digraphs(f)]
        if f.size == 0 and not f.connected_only:
            reps = [FunctionalDigraph(())]
    reps.sort(key=canonical_form)
    return tuple(reps)


def all_digraphs(
    f: Union[EnumFilter, int],
    connected_only: bool = False,
    cycle_len: Optional[int] = None,
    *,
    limit: Optional[int] = None,
    strategy: str = "constructive",
) -> List[FunctionalDigraph]:
    """One canonical representative per isomorphism class, in canonical-code order."""
    f = _as_filter(f, connected_only, cycle_len)
    if strategy not in ("constructive", "brute-force"):
        raise ValueError(f"unknown strategy {strategy!r}")
    if limit is None:
        limit = CONSTRUCTIVE_LIMIT if strategy == "constructive" else BRUTE_FORCE_LIMIT
    if f.size > limit:
        raise SizeLimitError(f"{strategy} enumeration capped at n={limit}, got {f.size}")
    return list(_all_cached(f, strategy))


def count_digraphs(
    n: int, connected_only: bool = False, cycle_len: Optional[int] = None, **kwargs
) -> int:
    return len(all_digraphs(n, connected_only, cycle_len, **kwargs))
