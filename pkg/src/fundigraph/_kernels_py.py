"""Pure-Python kernels. Must return exactly what ``_kernels.pyx`` returns."""
from __future__ import annotations

from typing import List, Sequence, Tuple

BACKEND = "python"

OPEN, CLOSE, SEP = 1, 0, 2


def least_rotation(seq: Sequence[int]) -> int:
    """Booth's algorithm: start index of the lexicographically least rotation."""
    n = len(seq)
    if n == 0:
        return 0
    s = list(seq) + list(seq)
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return k % n


def canonical_labeling(succ: Sequence[int]) -> Tuple[Tuple[int, ...], List[int]]:
    """Return ``(code, order)`` where ``order[new] = old`` is a canonical relabeling.

    Trees hanging off cycles get AHU ranks level by level (height first, then the
    sorted child ranks), so the ranks follow an order that depends only on the
    isomorphism class of each subtree.  Each component is then written as the
    bracket encodings of its trees, starting at the least rotation of the cycle.
    """
    n = len(succ)
    indeg = [0] * n
    for w in succ:
        indeg[w] += 1
    peel = [v for v in range(n) if indeg[v] == 0]
    height = [0] * n
    i = 0
    while i < len(peel):
        v = peel[i]
        i += 1
        w = succ[v]
        if height[v] + 1 > height[w]:
            height[w] = height[v] + 1
        indeg[w] -= 1
        if indeg[w] == 0:
            peel.append(w)

    on_cycle = [True] * n
    children: List[List[int]] = [[] for _ in range(n)]
    for v in peel:
        on_cycle[v] = False
        children[succ[v]].append(v)

    max_h = max(height) if n else -1
    buckets: List[List[int]] = [[] for _ in range(max_h + 1)]
    for v in range(n):
        buckets[height[v]].append(v)

    rank = [0] * n
    next_rank = 0
    for bucket in buckets:
        keyed = []
        for v in bucket:
            ch = children[v]
            ch.sort(key=rank.__getitem__)
            keyed.append((tuple(rank[c] for c in ch), v))
        keyed.sort()
        prev = None
        for key, v in keyed:
            if key != prev:
                if prev is not None:
                    next_rank += 1
                prev = key
            rank[v] = next_rank
        if keyed:
            next_rank += 1

    comps: List[Tuple[List[int], List[int]]] = []
    seen = [False] * n
    for c in range(n):
        if not on_cycle[c] or seen[c]:
            continue
        cyc = []
        v = c
        while not seen[v]:
            seen[v] = True
            cyc.append(v)
            v = succ[v]
        start = least_rotation([rank[u] for u in cyc])
        cyc = cyc[start:] + cyc[:start]
        code: List[int] = []
        visit: List[int] = []
        for root in cyc:
            stack = [(root, 0)]
            code.append(OPEN)
            visit.append(root)
            while stack:
                v, j = stack[-1]
                ch = children[v]
                if j < len(ch):
                    stack[-1] = (v, j + 1)
                    u = ch[j]
                    code.append(OPEN)
                    visit.append(u)
                    stack.append((u, 0))
                else:
                    code.append(CLOSE)
                    stack.pop()
        comps.append((code, visit))

    comps.sort(key=lambda cv: cv[0])
    out: List[int] = []
    order: List[int] = []
    for k, (code, visit) in enumerate(comps):
        if k:
            out.append(SEP)
        out.extend(code)
        order.extend(visit)
    return tuple(out), order


def product_successors(sa: Sequence[int], sb: Sequence[int]) -> List[int]:
    """Successor list of the direct product, vertex ``(a, b)`` stored at ``a*len(sb)+b``."""
    m = len(sb)
    return [x * m + y for x in sa for y in sb]
