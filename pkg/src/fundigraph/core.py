"""Functional digraphs: representation, structural queries and canonical forms."""
from __future__ import annotations

import re
from collections import Counter, deque
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence, Tuple

from . import kernels
from .errors import MalformedInputError, NotInF1Error


@dataclass(frozen=True)
class FunctionalDigraph:
    """A finite digraph where vertex ``v`` has the single out-neighbour ``succ[v]``.

    Equality (``==``) compares labelled digraphs. Use :func:`is_isomorphic`
    or :func:`canonical_form` to compare up to isomorphism.
    """

    succ: Tuple[int, ...]

    def __post_init__(self) -> None:
        succ = tuple(int(s) for s in self.succ)
        n = len(succ)
        for v, s in enumerate(succ):
            if not 0 <= s < n:
                raise MalformedInputError(f"successor of vertex {v} is {s}, outside [0, {n})")
        object.__setattr__(self, "succ", succ)

    @property
    def n(self) -> int:
        return len(self.succ)

    def __len__(self) -> int:
        return len(self.succ)

    def __call__(self, v: int) -> int:
        return self.succ[v]

    def literal(self) -> str:
        return "[" + ",".join(map(str, self.succ)) + "]"

    def __str__(self) -> str:
        return self.literal()

    def __add__(self, other: "FunctionalDigraph") -> "FunctionalDigraph":
        from .algebra import add

        return add(self, other)

    def __mul__(self, other):
        from .algebra import product, scalar

        if isinstance(other, int):
            return scalar(other, self)
        return product(self, other)

    def __rmul__(self, k):
        from .algebra import scalar

        if isinstance(k, int):
            return scalar(k, self)
        return NotImplemented

    @cached_property
    def _labeling(self) -> Tuple[Tuple[int, ...], List[int]]:
        return kernels.canonical_labeling(self.succ)


EMPTY = FunctionalDigraph(())


def from_successors(succ: Iterable[int]) -> FunctionalDigraph:
    try:
        values = [int(s) for s in succ]
    except (TypeError, ValueError) as exc:
        raise MalformedInputError(f"successor list must hold integers: {exc}") from None
    return FunctionalDigraph(tuple(values))


_LITERAL = re.compile(r"^\s*\[\s*(\d+(\s*,\s*\d+)*)?\s*,?\s*\]\s*$")


def parse_literal(text: str) -> FunctionalDigraph:
    """Parse ``[s0,s1,...]``."""
    if not _LITERAL.match(text):
        raise MalformedInputError(f"not a successor-list literal: {text!r}")
    body = text.strip()[1:-1]
    return from_successors(int(tok) for tok in body.split(",") if tok.strip())


def relabel(X: FunctionalDigraph, perm: Sequence[int]) -> FunctionalDigraph:
    """Return the digraph in which old vertex ``v`` is called ``perm[v]``."""
    succ = [0] * X.n
    for v, s in enumerate(X.succ):
        succ[perm[v]] = perm[s]
    return FunctionalDigraph(tuple(succ))


def induced(X: FunctionalDigraph, vertices: Sequence[int]) -> FunctionalDigraph:
    """Subdigraph on a successor-closed vertex set, renumbered in the given order."""
    index = {v: i for i, v in enumerate(vertices)}
    try:
        return FunctionalDigraph(tuple(index[X.succ[v]] for v in vertices))
    except KeyError as exc:
        raise ValueError(f"vertex set is not closed under successors: {exc}") from None


def iterate(X: FunctionalDigraph, x: int, k: int) -> int:
    """``X^k(x)``."""
    if not 0 <= x < X.n:
        raise MalformedInputError(f"vertex {x} outside [0, {X.n})")
    if k < 0:
        raise ValueError("k must be non-negative")
    succ = X.succ
    for _ in range(k):
        x = succ[x]
    return x


# ---------------------------------------------------------------- components


@dataclass(frozen=True)
class Component:
    """A connected component. ``vertices[i]`` is the original name of local vertex ``i``."""

    digraph: FunctionalDigraph
    cycle_len: int
    cycle_vertices: Tuple[int, ...]
    vertices: Tuple[int, ...]


def cycle_vertices(X: FunctionalDigraph) -> List[bool]:
    n = X.n
    indeg = [0] * n
    for s in X.succ:
        indeg[s] += 1
    on = [True] * n
    queue = deque(v for v in range(n) if indeg[v] == 0)
    while queue:
        v = queue.popleft()
        on[v] = False
        w = X.succ[v]
        indeg[w] -= 1
        if indeg[w] == 0:
            queue.append(w)
    return on


def component_labels(X: FunctionalDigraph) -> List[int]:
    """Component index per vertex; components numbered by their smallest vertex."""
    n = X.n
    label = [-1] * n
    count = 0
    for v in range(n):
        if label[v] >= 0:
            continue
        path = []
        on_path = set()
        w = v
        while label[w] < 0 and w not in on_path:
            path.append(w)
            on_path.add(w)
            w = X.succ[w]
        if label[w] >= 0:
            c = label[w]
        else:
            c = count
            count += 1
        for u in path:
            label[u] = c
    # numbering above follows discovery, which is already by smallest vertex
    return label


def components(X: FunctionalDigraph) -> List[Component]:
    label = component_labels(X)
    on = cycle_vertices(X)
    groups: List[List[int]] = [[] for _ in range(max(label, default=-1) + 1)]
    for v, c in enumerate(label):
        groups[c].append(v)
    out = []
    for verts in groups:
        local = {v: i for i, v in enumerate(verts)}
        sub = FunctionalDigraph(tuple(local[X.succ[v]] for v in verts))
        start = next(v for v in verts if on[v])
        cyc = [start]
        w = X.succ[start]
        while w != start:
            cyc.append(w)
            w = X.succ[w]
        out.append(Component(sub, len(cyc), tuple(local[v] for v in cyc), tuple(verts)))
    return out


@dataclass(frozen=True, order=True)
class SumOfCycles:
    """Multiset of cycle lengths, kept as a sorted tuple."""

    lengths: Tuple[int, ...] = ()

    def __post_init__(self) -> None:
        lengths = tuple(sorted(int(x) for x in self.lengths))
        if lengths and lengths[0] < 1:
            raise ValueError("cycle lengths must be positive")
        object.__setattr__(self, "lengths", lengths)

    @classmethod
    def of(cls, *lengths: int) -> "SumOfCycles":
        return cls(tuple(lengths))

    @property
    def size(self) -> int:
        """Number of vertices of the corresponding digraph."""
        return sum(self.lengths)

    def counts(self) -> Counter:
        return Counter(self.lengths)

    def to_digraph(self) -> FunctionalDigraph:
        succ: List[int] = []
        for ell in self.lengths:
            base = len(succ)
            succ.extend(base + (i + 1) % ell for i in range(ell))
        return FunctionalDigraph(tuple(succ))

    @classmethod
    def from_digraph(cls, X: FunctionalDigraph) -> "SumOfCycles":
        comps = components(X)
        if any(c.digraph.n != c.cycle_len for c in comps):
            raise ValueError("digraph is not a sum of cycles")
        return cls(tuple(c.cycle_len for c in comps))

    def __mul__(self, other: "SumOfCycles") -> "SumOfCycles":
        from .algebra import sum_of_cycles_product

        return sum_of_cycles_product(self, other)

    def __str__(self) -> str:
        if not self.lengths:
            return "0"
        parts = []
        for ell, k in sorted(Counter(self.lengths).items()):
            parts.append(f"C{ell}" if k == 1 else f"{k}C{ell}")
        return "+".join(parts)


def cyclic_part(X: FunctionalDigraph) -> SumOfCycles:
    """The sum of the cycles of ``X``, one per component."""
    on = cycle_vertices(X)
    seen = [False] * X.n
    lengths = []
    for v in range(X.n):
        if on[v] and not seen[v]:
            ell = 0
            w = v
            while not seen[w]:
                seen[w] = True
                ell += 1
                w = X.succ[w]
            lengths.append(ell)
    return SumOfCycles(tuple(lengths))


def is_connected(X: FunctionalDigraph) -> bool:
    return len(cyclic_part(X).lengths) == 1


# ---------------------------------------------------------------- heights (F1)


@dataclass(frozen=True)
class HeightProfile:
    fixed_point: int
    depth: Tuple[int, ...]
    height: int


def in_f1(X: FunctionalDigraph) -> bool:
    return cyclic_part(X).lengths == (1,)


def height_profile(X: FunctionalDigraph) -> HeightProfile:
    """Fixed point, depth of every vertex and the height of an F1 digraph."""
    if not in_f1(X):
        raise NotInF1Error("digraph must be connected with a cycle of length 1")
    chi = next(v for v in range(X.n) if X.succ[v] == v)
    preds: List[List[int]] = [[] for _ in range(X.n)]
    for v, s in enumerate(X.succ):
        if v != chi:
            preds[s].append(v)
    depth = [0] * X.n
    queue = deque([chi])
    while queue:
        v = queue.popleft()
        for u in preds[v]:
            depth[u] = depth[v] + 1
            queue.append(u)
    return HeightProfile(chi, tuple(depth), max(depth))


def truncate(X: FunctionalDigraph, d: int) -> FunctionalDigraph:
    """Subdigraph induced by the vertices of depth at most ``d``."""
    if d < 0:
        raise ValueError("d must be non-negative")
    prof = height_profile(X)
    return induced(X, [v for v in range(X.n) if prof.depth[v] <= d])


# ---------------------------------------------------------------- canonical forms


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Complete isomorphism invariant; compares as a tuple of integers."""

    code: Tuple[int, ...]

    def __str__(self) -> str:
        return "".join(map(str, self.code))


def canonical_form(X: FunctionalDigraph) -> CanonicalForm:
    return CanonicalForm(X._labeling[0])


def canonical_order(X: FunctionalDigraph) -> List[int]:
    """``order[new] = old`` for the canonical relabelling."""
    return X._labeling[1]


def canonical_digraph(X: FunctionalDigraph) -> FunctionalDigraph:
    """The canonical representative: identical for isomorphic inputs."""
    order = canonical_order(X)
    pos = [0] * X.n
    for new, old in enumerate(order):
        pos[old] = new
    return relabel(X, pos)


def is_isomorphic(X: FunctionalDigraph, Y: FunctionalDigraph) -> bool:
    return X.n == Y.n and canonical_form(X) == canonical_form(Y)


@dataclass(frozen=True)
class IsoMap:
    """Vertex map ``v -> forward[v]``."""

    forward: Tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "forward", tuple(int(v) for v in self.forward))


def check_iso_map(X: FunctionalDigraph, Y: FunctionalDigraph, m: IsoMap) -> bool:
    """True iff ``m`` is a bijection V(X) -> V(Y) with ``m(X(v)) = Y(m(v))``."""
    f = m.forward
    if len(f) != X.n or X.n != Y.n:
        return False
    if any(not 0 <= w < Y.n for w in f) or len(set(f)) != len(f):
        return False
    return all(f[X.succ[v]] == Y.succ[f[v]] for v in range(X.n))


def find_isomorphism(X: FunctionalDigraph, Y: FunctionalDigraph) -> Optional[IsoMap]:
    """An explicit isomorphism built from the two canonical labelings, or None."""
    if not is_isomorphic(X, Y):
        return None
    ox, oy = canonical_order(X), canonical_order(Y)
    fwd = [0] * X.n
    for a, b in zip(ox, oy):
        fwd[a] = b
    return IsoMap(tuple(fwd))


# ---------------------------------------------------------------- export


def to_dot(X: FunctionalDigraph, name: str = "X", labels: Optional[Sequence[str]] = None) -> str:
    lines = [f'digraph "{name}" {{', "  node [shape=circle];"]
    for v in range(X.n):
        if labels is not None:
            lines.append(f'  {v} [label="{labels[v]}"];')
        else:
            lines.append(f"  {v};")
    for v, s in enumerate(X.succ):
        lines.append(f"  {v} -> {s};")
    lines.append("}")
    return "\n".join(lines) + "\n"
