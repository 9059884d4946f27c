"""Non-primality witnesses: for ``X != C_1`` find ``A, B, Y`` with ``XY = AB``,
``X`` dividing neither ``A`` nor ``B``.

Three constructions cover every case: disconnected ``X`` (branch ``D``),
connected ``X`` whose cycle is longer than one (branch ``C``), and connected
``X`` with a fixed point (branch ``F1``). The F1 construction comes with an
explicit isomorphism ``phi`` from ``XY`` to ``AB``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field, replace
from functools import cached_property
from math import prod
from typing import Any, Dict, Optional, Sequence, Tuple

from .algebra import add, cycle, lemma3_structure, product, scalar
from .core import (
    Component,
    FunctionalDigraph,
    IsoMap,
    canonical_form,
    canonical_order,
    check_iso_map,
    components,
    cyclic_part,
    height_profile,
    in_f1,
    is_isomorphic,
)
from .division import DEFAULT_BOUND, Tri, cyclic_quotients, exhaustive_quotients, is_irreducible
from .errors import NoWitnessError, NotInF1Error, WitnessInvalidError

SCHEMA_VERSION = 1

SIZE = "size-argument"
EXHAUSTIVE = "exhaustive-search"
CERTIFICATE = "certificate"
CYCLIC_PART = "cyclic-part"
IRREDUCIBLE = "irreducible-target"


@dataclass(frozen=True)
class NonDivEvidence:
    kind: str
    data: Dict[str, Any] = field(default_factory=dict)


@dataclass(frozen=True)
class WitnessReport:
    branch: str
    X: FunctionalDigraph
    A: FunctionalDigraph
    B: FunctionalDigraph
    Y: FunctionalDigraph
    not_div_A: NonDivEvidence
    not_div_B: NonDivEvidence
    parameters: Dict[str, Any] = field(default_factory=dict)
    iso: Optional[IsoMap] = None
    verified: bool = False

    def to_dict(self) -> Dict[str, Any]:
        return {
            "schema": SCHEMA_VERSION,
            "branch": self.branch,
            "parameters": self.parameters,
            "X": self.X.literal(),
            "A": self.A.literal(),
            "B": self.B.literal(),
            "Y": self.Y.literal(),
            "sizes": {"X": self.X.n, "A": self.A.n, "B": self.B.n, "Y": self.Y.n},
            "radix": self.parameters.get("radix"),
            "iso": {
                "kind": "explicit" if self.iso is not None else "canonical-equality",
                "canonical_code": list(canonical_form(product(self.X, self.Y)).code),
                "phi": list(self.iso.forward) if self.iso is not None else None,
            },
            "evidence": {
                "not_div_A": {"kind": self.not_div_A.kind, **self.not_div_A.data},
                "not_div_B": {"kind": self.not_div_B.kind, **self.not_div_B.data},
            },
            "verified": self.verified,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"


def report_from_dict(doc: Dict[str, Any]) -> WitnessReport:
    from .core import parse_literal

    if doc.get("schema") != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema {doc.get('schema')!r}")

    def ev(d: Dict[str, Any]) -> NonDivEvidence:
        d = dict(d)
        return NonDivEvidence(d.pop("kind"), d)

    phi = doc["iso"].get("phi")
    return WitnessReport(
        branch=doc["branch"],
        X=parse_literal(doc["X"]),
        A=parse_literal(doc["A"]),
        B=parse_literal(doc["B"]),
        Y=parse_literal(doc["Y"]),
        not_div_A=ev(doc["evidence"]["not_div_A"]),
        not_div_B=ev(doc["evidence"]["not_div_B"]),
        parameters=doc.get("parameters", {}),
        iso=IsoMap(tuple(phi)) if phi is not None else None,
        verified=False,
    )


# ---------------------------------------------------------------- primes


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = 2
    while f * f <= n:
        if n % f == 0:
            return False
        f += 1
    return True


def next_prime_above(n: int) -> int:
    p = n + 1
    while not _is_prime(p):
        p += 1
    return p


def smallest_prime_factor(n: int) -> int:
    f = 2
    while f * f <= n:
        if n % f == 0:
            return f
        f += 1
    return n


# ---------------------------------------------------------------- branch D


def _split_max_component(X: FunctionalDigraph) -> Tuple[int, FunctionalDigraph, FunctionalDigraph]:
    comps = components(X)
    ell = max(c.cycle_len for c in comps)
    # among components realising ell take the least canonical code
    best: Component = min(
        (c for c in comps if c.cycle_len == ell), key=lambda c: (canonical_form(c.digraph), c.vertices)
    )
    rest = FunctionalDigraph(())
    for c in comps:
        if c is not best:
            rest = add(rest, c.digraph)
    return ell, best.digraph, rest


def branch_D(X: FunctionalDigraph) -> Tuple[FunctionalDigraph, FunctionalDigraph, FunctionalDigraph]:
    """``X p C_p = C_p (C_p X_1 + p X_2)`` with ``p`` the least prime above the longest cycle."""
    if len(cyclic_part(X).lengths) < 2:
        raise ValueError("branch D needs a disconnected digraph")
    ell, X1, X2 = _split_max_component(X)
    p = next_prime_above(ell)
    Cp = cycle(p)
    return Cp, add(product(Cp, X1), scalar(p, X2)), scalar(p, Cp)


# ---------------------------------------------------------------- branch C


def _prime_power_split(ell: int) -> Tuple[int, int]:
    p = smallest_prime_factor(ell)
    alpha = 0
    m = ell
    while m % p == 0:
        m //= p
        alpha += 1
    return p, alpha


def branch_C(X: FunctionalDigraph) -> Tuple[FunctionalDigraph, FunctionalDigraph, FunctionalDigraph]:
    """Connected ``X`` in F_ell with ``ell > 1``.

    If ``X = C_{p^a}``: ``A = B = C_{p^(a+1)}`` and ``Y = p C_{p^(a+1)}``.
    Otherwise ``X C_{ell^2} = C_{p^a} (C_{ell/p^a} X')`` with ``X'`` one of
    the ``ell`` isomorphic components of ``C_{ell^2} X``.
    """
    cyc = cyclic_part(X).lengths
    if len(cyc) != 1 or cyc[0] < 2:
        raise ValueError("branch C needs a connected digraph with a cycle longer than 1")
    ell = cyc[0]
    p, alpha = _prime_power_split(ell)
    pa = p**alpha
    if X.n == ell and ell == pa:
        big = cycle(pa * p)
        return big, big, scalar(p, big)
    count, Xp = lemma3_structure(ell * ell, X)
    assert count == ell
    return cycle(pa), product(cycle(ell // pa), Xp), cycle(ell * ell)


# ---------------------------------------------------------------- branch F1


def build_P(d: int) -> FunctionalDigraph:
    """Path ``d -> d-1 -> ... -> 0`` with a loop on 0."""
    if d < 1:
        raise ValueError("d must be at least 1")
    return FunctionalDigraph(tuple(max(i - 1, 0) for i in range(d + 1)))


def choose_x_hat(X: FunctionalDigraph) -> int:
    """Deepest vertex, ties broken by canonical vertex order."""
    prof = height_profile(X)
    order = canonical_order(X)
    return next(v for v in order if prof.depth[v] == prof.height)


def build_Xhat(X: FunctionalDigraph, x_hat: int) -> FunctionalDigraph:
    """``X`` plus a new vertex ``t = |X|`` with an edge to ``x_hat``."""
    prof = height_profile(X)
    if not 0 <= x_hat < X.n or prof.depth[x_hat] != prof.height:
        raise ValueError(f"x_hat must have depth d(X)={prof.height}")
    return FunctionalDigraph(X.succ + (x_hat,))


class F1Construction:
    """All objects of the F1 witness for one ``X`` in F1 with ``X != C_1``.

    B-vertices are tuples ``(b_1, ..., b_{d+1})`` stored at 0-based positions,
    with ``b_i`` drawn from ``levels[i-1]``, the vertices of the extended
    digraph of depth at most ``i``. They are flattened in mixed radix with
    ``b_1`` most significant.
    """

    def __init__(self, X: FunctionalDigraph, x_hat: Optional[int] = None):
        if not in_f1(X):
            raise NotInF1Error("X must be connected with a fixed point")
        prof = height_profile(X)
        if prof.height < 1:
            raise NoWitnessError("X = C1 has no witness")
        self.X = X
        self.profile = prof
        self.chi = prof.fixed_point
        self.d = d = prof.height
        self.x_hat = choose_x_hat(X) if x_hat is None else x_hat
        self.Xhat = build_Xhat(X, self.x_hat)
        self.t = X.n
        xdepth = list(prof.depth) + [d + 1]
        self.xdepth = tuple(xdepth)
        self.levels: Tuple[Tuple[int, ...], ...] = tuple(
            tuple(v for v in range(X.n + 1) if xdepth[v] <= i) for i in range(1, d + 2)
        )
        self.radix = tuple(len(level) for level in self.levels)
        self._pos = [{v: k for k, v in enumerate(level)} for level in self.levels]
        self._stride = [prod(self.radix[i + 1 :]) for i in range(d + 1)]
        self.size_B = prod(self.radix)
        self.P = build_P(d)

    # -- B tuples

    def encode(self, b: Sequence[int]) -> int:
        return sum(self._pos[i][b[i]] * self._stride[i] for i in range(self.d + 1))

    def decode(self, idx: int) -> Tuple[int, ...]:
        out = []
        for i in range(self.d + 1):
            k, idx = divmod(idx, self._stride[i])
            out.append(self.levels[i][k])
        return tuple(out)

    def b_successor(self, b: Sequence[int]) -> Tuple[int, ...]:
        xs = self.Xhat.succ
        return tuple(xs[b[i + 1]] for i in range(self.d)) + (self.t,)

    def component(self, b: Sequence[int], i: int) -> int:
        """``b_i`` with the convention ``b_0 = chi``."""
        return self.chi if i == 0 else b[i - 1]

    def replace_component(self, b: Sequence[int], i: int, x: int) -> Tuple[int, ...]:
        """``b^{i,x}``; ``i = 0`` leaves ``b`` unchanged."""
        if i == 0:
            return tuple(b)
        if not 1 <= i <= self.d + 1 or x not in self._pos[i - 1]:
            raise ValueError(f"vertex {x} is not in level {i}")
        out = list(b)
        out[i - 1] = x
        return tuple(out)

    @cached_property
    def B(self) -> FunctionalDigraph:
        return FunctionalDigraph(
            tuple(self.encode(self.b_successor(self.decode(j))) for j in range(self.size_B))
        )

    @cached_property
    def beta(self) -> Tuple[int, ...]:
        xs = self.Xhat.succ
        out = []
        for i in range(1, self.d + 2):
            v = self.t
            for _ in range(self.d - i + 1):
                v = xs[v]
            out.append(v)
        return tuple(out)

    # -- A

    @property
    def u(self) -> int:
        return self.X.n * (self.d + 1)

    def a_index(self, x: int, i: int) -> int:
        return x * (self.d + 1) + i

    @cached_property
    def A(self) -> FunctionalDigraph:
        XP = product(self.X, self.P)
        return FunctionalDigraph(XP.succ + (self.a_index(self.chi, self.d - 1),))

    # -- Y

    @cached_property
    def v_chi(self) -> Tuple[int, ...]:
        """B-vertex indices with ``b_d = chi``, ascending."""
        d, chi = self.d, self.chi
        return tuple(j for j in range(self.size_B) if self.decode(j)[d - 1] == chi)

    @cached_property
    def Y(self) -> FunctionalDigraph:
        nb = self.size_B
        succB = self.B.succ
        succ = [self.P.succ[i] * nb + succB[j] for i in range(self.d + 1) for j in range(nb)]
        succ.extend((self.d - 1) * nb + succB[j] for j in self.v_chi)
        return FunctionalDigraph(tuple(succ))

    # -- phi

    def phi_vertex(self, x: int, y: int) -> int:
        nb = self.size_B
        npb = (self.d + 1) * nb
        if y < npb:
            i, j = divmod(y, nb)
            b = self.decode(j)
            if self.profile.depth[x] <= i:
                a = self.a_index(self.component(b, i), i)
                b2 = self.replace_component(b, i, x)
            else:
                a = self.a_index(x, i)
                b2 = b
        else:
            a = self.u
            b2 = self.replace_component(self.decode(self.v_chi[y - npb]), self.d, x)
        return a * nb + self.encode(b2)

    @cached_property
    def phi(self) -> IsoMap:
        ny = self.Y.n
        return IsoMap(tuple(self.phi_vertex(x, y) for x in range(self.X.n) for y in range(ny)))

    def y_index(self, i: int, b: Sequence[int]) -> int:
        """Index in ``Y`` of the ``PB`` vertex ``(i, b)``."""
        return i * self.size_B + self.encode(b)

    def y_chi_index(self, b: Sequence[int]) -> int:
        """Index in ``Y`` of an added vertex ``b`` (with ``b_d = chi``)."""
        return (self.d + 1) * self.size_B + self.v_chi.index(self.encode(b))

    def parameters(self) -> Dict[str, Any]:
        return {
            "d": self.d,
            "chi": self.chi,
            "x_hat": self.x_hat,
            "t": self.t,
            "u": self.u,
            "radix": list(self.radix),
            "levels": [list(level) for level in self.levels],
            "beta": list(self.beta),
            "beta_index": self.encode(self.beta),
        }


def build_B(X: FunctionalDigraph) -> Tuple[FunctionalDigraph, int]:
    con = F1Construction(X)
    return con.B, con.encode(con.beta)


def build_A(X: FunctionalDigraph) -> FunctionalDigraph:
    return F1Construction(X).A


def build_Y(X: FunctionalDigraph) -> FunctionalDigraph:
    return F1Construction(X).Y


def phi(X: FunctionalDigraph) -> IsoMap:
    return F1Construction(X).phi


def equivalence_count(E: FunctionalDigraph, d: int) -> int:
    """Classes of depth-``<= d`` vertices of ``E`` under ``e ~ e'`` iff ``E^{d-1}(e) = E^{d-1}(e')``."""
    if d < 1:
        raise ValueError("d must be at least 1")
    prof = height_profile(E)
    images = set()
    for v in range(E.n):
        if prof.depth[v] <= d:
            w = v
            for _ in range(d - 1):
                w = E.succ[w]
            images.add(w)
    return len(images)


def certificate_not_divides(X: FunctionalDigraph, B: FunctionalDigraph) -> NonDivEvidence:
    """``d(B) = d(X) + 1`` and ``n_B = n_X`` together rule out ``X | B`` for ``X, B`` in F1."""
    if not in_f1(X) or not in_f1(B):
        raise WitnessInvalidError("certificate", "X and B must both be in F1")
    d = height_profile(X).height
    dB = height_profile(B).height
    if d < 1:
        raise WitnessInvalidError("certificate", "X must differ from C1")
    nX, nB = equivalence_count(X, d), equivalence_count(B, d)
    if dB != d + 1:
        raise WitnessInvalidError("certificate", f"d(B)={dB}, expected {d + 1}")
    if nX != nB:
        raise WitnessInvalidError("certificate", f"n_B={nB} differs from n_X={nX}")
    return NonDivEvidence(CERTIFICATE, {"d": d, "d_B": dB, "n_X": nX, "n_B": nB})


certificate_not_divides_B = certificate_not_divides


# ---------------------------------------------------------------- evidence


def non_divisibility_evidence(
    X: FunctionalDigraph, T: FunctionalDigraph, branch: str, bound: int = DEFAULT_BOUND
) -> NonDivEvidence:
    """Strongest available proof that ``X`` does not divide ``T``.

    Order: size, exhaustive search, then the F1 certificate or, for branches C
    and D, the cyclic-part argument and finally irreducibility of ``T``.
    """
    if T.n % X.n:
        return NonDivEvidence(SIZE, {"target_size": T.n, "divisor_size": X.n, "remainder": T.n % X.n})
    q = T.n // X.n
    if q <= bound:
        qs = exhaustive_quotients(X, T, bound)
        if qs.quotients:
            raise WitnessInvalidError("non-divisibility", f"X divides target, quotient {qs.quotients[0]}")
        return NonDivEvidence(EXHAUSTIVE, {"quotient_size": q, "candidates": qs.candidates_checked})
    if branch == "F1":
        return certificate_not_divides(X, T)
    if not cyclic_quotients(cyclic_part(X), cyclic_part(T)):
        return NonDivEvidence(
            CYCLIC_PART, {"quotient_size": q, "X_cycles": list(cyclic_part(X).lengths), "target_cycles": list(cyclic_part(T).lengths)}
        )
    if is_irreducible(T, bound) == Tri.YES and not is_isomorphic(X, T):
        return NonDivEvidence(IRREDUCIBLE, {"quotient_size": q})
    raise WitnessInvalidError("non-divisibility", "no evidence could be established")


def _check_evidence(X: FunctionalDigraph, T: FunctionalDigraph, ev: NonDivEvidence, bound: int, side: str) -> None:
    clause = f"not_div_{side}"
    if ev.kind == SIZE:
        if T.n % X.n == 0:
            raise WitnessInvalidError(clause, f"|{side}| = {T.n} is a multiple of |X| = {X.n}")
    elif ev.kind == EXHAUSTIVE:
        if T.n % X.n or T.n // X.n != ev.data.get("quotient_size"):
            raise WitnessInvalidError(clause, "quotient size mismatch")
        qs = exhaustive_quotients(X, T, max(bound, T.n // X.n))
        if qs.quotients or not qs.exhaustive:
            raise WitnessInvalidError(clause, "exhaustive search found a quotient")
        if qs.candidates_checked != ev.data.get("candidates"):
            raise WitnessInvalidError(clause, "candidate count mismatch")
    elif ev.kind == CERTIFICATE:
        try:
            fresh = certificate_not_divides(X, T)
        except WitnessInvalidError as exc:
            raise WitnessInvalidError(clause, exc.detail) from None
        if fresh.data != ev.data:
            raise WitnessInvalidError(clause, "certificate values differ")
    elif ev.kind == CYCLIC_PART:
        if cyclic_quotients(cyclic_part(X), cyclic_part(T)):
            raise WitnessInvalidError(clause, "cyclic part of X divides that of the target")
    elif ev.kind == IRREDUCIBLE:
        if is_isomorphic(X, T) or X.succ == (0,) or is_irreducible(T, bound) != Tri.YES:
            raise WitnessInvalidError(clause, "irreducibility argument does not apply")
    else:
        raise WitnessInvalidError(clause, f"unknown evidence kind {ev.kind!r}")


# ---------------------------------------------------------------- driver


def branch_of(X: FunctionalDigraph) -> str:
    cyc = cyclic_part(X).lengths
    if len(cyc) >= 2:
        return "D"
    return "C" if cyc[0] > 1 else "F1"


def build_witness(X: FunctionalDigraph, verify_bound: int = DEFAULT_BOUND) -> WitnessReport:
    """Build and verify a witness that ``X`` is not prime."""
    if X.n == 0 or X.succ == (0,):
        raise NoWitnessError("C1 and the empty digraph have no non-primality witness")
    branch = branch_of(X)
    params: Dict[str, Any] = {}
    iso = None
    if branch == "D":
        ell, _, _ = _split_max_component(X)
        A, B, Y = branch_D(X)
        params = {"l": ell, "p": next_prime_above(ell)}
    elif branch == "C":
        ell = cyclic_part(X).lengths[0]
        p, alpha = _prime_power_split(ell)
        A, B, Y = branch_C(X)
        prime_power = X.n == ell and ell == p**alpha
        params = {"l": ell, "p": p, "alpha": alpha, "subcase": "prime-power-cycle" if prime_power else "general"}
    else:
        con = F1Construction(X)
        A, B, Y = con.A, con.B, con.Y
        params = con.parameters()
        iso = con.phi
    report = WitnessReport(
        branch=branch,
        X=X,
        A=A,
        B=B,
        Y=Y,
        not_div_A=non_divisibility_evidence(X, A, branch, verify_bound),
        not_div_B=non_divisibility_evidence(X, B, branch, verify_bound),
        parameters=params,
        iso=iso,
    )
    return verify_witness(report, verify_bound)


def verify_witness(r: WitnessReport, bound: int = DEFAULT_BOUND) -> WitnessReport:
    """Re-check every claim of ``r``; raise :class:`WitnessInvalidError` on the first failure."""
    X, A, B, Y = r.X, r.A, r.B, r.Y
    if X.n == 0 or X.succ == (0,):
        raise WitnessInvalidError("X", "X must be non-empty and differ from C1")
    XY, AB = product(X, Y), product(A, B)
    if XY.n != AB.n:
        raise WitnessInvalidError("XY=AB", f"|XY|={XY.n} but |AB|={AB.n}")
    if canonical_form(XY) != canonical_form(AB):
        raise WitnessInvalidError("XY=AB", "canonical forms differ")
    if r.branch == "F1":
        if r.iso is None:
            raise WitnessInvalidError("phi", "F1 witness carries no explicit isomorphism")
        if not check_iso_map(XY, AB, r.iso):
            raise WitnessInvalidError("phi", "map is not an isomorphism from XY to AB")
    elif r.iso is not None and not check_iso_map(XY, AB, r.iso):
        raise WitnessInvalidError("iso", "map is not an isomorphism from XY to AB")
    _check_evidence(X, A, r.not_div_A, bound, "A")
    _check_evidence(X, B, r.not_div_B, bound, "B")
    return replace(r, verified=True)
