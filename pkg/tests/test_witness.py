from __future__ import annotations

import dataclasses
import json

import pytest

from fundigraph.algebra import add, cycle, product, scalar
from fundigraph.core import FunctionalDigraph, canonical_form, check_iso_map, cyclic_part, height_profile, is_isomorphic
from fundigraph.division import Tri, divides
from fundigraph.enumeration import all_digraphs
from fundigraph.errors import NotInF1Error, NoWitnessError, WitnessInvalidError
from fundigraph.witness import (
    CERTIFICATE,
    EXHAUSTIVE,
    SIZE,
    F1Construction,
    NonDivEvidence,
    branch_C,
    branch_D,
    build_P,
    build_Xhat,
    build_witness,
    certificate_not_divides,
    choose_x_hat,
    equivalence_count,
    next_prime_above,
    report_from_dict,
    smallest_prime_factor,
    verify_witness,
)

from oracles import naive_product, perm_isomorphic

TWO_X = FunctionalDigraph((0, 0))


@pytest.fixture(scope="module")
def con():
    return F1Construction(TWO_X)


class TestTwoVertexWitness:
    def test_parameters(self, con):
        assert (con.chi, con.x_hat, con.t, con.d) == (0, 1, 2, 1)
        assert build_P(1).succ == (0, 0)
        assert con.Xhat.succ == (0, 0, 1)
        assert height_profile(con.Xhat).height == 2

    def test_sizes(self, con):
        assert (con.A.n, con.B.n, con.Y.n) == (5, 6, 15)
        assert TWO_X.n * con.Y.n == con.A.n * con.B.n == 30
        assert con.radix == (2, 3)
        assert len(con.v_chi) == con.B.n // TWO_X.n == 3

    def test_B_shape(self, con):
        assert height_profile(con.B).height == 2
        assert cyclic_part(con.B).lengths == (1,)
        # the loop of B is the tuple (x_hat, t)
        assert con.beta == (con.x_hat, con.t)
        assert con.B.succ[con.encode(con.beta)] == con.encode(con.beta)

    def test_A_and_Y_shape(self, con):
        # A: X*P (a loop with three vertices hanging off) plus u -> (chi, d-1)
        assert cyclic_part(con.A).lengths == (1,)
        assert con.A.succ[con.u] == con.a_index(con.chi, con.d - 1)
        assert cyclic_part(con.Y).lengths == (1,)
        Y_pb = FunctionalDigraph(con.Y.succ[: 2 * con.size_B])
        assert Y_pb == product(con.P, con.B)

    def test_phi_spot_checks(self, con):
        chi, xh, nb, ny = con.chi, con.x_hat, con.size_B, con.Y.n
        phi = con.phi.forward

        def ab(a, b):
            return a * nb + con.encode(b)

        assert phi[xh * ny + con.y_index(1, (chi, chi))] == ab(con.a_index(chi, 1), (xh, chi))
        for j in range(nb):
            b = con.decode(j)
            assert phi[chi * ny + con.y_index(0, b)] == ab(con.a_index(chi, 0), b)
        assert phi[xh * ny + con.y_chi_index((chi, chi))] == ab(con.u, (xh, chi))

    def test_phi_is_isomorphism(self, con):
        assert check_iso_map(product(TWO_X, con.Y), product(con.A, con.B), con.phi)

    def test_independent_product_check(self, con):
        xy, _ = naive_product(TWO_X.succ, con.Y.succ)
        ab, _ = naive_product(con.A.succ, con.B.succ)
        assert is_isomorphic(FunctionalDigraph(xy), FunctionalDigraph(ab))

    def test_certificate(self, con):
        ev = certificate_not_divides(TWO_X, con.B)
        assert ev.kind == CERTIFICATE
        assert ev.data == {"d": 1, "d_B": 2, "n_X": 2, "n_B": 2}

    def test_report(self):
        r = build_witness(TWO_X)
        assert r.branch == "F1" and r.verified
        assert r.not_div_A.kind == SIZE
        assert r.not_div_B.kind == EXHAUSTIVE
        assert r.not_div_B.data == {"quotient_size": 3, "candidates": 7}
        assert divides(TWO_X, r.A) == Tri.NO and divides(TWO_X, r.B) == Tri.NO


def test_star_construction():
    X = FunctionalDigraph((0, 0, 0))
    con = F1Construction(X)
    assert con.radix == (3, 4) and con.B.n == 12
    assert height_profile(con.B).height == 2


def test_x_hat_choice():
    X = FunctionalDigraph((0, 0, 1, 1))
    xh = choose_x_hat(X)
    assert height_profile(X).depth[xh] == 2
    with pytest.raises(ValueError):
        build_Xhat(X, 1)


def test_equivalence_count():
    assert equivalence_count(cycle(1), 1) == 1
    assert equivalence_count(TWO_X, 1) == 2
    with pytest.raises(ValueError):
        equivalence_count(TWO_X, 0)


def test_certificate_rejects():
    with pytest.raises(WitnessInvalidError):
        certificate_not_divides(TWO_X, TWO_X)
    with pytest.raises(WitnessInvalidError):
        certificate_not_divides(TWO_X, cycle(2))


def test_primes():
    assert [next_prime_above(k) for k in (1, 2, 3, 4, 6, 7)] == [2, 3, 5, 5, 7, 11]
    assert [smallest_prime_factor(k) for k in (2, 9, 15, 49)] == [2, 3, 3, 7]


class TestBranchD:
    def test_two_loops(self):
        X = scalar(2, cycle(1))
        A, B, Y = branch_D(X)
        assert A == cycle(2) and is_isomorphic(Y, scalar(2, cycle(2)))
        assert is_isomorphic(product(X, Y), product(A, B))
        r = build_witness(X)
        assert r.branch == "D" and r.verified
        assert {r.not_div_A.kind, r.not_div_B.kind} <= {SIZE, EXHAUSTIVE}

    def test_identity_all_small(self):
        for n in range(2, 6):
            for X in all_digraphs(n):
                if len(cyclic_part(X).lengths) >= 2:
                    A, B, Y = branch_D(X)
                    assert canonical_form(product(X, Y)) == canonical_form(product(A, B))

    def test_rejects_connected(self):
        with pytest.raises(ValueError):
            branch_D(cycle(3))


class TestBranchC:
    def test_prime_power_cycle(self):
        A, B, Y = branch_C(cycle(2))
        assert A == B == cycle(4) and is_isomorphic(Y, scalar(2, cycle(4)))
        r = build_witness(cycle(2))
        assert r.branch == "C" and r.parameters["subcase"] == "prime-power-cycle"

    def test_c6(self):
        A, B, Y = branch_C(cycle(6))
        assert A == cycle(2) and Y == cycle(36)
        assert is_isomorphic(B, scalar(3, cycle(36)))
        assert is_isomorphic(product(cycle(6), Y), product(A, B))
        r = build_witness(cycle(6))
        assert r.parameters == {"l": 6, "p": 2, "alpha": 1, "subcase": "general"}

    def test_tailed_cycle(self):
        X = FunctionalDigraph((1, 0, 1))
        r = build_witness(X)
        assert r.branch == "C" and r.B.n == 6 and r.Y.n == 4
        # quotient size 2: every one of the 3 classes of size 2 is tried
        assert r.not_div_B.kind == EXHAUSTIVE and r.not_div_B.data == {"quotient_size": 2, "candidates": 3}


def test_all_small_witnesses():
    for n in range(2, 6):
        for X in all_digraphs(n):
            r = build_witness(X)
            assert r.verified
            assert is_isomorphic(product(X, r.Y), product(r.A, r.B))


def test_rejects_c1():
    with pytest.raises(NoWitnessError):
        build_witness(cycle(1))
    with pytest.raises(NoWitnessError):
        F1Construction(cycle(1))
    with pytest.raises(NotInF1Error):
        F1Construction(cycle(2))


class TestTampering:
    def test_redirected_edge(self):
        r = build_witness(TWO_X)
        succ = list(r.B.succ)
        succ[0] = (succ[0] + 1) % len(succ)
        bad = dataclasses.replace(r, B=FunctionalDigraph(tuple(succ)), verified=False)
        with pytest.raises(WitnessInvalidError):
            verify_witness(bad)

    def test_false_evidence(self):
        r = build_witness(scalar(2, cycle(1)))
        bad = dataclasses.replace(r, not_div_A=NonDivEvidence(SIZE, {}), A=scalar(2, cycle(1)))
        with pytest.raises(WitnessInvalidError):
            verify_witness(bad)

    def test_broken_phi(self):
        r = build_witness(TWO_X)
        fwd = list(r.iso.forward)
        fwd[0] = fwd[1]
        with pytest.raises(WitnessInvalidError) as exc:
            verify_witness(dataclasses.replace(r, iso=type(r.iso)(tuple(fwd))))
        assert exc.value.clause == "phi"

    def test_quotient_exists(self):
        # X = 2C1 divides 2C2, so no evidence may claim otherwise
        r = build_witness(scalar(2, cycle(1)))
        bad = dataclasses.replace(r, A=add(cycle(2), cycle(2)), Y=r.Y)
        with pytest.raises(WitnessInvalidError):
            verify_witness(bad)


class TestJson:
    def test_roundtrip_and_stability(self):
        r = build_witness(TWO_X)
        text = r.to_json()
        assert text == build_witness(TWO_X).to_json()
        doc = json.loads(text)
        assert doc["schema"] == 1
        assert doc["sizes"] == {"X": 2, "A": 5, "B": 6, "Y": 15}
        assert doc["radix"] == [2, 3]
        assert doc["iso"]["kind"] == "explicit" and len(doc["iso"]["phi"]) == 30
        back = verify_witness(report_from_dict(doc))
        assert back.verified and back.B == r.B

    def test_schema_guard(self):
        doc = json.loads(build_witness(cycle(2)).to_json())
        doc["schema"] = 2
        with pytest.raises(ValueError):
            report_from_dict(doc)


def test_phi_against_permutation_oracle_small():
    # for the smallest case the explicit phi can be double-checked by brute force on sizes
    r = build_witness(TWO_X)
    xy, _ = naive_product(r.X.succ, r.Y.succ)
    ab, _ = naive_product(r.A.succ, r.B.succ)
    f = r.iso.forward
    assert sorted(f) == list(range(30))
    assert all(f[xy[v]] == ab[f[v]] for v in range(30))
    assert perm_isomorphic(r.X.succ, (0, 0))
