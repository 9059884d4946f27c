from __future__ import annotations

from fundigraph import lemmas
from fundigraph.core import FunctionalDigraph
from fundigraph.witness import F1Construction


def test_every_suite_passes_and_checks_something():
    results = lemmas.run_suites(3)
    assert len(results) == len(lemmas.SUITES)
    assert {r.module for r in results} == {"algebra", "division", "witness"}
    for r in results:
        assert r.passed and r.checked > 0, r.line()


def test_empty_or_crashing_suite_fails(monkeypatch):
    def empty(cap):
        return 0, ""

    def crash(cap):
        raise RuntimeError("boom")

    monkeypatch.setattr(lemmas, "SUITES", [("algebra", "empty", empty), ("witness", "crash", crash)])
    results = lemmas.run_suites(3)
    assert [r.passed for r in results] == [False, False]
    assert "no cases" in results[0].detail and "boom" in results[1].detail
    assert results[1].line().startswith("FAIL")


def test_f1_checker_detects_broken_successor():
    con = F1Construction(FunctionalDigraph((0, 0, 1)))
    assert lemmas.check_f1_equations(con) is None
    real = con.b_successor
    con.b_successor = lambda b: real(b)[:-1] + (con.chi,)
    assert lemmas.check_f1_equations(con) is not None
