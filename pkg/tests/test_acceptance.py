"""Acceptance criteria, checked with exact equality.

Each test prints one ``[criterion N] PASS|FAIL ...`` line straight to the
terminal (so it shows up under ``pytest -v`` without ``-s``).  Two criteria
fail as stated; their tests are strict xfails and the printed line carries
the first witness.  Run ``python tests/test_acceptance.py`` for just the
ten lines.
"""

from __future__ import annotations

import json
import sys

import pytest

from agpoly.identities import GordonParams, boson_polynomial, fermion_polynomial
from agpoly.partitions import gen_func_bruteforce
from agpoly.qpoly import QPoly
from agpoly.suites import dumps_report, list_suites, run_suite

WORKERS = 4


@pytest.fixture
def say(capsys):
    def emit(number, ok, text):
        line = f"[criterion {number:>2}] {'PASS' if ok else 'FAIL'}  {text}"
        with capsys.disabled():
            print("\n" + line, flush=True)
        return ok

    return emit


def _first(rep):
    if not rep.witnesses:
        return ""
    return " first witness " + json.dumps(rep.witnesses[0]["params"], sort_keys=True)


def test_criterion_01_triple_equality(say):
    points = bad = 0
    for k in (1, 2, 3):
        for i in range(1, k + 2):
            for ip in range(1, k + 2):
                for L in range(0, 11):
                    gp = GordonParams(k, i, ip, L)
                    if not gp.in_domain:
                        continue
                    points += 1
                    b, f, g = boson_polynomial(gp), fermion_polynomial(gp), gen_func_bruteforce(k, i, ip, L)
                    bad += not (b == f == g)
    ok = say(1, bad == 0, f"boson = fermion = enumeration at {points} points (k <= 3, L <= 10), {bad} mismatches")
    assert ok


def test_criterion_02_multinomial_recurrences(say):
    rep = run_suite("multinomial-recurrences", {"k": "1..3", "L": "0..6"}, workers=WORKERS)
    ok = say(2, rep.passed, f"symmetry, recurrences, tautology, reductions: {rep.points} checks" + _first(rep))
    assert ok


def test_criterion_03_durfee(say):
    gf = run_suite("durfee-genfunc", {"k": "1..3", "L": "0..6", "a": "0..6"}, workers=WORKERS)
    bij = run_suite("lemma8-bijection", {"k": "1..3", "L": "1..6", "a": "0..6"}, workers=WORKERS)
    ok = say(3, gf.passed and bij.passed,
             f"admissible counts = tilde multinomial ({gf.points} points); column maps invert ({bij.points} points)"
             + _first(gf) + _first(bij))
    assert ok


def test_criterion_04_fermigas(say):
    rep = run_suite("fermigas-decomposition",
                    {"k": "1..3", "L": "0..8", "coverage_k_max": 2, "example": True}, workers=WORKERS)
    ok = say(4, rep.passed,
             f"partition sums, path coverage (k <= 2) and the k=8 worked example: {rep.points} checks" + _first(rep))
    assert ok


def test_criterion_05_base_one_chain(say):
    rep = run_suite("fq", {"k": "1..3", "L": "0..10"}, workers=WORKERS)
    ok = say(5, rep.passed, f"fermion(ell=1) = binomial form = rank-restricted count: {rep.points} checks" + _first(rep))
    assert ok


@pytest.mark.xfail(strict=True, reason="generalized fermion/boson equality fails for ell < k with r >= 1 (ledgered)")
def test_criterion_06_generalized_equality(say):
    rep = run_suite("conjecture13", {"k": "1..3", "L": "0..8"}, workers=WORKERS)
    say(6, rep.passed, f"{len(rep.witnesses)} of {rep.points} points disagree" + _first(rep))
    assert rep.passed


def test_criterion_06_holds_where_ell_is_k_or_r_is_zero():
    rep = run_suite("conjecture13", {"k": "1..3", "L": "0..8"}, workers=WORKERS)
    stray = [w for w in rep.witnesses
             if w["params"]["ell"] == w["params"]["k"] or w["params"]["iprime"] == w["params"]["ell"] + 1]
    assert rep.witnesses and not stray


def test_criterion_07_e7(say):
    rep = run_suite("e7", {"k": "1..3", "L": "0..8"}, workers=WORKERS)
    ok = say(7, rep.passed, f"Durfee-square sum identity at {rep.points} points (a up to kL)" + _first(rep))
    assert ok


def test_criterion_08_andrews_limit(say):
    rep = run_suite("andrews-limit", {"k": "1..3", "N": [20], "L": [40]}, workers=WORKERS)
    head = boson_polynomial(GordonParams(1, 2, 2, 40), max_exp=5)
    # partitions of n <= 5 into parts 1, 4 (mod 5): 1,1,1,1,2,2
    ok = rep.passed and head == QPoly.from_dict({0: 1, 1: 1, 2: 1, 3: 1, 4: 2, 5: 2})
    ok = say(8, ok, f"L=40 polynomial matches both product forms to q^20 at {rep.points} points; head {head}")
    assert ok


CRITERION_9_GRID = {"k": "1..3", "form": "printed"}


@pytest.mark.xfail(strict=True, reason="dual identity as printed fails beyond a monomial for i <= k (ledgered)")
def test_criterion_09_dual_as_printed(say):
    rep = run_suite("conjecture14", CRITERION_9_GRID, workers=WORKERS)
    fixed = run_suite("conjecture14", {**CRITERION_9_GRID, "form": "corrected"}, workers=WORKERS)
    kinds = sorted({w["mismatch"] for w in rep.witnesses})
    say(9, rep.passed, f"printed form: {len(rep.witnesses)} asserted and {len(rep.notes)} report-only "
        f"mismatches among {rep.points} points ({', '.join(kinds)}); corrected form "
        f"{'agrees at all' if fixed.passed and not fixed.notes else 'still fails at some of'} {fixed.points} points"
        + _first(rep))
    assert rep.passed


def test_criterion_09_dual_corrected():
    rep = run_suite("conjecture14", {**CRITERION_9_GRID, "form": "corrected"}, workers=WORKERS)
    assert rep.passed and not rep.notes


def test_criterion_10_determinism(say):
    names = [s.name for s in list_suites()]
    small = {"k": "1..2"}
    differing = []
    for name in names:
        first = dumps_report(run_suite(name, small, workers=1))
        second = dumps_report(run_suite(name, small, workers=WORKERS))
        third = dumps_report(run_suite(name, small, workers=1))
        if not first == second == third:
            differing.append(name)
    ok = say(10, not differing, f"{len(names)} suites rerun serially and in parallel: "
             + ("byte-identical reports" if not differing else f"differences in {differing}"))
    assert ok


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q", "-p", "no:cacheprovider"]))
