import json

import pytest

from agpoly.identities import run_suite as run_via_identities
from agpoly.suites import (
    ALIASES,
    SUITES,
    dumps_report,
    expand,
    grid_hash,
    list_suites,
    parse_range,
    report_json,
    resolve,
    run_suite,
)

EXPECTED_ORDER = [
    "theorem5", "theorem6", "fq", "conjecture13", "conjecture14", "e7", "andrews-limit",
    "multinomial-recurrences", "fermigas-decomposition", "durfee-genfunc",
    "lemma8-bijection", "grec-oracle",
]


def test_registry():
    assert [s.name for s in list_suites()] == EXPECTED_ORDER
    assert "selftest-corrupted" in SUITES and SUITES["selftest-corrupted"].hidden
    assert resolve("theorem5-vs-oracle").name == "theorem5"
    assert ALIASES["theorem5-vs-oracle"] == "theorem5"
    with pytest.raises(KeyError):
        resolve("nope")


def test_parse_range():
    assert parse_range("1..3") == [1, 2, 3]
    assert parse_range("0,2..3,7") == [0, 2, 3, 7]
    assert parse_range(4) == [4]
    assert parse_range([3, "1..2"]) == [1, 2, 3]
    assert parse_range("all") is None and parse_range(None) is None
    assert parse_range("") == []
    with pytest.raises(ValueError):
        parse_range(True)


def test_expand_validates():
    spec = resolve("e7")
    g = expand(spec, {"L": "2..3"})
    assert g["L"] == [2, 3] and g["k"] == [1, 2, 3] and g["a_max"] == "kL"
    with pytest.raises(ValueError):
        expand(spec, {"iprime": 1})
    with pytest.raises(ValueError):
        expand(spec, {"a_max": "2L"})


def test_alias_over_reference_grid_passes():
    rep = run_suite("theorem5-vs-oracle", {"k": "1..3", "L": "0..10"})
    assert rep.passed and rep.suite == "theorem5" and rep.points > 200


def test_empty_grid_is_vacuous():
    rep = run_suite("theorem6", {"L": []})
    assert rep.passed and rep.points == 0 and rep.witnesses == []


def test_selftest_yields_exactly_one_witness():
    rep = run_suite("selftest-corrupted")
    assert not rep.passed and len(rep.witnesses) == 1
    w = rep.witnesses[0]
    assert set(w) == {"params", "lhs", "rhs"}
    assert w["params"] == {"k": 1, "i": 2, "iprime": 2, "L": 4}


def test_identities_entry_point_delegates():
    assert run_via_identities("fq", {"k": [1], "L": "1..4"}).passed


@pytest.mark.parametrize("name", ["durfee-genfunc", "lemma8-bijection", "grec-oracle", "fq", "e7"])
def test_small_suites_pass(name):
    grid = {"k": [1, 2], "L": "1..4"}
    if "a" in resolve(name).defaults:
        grid["a"] = "0..4"
    assert run_suite(name, grid).passed


def test_recurrence_suite_reports_identity_names_on_failure(monkeypatch):
    import agpoly.suites as su

    monkeypatch.setattr(su, "t2_sides", lambda L, a, M, k: (su.QPoly.one(), su.QPoly.zero()))
    rep = run_suite("multinomial-recurrences", {"k": [1], "L": [1]})
    assert rep.witnesses and {w["params"]["identity"] for w in rep.witnesses} == {"t2"}


def test_conjecture14_report_only_points_do_not_fail():
    rep = run_suite("conjecture14", {"k": [3], "ell": [3], "i": [2], "iprime": [2], "N": [36]})
    assert rep.passed and rep.notes and rep.report_only
    js = report_json(rep)
    assert js["report_only"] is True and js["notes"][0]["report_only"] is True


def test_conjecture14_witness_details():
    rep = run_suite("conjecture14", {"k": [2], "ell": [2], "i": [3], "iprime": [3], "N": [40]})
    (w,) = rep.witnesses
    assert w["mismatch"] == "prefactor"
    assert w["lhs"]["denominator"] == 8


def test_report_is_byte_identical_across_worker_counts():
    grid = {"k": "1..2", "L": "0..6"}
    a = dumps_report(run_suite("conjecture13", grid, workers=1))
    b = dumps_report(run_suite("conjecture13", grid, workers=3))
    assert a == b
    js = json.loads(a)
    assert js["grid_hash"] == grid_hash("conjecture13", js["grid"])
    assert js["elapsed_ms"] == 0 and js["version"] == "0.1.0"


def test_timing_is_opt_in():
    rep = run_suite("fq", {"k": [3]}, timing=True)
    assert rep.elapsed_ms >= 0
    assert run_suite("fq", {"k": [3]}).elapsed_ms == 0


def test_progress_callback_reaches_total():
    seen = []
    run_suite("fq", {"k": [1]}, progress=lambda d, t: seen.append((d, t)))
    assert seen and seen[-1][0] == seen[-1][1]
