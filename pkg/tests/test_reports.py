"""Tests for the verification-suite runner and its report structures."""

import json

import pytest

from bellgate.reports import (
    CheckRecord,
    VerificationReport,
    aggregate,
    all_suites,
    classification_suite,
    conjugation_suite,
    correction_suite,
    entangle_suite,
    ghz_suite,
    identities_suite,
    teleport_suite,
    two_gate_suite,
    ybe_suite,
)


# ---------------------------------------------------------------- structures


def test_check_record_build_and_dict():
    rec = CheckRecord.build("a/b", True, "x", "x")
    assert rec.status == "pass" and rec.ok
    assert rec.to_dict() == {"id": "a/b", "status": "pass", "expected": "x", "actual": "x"}
    bad = CheckRecord.build("a/c", False, "x", "y")
    assert bad.status == "fail" and not bad.ok


def test_report_summary_and_passed():
    rep = VerificationReport(
        "demo",
        (
            CheckRecord.build("one", True, "v", "v"),
            CheckRecord.build("two", False, "v", "w"),
        ),
    )
    assert not rep.passed
    assert rep.summary == {"total": 2, "passed": 1, "failed": 1}
    payload = rep.to_dict()
    assert payload["suite"] == "demo"
    assert payload["checks"][1]["status"] == "fail"
    assert payload["summary"]["failed"] == 1


def test_render_text_lists_failures():
    rep = VerificationReport(
        "demo",
        tuple(
            CheckRecord.build(f"c{i}", i % 2 == 0, "good", "bad" if i % 2 else "good")
            for i in range(6)
        ),
    )
    text = rep.render_text()
    assert text.startswith("[FAIL] demo: 3/6 checks passed")
    assert "c1: expected good, got bad" in text
    assert "c2" not in text  # passing checks stay out of the text form


def test_render_text_truncates():
    rep = VerificationReport(
        "demo",
        tuple(CheckRecord.build(f"c{i}", False, "a", "b") for i in range(30)),
    )
    text = rep.render_text(max_failures=5)
    assert "... and 25 more failures" in text
    assert text.count("expected a, got b") == 5


def test_render_text_pass_is_one_line():
    rep = VerificationReport("demo", (CheckRecord.build("only", True, "v", "v"),))
    assert rep.render_text() == "[PASS] demo: 1/1 checks passed"


# ------------------------------------------------------------------- suites


def test_conjugation_suite_full():
    rep = conjugation_suite()
    assert rep.suite == "conjugation_tables"
    assert rep.passed
    # 4 families x (4+6+8+10) rows, 8 two-qubit tables x 4, 2 gates x 6 rows
    assert rep.summary == {"total": 156, "passed": 156, "failed": 0}


def test_conjugation_suite_filters():
    assert conjugation_suite(family="CH_N").summary["total"] == 28
    assert conjugation_suite(family="CH_N", n=3).summary["total"] == 6
    assert conjugation_suite(family="Q").summary["total"] == 4
    assert conjugation_suite(family="TOFFOLI").summary["total"] == 6
    assert conjugation_suite(n=2).summary["total"] == 16


@pytest.mark.parametrize(
    "kwargs",
    [
        {"family": "NOPE"},
        {"n": 7},
        {"family": "Q", "n": 2},
        {"family": "FREDKIN", "n": 3},
    ],
)
def test_conjugation_suite_rejects(kwargs):
    with pytest.raises(ValueError):
        conjugation_suite(**kwargs)


def test_correction_suite():
    rep = correction_suite()
    assert rep.suite == "correction_tables"
    assert rep.passed
    assert rep.summary["total"] == 96  # bare + H-conjugated + T-conjugated grids
    assert correction_suite(bell="Q").summary["total"] == 24
    with pytest.raises(ValueError):
        correction_suite(bell="CNOT")


def test_teleport_suite():
    rep = teleport_suite()
    assert rep.passed
    assert rep.summary["total"] == 36  # nine transforms x four outcomes
    ids = {check.id for check in rep.checks}
    assert "CH/k0l0" in ids and "RT/k1l1" in ids


def test_two_gate_suite_single_pair():
    rep = two_gate_suite(bell="CH", cu="CNOT")
    assert rep.passed
    assert len(rep.checks) == 1
    assert rep.checks[0].actual == "256/256 products match"


def test_two_gate_suite_rejects_unknown():
    with pytest.raises(ValueError, match="choose from"):
        two_gate_suite(bell="SWAP")
    with pytest.raises(ValueError, match="choose from"):
        two_gate_suite(cu="TOFFOLI")


def test_two_gate_suite_column():
    rep = two_gate_suite(cu="Q_INV")
    assert rep.passed
    assert [check.id for check in rep.checks] == [
        "CH/Q_INV",
        "Q/Q_INV",
        "B/Q_INV",
        "R/Q_INV",
    ]


def test_entangle_suite():
    rep = entangle_suite()
    assert rep.passed
    assert rep.summary["total"] == 32
    by_id = {check.id: check for check in rep.checks}
    assert by_id["SWAP/entangling-power"].expected == "0.000000000"
    assert by_id["CH/nonlocal-params"].expected == "(0.785398163, 0.000000000, 0.000000000)"
    assert "R/nonlocal-params" in by_id and "BPRIME_INV/entangling-power" in by_id


def test_ybe_suite():
    rep = ybe_suite()
    assert rep.passed
    by_id = {check.id: check.actual for check in rep.checks}
    assert by_id["B"] == "braids"
    assert by_id["SWAP"] == "braids"
    assert by_id["CNOT"] == "does not braid"
    assert len(by_id) == 15


def test_identities_suite():
    rep = identities_suite()
    assert rep.passed
    assert rep.summary["total"] == 33
    single = identities_suite(name="b-as-exponential")
    assert single.summary["total"] == 1 and single.passed
    with pytest.raises(ValueError):
        identities_suite(name="missing")


def test_classification_suite():
    rep = classification_suite()
    assert rep.passed
    by_id = {check.id: check for check in rep.checks}
    assert by_id["B"].actual == "clifford=yes parity=yes matchgate=yes"
    assert by_id["CHT"].actual == "clifford=no parity=no matchgate=no"
    assert by_id["TOFFOLI"].actual == "clifford=no parity=n/a matchgate=n/a"
    assert by_id["B_N/n3"].actual == "clifford=yes parity=n/a matchgate=n/a"


def test_ghz_suite():
    rep = ghz_suite()
    assert rep.passed
    ids = {check.id for check in rep.checks}
    assert "stabilizers/n4/j16" in ids
    assert "relabeling/n3" in ids
    assert "factorization/BT" in ids
    assert "factorization/R_N/n2" in ids
    assert "factorization/CNOT" in ids  # must be rejected, not factored
    assert "multicopy/B_N/site3" in ids


# ---------------------------------------------------------------- aggregate


def test_all_suites_sorted_and_quick():
    reports = all_suites(full=False)
    names = [rep.suite for rep in reports]
    assert names == sorted(names)
    assert len(names) == 9
    two_gate = next(rep for rep in reports if rep.suite == "two_gate_corrections")
    assert len(two_gate.checks) == 4  # quick mode keeps one conjugated-gate column


def test_aggregate_schema_and_totals():
    payload = aggregate(full=False)
    assert set(payload) == {"suites", "summary"}
    total = sum(suite["summary"]["total"] for suite in payload["suites"])
    assert payload["summary"]["total"] == total
    assert payload["summary"]["failed"] == 0
    assert payload["summary"]["passed"] == total
    json.dumps(payload)  # everything must be serializable as-is
