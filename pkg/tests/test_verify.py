"""Tests for the verification harness itself.

The harness is only trustworthy if it actually fails when a formula is
wrong, so half of these tests inject faults by rebinding names on the
counting module and assert that the report goes red with a replayable
counterexample.
"""

import re

import pytest

from boxpaths import counting
from boxpaths.verify import (
    SUITES,
    CheckRecord,
    VerificationReport,
    run_suite,
)

LINE_SHAPE = re.compile(
    r"^(PASS|FAIL) (formulas|bijections|series)/[a-z0-9-]+ \[.*\] \d+ cases$"
)


def test_full_suite_passes():
    report = run_suite("all", max_k=1, max_n=3)
    assert report.ok
    assert len(report.checks) == 36
    assert {c.suite for c in report.checks} == set(SUITES)


def test_records_are_ordered_by_suite_then_name():
    report = run_suite("all", max_k=1, max_n=3)
    keys = [(SUITES.index(c.suite), c.name) for c in report.checks]
    assert keys == sorted(keys)


def test_lines_format():
    report = run_suite("formulas", max_k=1, max_n=3)
    lines = report.lines()
    assert lines[-1] == f"{len(report.checks)}/{len(report.checks)} checks passed"
    for line in lines[:-1]:
        assert LINE_SHAPE.match(line), line


def test_suite_filter():
    report = run_suite("bijections", max_k=1, max_n=3)
    assert report.suite == "bijections"
    assert all(c.suite == "bijections" for c in report.checks)
    assert report.ok


def test_run_suite_rejects_bad_arguments():
    with pytest.raises(ValueError):
        run_suite("nope")
    with pytest.raises(ValueError):
        run_suite("all", max_k=-1)
    with pytest.raises(ValueError):
        run_suite("all", max_n=0)


def test_injected_returns_fault_is_caught(monkeypatch):
    true_fn = counting.count_box_by_returns

    def skewed(k, n, j):
        return true_fn(k, n, j) + (1 if (k, n, j) == (1, 3, 2) else 0)

    monkeypatch.setattr(counting, "count_box_by_returns", skewed)
    report = run_suite("formulas", max_k=1, max_n=3)
    assert not report.ok
    bad = [c for c in report.checks if not c.passed]
    assert bad
    assert any("replay: boxpaths" in f for c in bad for f in c.failures)
    good = sum(c.passed for c in report.checks)
    assert report.lines()[-1] == f"{good}/{len(report.checks)} checks passed"
    assert good < len(report.checks)


def test_injected_tailed_fault_is_caught(monkeypatch):
    true_fn = counting.count_tailed

    def shifted(k, n):
        return true_fn(k, n) + 1

    monkeypatch.setattr(counting, "count_tailed", shifted)
    report = run_suite("formulas", max_k=1, max_n=3)
    assert not report.ok
    assert any(not c.passed and c.name == "tailed-counts" for c in report.checks)


def test_injected_count_fault_reaches_bijection_suite(monkeypatch):
    true_fn = counting.count_box

    def shifted(k, n):
        return true_fn(k, n) + (1 if (k, n) == (1, 3) else 0)

    monkeypatch.setattr(counting, "count_box", shifted)
    report = run_suite("bijections", max_k=1, max_n=3)
    assert not report.ok
    assert any(not c.passed and c.name == "box-generator" for c in report.checks)


def test_check_record_passed():
    rec = CheckRecord("x", "formulas", "k <= 1", 3, ())
    assert rec.passed
    rec = CheckRecord("x", "formulas", "k <= 1", 3, ("boom",))
    assert not rec.passed


def test_lines_truncate_long_failure_lists():
    failures = tuple(f"case {i}" for i in range(7))
    rec = CheckRecord("x", "formulas", "k <= 1", 7, failures)
    report = VerificationReport("formulas", 1, 3, (rec,))
    lines = report.lines()
    assert lines[0].startswith("FAIL formulas/x")
    assert lines[1:6] == [f"  case {i}" for i in range(5)]
    assert lines[6] == "  ... and 2 more failures"
    assert lines[-1] == "0/1 checks passed"
