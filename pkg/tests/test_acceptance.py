"""One test per acceptance criterion; each records a PASS/FAIL line in the summary."""

import time

import pytest

from efdepth.suite import (
    MUTATION_LITERAL, _Artifacts, check_battery, check_bound_table, check_enumeration, check_extended,
    check_thm1_1, check_thm1_2, check_thm2, check_thm3,
)


@pytest.fixture
def art(tmp_path):
    return _Artifacts(tmp_path)


def _run(report_line, criterion, fn, *args, **kw):
    t0 = time.perf_counter()
    passed, detail, files = fn(*args, **kw)
    report_line(criterion, passed, f"({time.perf_counter() - t0:.2f}s) {detail}")
    return passed, detail, files


def test_criterion_1_p3_plus_isolated_lower_bounds(art, report_line):
    passed, detail, files = _run(report_line, 1, check_thm1_2, art)
    assert passed, detail
    assert len(files) == 2


def test_criterion_2_almost_multipartite_lower_bounds(art, report_line):
    passed, detail, _ = _run(report_line, 2, check_thm2, art)
    assert passed, detail


def test_criterion_3_five_vertex_lower_bounds(art, report_line):
    passed, detail, files = _run(report_line, 3, check_thm3, art)
    assert passed, detail
    assert len(files) == 4


def test_criterion_4_upper_bounds(art, report_line):
    passed, detail, _ = _run(report_line, 4, check_thm1_1, art)
    assert passed, detail


def test_criterion_5_bound_table(art, report_line):
    passed, detail, _ = _run(report_line, 5, check_bound_table, art)
    assert passed, detail


def test_criterion_6_enumeration_counts(art, report_line):
    passed, detail, _ = _run(report_line, 6, check_enumeration, art)
    assert passed, detail


def test_criterion_7_consistency_battery(art, report_line):
    passed, detail, _ = _run(report_line, 7, check_battery, art, seed=2024, pairs=100)
    assert passed, detail


def test_criterion_8_mutation_sensitivity(art, report_line):
    t0 = time.perf_counter()
    sabotaged, detail, files = check_thm1_1(art, drop=MUTATION_LITERAL)
    caught = not sabotaged and "counterexample" in detail and bool(files)
    report_line(8, caught, f"({time.perf_counter() - t0:.2f}s) sabotaged upper-bound row -> {detail}")
    assert caught, detail


@pytest.mark.slow
def test_criterion_9_extended(art, report_line):
    passed, detail, _ = _run(report_line, 9, check_extended, art)
    assert passed, detail
