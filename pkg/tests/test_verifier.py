"""Tests for the oracle-vs-brute verification suites."""

import json

import pytest

from hallpi.arith import PrimeSet
from hallpi.lie_catalog import parse_group_id
from hallpi.verifier import (
    cross_check_simple,
    default_grid,
    exclusivity_scan,
    main_theorem_check,
    perm_realization,
    run_suite,
    scan_groups,
    star_consistency_check,
)


def test_default_grid_is_pinned():
    grid = default_grid()
    assert len(grid) == 29
    assert all(2 not in pi for _, pi in grid)
    specs = {g.spec() for g, _ in grid}
    assert "A:2:q=7" in specs and "A:2:q=13" in specs


def test_perm_realization_routing():
    assert perm_realization(parse_group_id("A:2:q=7")) == "psl2:7"
    assert perm_realization(parse_group_id("B:3:q=3")) is None


def test_cross_check_agrees_on_default_grid():
    report = cross_check_simple(default_grid())
    assert report.ok
    assert len(report.cases) == 29
    assert report.disagreements == 0


def test_cross_check_routes_out_of_scope_and_skips():
    grid = [
        (parse_group_id("A:2:q=7"), PrimeSet([2, 3])),
        (parse_group_id("B:3:q=3"), PrimeSet([5, 7])),
        (parse_group_id("A:2:q=11"), PrimeSet([3, 5])),
    ]
    report = cross_check_simple(grid)
    assert len(report.out_of_scope) == 1
    assert len(report.skipped) == 1
    assert "no permutation construction" in report.skipped[0]["reason"]
    case = report.cases[0]
    assert case["group"] == "A:2:q=11"
    assert case["oracle"]["dpi"] == "no" and case["brute"]["dpi"] is False
    assert case["agree"]


def test_main_theorem_check_default_grid():
    report = main_theorem_check(default_grid())
    assert report.ok and len(report.cases) == 29


def test_star_consistency_excludes_p_in_pi():
    report = star_consistency_check(default_grid())
    assert report.ok
    # every case with the defining characteristic in pi is routed out
    oos = {(c["group"], tuple(c["pi"])) for c in report.out_of_scope}
    assert ("A:2:q=7", (3, 7)) in oos
    assert ("A:2:q=13", (3, 7)) not in oos


def test_exclusivity_scan_is_clean():
    report = exclusivity_scan()
    assert report.ok
    assert "0 violations" in report.cases[-1]["detail"]


def test_scan_groups_bounds():
    groups = scan_groups()
    assert all(g.q <= 32 for g in groups)
    assert all(g.n is None or g.n <= 6 for g in groups)
    specs = {g.spec() for g in groups}
    assert "2F4:q=2" not in specs  # Tits group stays excluded
    assert "2B2:q=2^3" in specs


def test_reports_are_deterministic():
    grid = default_grid()[:6]
    a = cross_check_simple(grid)
    b = cross_check_simple(grid)
    ja = json.loads(a.to_json())
    jb = json.loads(b.to_json())
    for case in ja["cases"] + jb["cases"]:
        case.pop("runtime")
    assert ja == jb


def test_run_suite_all():
    reports = run_suite("all", default_grid()[:3])
    assert [r.suite for r in reports] == ["cross", "main-theorem", "star", "exclusivity"]
    assert all(r.ok for r in reports)


def test_run_suite_unknown_name():
    with pytest.raises(ValueError):
        run_suite("bogus")
