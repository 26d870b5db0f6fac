"""Acceptance gate: every criterion suite runs on its frozen grid at its
stated tolerance and reports one line per check.

Run with ``pytest tests/test_acceptance.py -v -s`` to see the lines as the
suites execute; any failed check fails its criterion's test.
"""

import pytest

from mehlerfock.suites import run_suite


def _run(name):
    records = run_suite(name)
    assert records, f"suite {name} produced no checks"
    for r in records:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status} {r.suite}/{r.name}: value={r.value:.3e} "
              f"tol={r.tol:.3e}{'  ' + r.detail if r.detail else ''}")
    bad = [r for r in records if not r.passed]
    assert not bad, "failed checks: " + "; ".join(
        f"{r.suite}/{r.name} value={r.value:.3e} tol={r.tol:.3e}" for r in bad)


class TestCriterion01Identities:
    def test_connection_identities(self):
        _run("identities")

    def test_exchange_relations(self):
        _run("whipple")


class TestCriterion02Representations:
    def test_series_vs_integral_paths(self):
        _run("representations")


class TestCriterion03Transforms:
    def test_catalog_equalities(self):
        _run("transforms")


class TestCriterion04AdditionFormula:
    def test_three_way_agreement(self):
        _run("addition-formula")


class TestCriterion05Asymptotics:
    def test_doubling_ladders(self):
        _run("asymptotics")


class TestCriterion06Bounds:
    def test_pointwise_domination(self):
        _run("bounds")


class TestCriterion07PlaneConsistency:
    def test_green_function_routes(self):
        _run("green-plane-consistency")

    def test_heat_kernel_routes(self):
        _run("heat-consistency")


class TestCriterion08Wedge:
    def test_boundary_and_interior(self):
        _run("wedge-boundary")


class TestCriterion09Reflection:
    def test_straight_angle_oracles(self):
        _run("wedge-reflection")


class TestCriterion10Laplace:
    def test_inversion_and_roundtrip(self):
        _run("laplace-roundtrip")
