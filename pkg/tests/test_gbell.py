from __future__ import annotations

import pytest
from hypothesis import given, settings, strategies as st

from dowling_kit.exact import BiPoly, gen_falling
from dowling_kit.gbell import (
    BELL_CATALOG,
    bell_egf,
    bell_egf_as_printed,
    bell_x,
    check_bell_identities,
    egf_adjudication,
    gbell_poly,
)
from dowling_kit.gstirling import GStirlingParams, gstirling_table
from dowling_kit.identities import Grid, contract_ok, describe
from dowling_kit.report import MISMATCH, PASS

grid_params = st.tuples(st.integers(0, 2), st.integers(1, 3), st.integers(0, 2))


def test_touchard_polynomials():
    assert str(gbell_poly(3, GStirlingParams(0, 1, 0))) == "x^3 + 3*x^2 + x"
    assert [gbell_poly(n, GStirlingParams(0, 1, 0))(1) for n in range(8)] == [1, 1, 2, 5, 15, 52, 203, 877]


@given(grid_params, st.integers(0, 12))
def test_coefficients_are_the_triangle(p, n):
    a, b, r = p
    tri = gstirling_table(GStirlingParams(a, b, r), n)
    assert bell_x(n, a, b, r) == BiPoly.from_x_coeffs(tri.row(n))


@given(grid_params, st.integers(0, 12))
def test_value_at_zero(p, n):
    a, b, r = p
    assert bell_x(n, a, b, r).eval(0, 0) == gen_falling(r, a, n)


@given(grid_params, st.integers(0, 4))
@settings(max_examples=30)
def test_egf_matches_polynomials(p, x0):
    a, b, r = p
    got = bell_egf(a, b, r, x0, 16).integers()
    assert got == [bell_x(n, a, b, r).eval(x0, 0) for n in range(17)]


def test_printed_egf_disagrees():
    # at r = 0, x = 1 the printed form agrees; r enters twice otherwise
    assert bell_egf_as_printed(0, 1, 0, 6).integers() == bell_egf(0, 1, 0, 1, 6).integers()
    assert bell_egf_as_printed(0, 1, 1, 6).integers() != bell_egf(0, 1, 1, 1, 6).integers()


def test_egf_adjudication():
    adj = egf_adjudication(8, Grid(m=(1, 2), r=(0, 1), alpha=(0, 1)))
    assert adj["printed_verdict"] == MISMATCH
    assert adj["adopted_verdict"] == PASS


@pytest.fixture(scope="module")
def report():
    return check_bell_identities(None, 8, Grid(m=(1, 2), r=(0, 1, 2), alpha=(0, 1, 2)))


@pytest.mark.parametrize("ident", ["B1", "B2", "B3", "B4", "B5", "B7"])
def test_identities_pass(report, ident):
    assert describe(BELL_CATALOG[ident], report)["verdict"] == PASS


def test_b6_flagged_with_passing_correction(report):
    d = describe(BELL_CATALOG["B6"], report)
    assert d["flagged"] and d["verdict"] == MISMATCH
    assert d["verifying_bindings"] == []
    assert d["corrected"]["verdict"] == PASS


def test_b7_binding_recorded(report):
    d = describe(BELL_CATALOG["B7"], report)
    assert d["frozen_binding"] in d["verifying_bindings"]


def test_contract(report):
    assert contract_ok(BELL_CATALOG, report)


def test_empty_grid_gives_empty_report():
    assert check_bell_identities(None, 6, Grid(m=(), r=(0,), alpha=(0,))).identities() == []
