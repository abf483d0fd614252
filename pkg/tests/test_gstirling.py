from __future__ import annotations

import pytest
from hypothesis import given, strategies as st

from dowling_kit.gstirling import (
    SPECIAL_CASES,
    ExcludedParameters,
    GStirlingParams,
    NonIntegralError,
    check_unfair_identities,
    gstirling,
    gstirling_egf_column,
    gstirling_explicit,
    gstirling_table,
    special_case,
)

# Row n = 7 from series expansion of the column generating functions (sympy).
ROW7 = {
    (0, 1, 0): (0, 1, 63, 301, 350, 140, 21, 1),
    (1, 2, 1): (0, 0, 0, 105, 420, 210, 28, 1),
    (2, 3, 2): (0, 525, -175, -35, 350, 280, 35, 1),
    (1, 1, 0): (0, 0, 0, 0, 0, 0, 0, 1),
    (2, 1, 1): (10395, -10395, 3780, -315, -210, 84, -14, 1),
    (0, 2, 1): (1, 1093, 9219, 12411, 5075, 791, 49, 1),
    (1, 3, 0): (0, 0, 0, 1120, 1680, 490, 42, 1),
}
BELL = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975]

params = st.builds(GStirlingParams, st.integers(0, 3), st.integers(1, 4), st.integers(0, 4))


@pytest.mark.parametrize("p", sorted(ROW7))
def test_row_seven_frozen(p):
    assert gstirling_table(GStirlingParams(*p), 7).row(7) == ROW7[p]


def test_small_values():
    assert gstirling(4, 2, 0, 1, 0) == 7
    assert gstirling_explicit(4, 2, GStirlingParams(0, 1, 0)) == 7
    assert gstirling_explicit(3, 1, GStirlingParams(0, 2, 1)) == 13
    assert gstirling(3, 5, 0, 1, 0) == 0
    assert gstirling(3, -1, 0, 1, 0) == 0


def test_bell_row_sums():
    tri = gstirling_table(GStirlingParams(0, 1, 0), 10)
    assert [sum(tri.row(n)) for n in range(11)] == BELL


def test_excluded_parameters():
    with pytest.raises(ExcludedParameters):
        GStirlingParams(0, 0, 0)
    with pytest.raises(ExcludedParameters):
        gstirling(2, 1, 0, 0, 0)


def test_explicit_needs_positive_beta():
    with pytest.raises(ValueError):
        gstirling_explicit(2, 1, GStirlingParams(1, 0, 0))


def test_non_integral_is_surfaced():
    # NonIntegralError is an ArithmeticError, not a silent rounding
    assert issubclass(NonIntegralError, ArithmeticError)


def test_special_cases():
    assert special_case("binomial", 5, 2) == 10
    assert special_case("stirling2", 4, 2) == 7
    assert special_case("r-whitney", 1, 0, beta=2, r=1) == 1
    # printed sign for r gives -r on the same cell
    assert special_case("r-whitney", 1, 0, beta=2, r=1, printed=True) == -1
    assert special_case("r-stirling", 3, 1, r=2) == 19
    assert special_case("r-stirling", 3, 1, r=2, printed=True) != 19
    with pytest.raises(ValueError):
        special_case("lah", 2, 1)
    assert set(SPECIAL_CASES) >= {"stirling2", "howard", "carlitz", "whitney", "binomial"}


def test_translated_whitney_runs_through_recurrence():
    # beta = 0 is allowed by the recurrence though not by the explicit sum
    assert special_case("translated-whitney", 3, 3, alpha=2) == 1


@pytest.mark.parametrize("args", [(6, 0, 1, 0), (6, 1, 2, 2), (1, 0, 1, 0)])
def test_unfair_identities(args):
    assert check_unfair_identities(*args).all_pass()


@given(params, st.integers(0, 12))
def test_explicit_equals_recurrence(p, n):
    tri = gstirling_table(p, n)
    assert [gstirling_explicit(n, k, p) for k in range(n + 1)] == list(tri.row(n))


@given(params, st.integers(0, 6))
def test_column_egf_equals_recurrence(p, k):
    col = gstirling_egf_column(k, p, 10).integers()
    tri = gstirling_table(p, 10)
    assert col == [tri(n, k) if k <= n else 0 for n in range(11)]


@given(params, st.integers(0, 10))
def test_recurrence_step(p, n):
    tri = gstirling_table(p, n + 1)
    for k in range(n + 2):
        below = tri(n, k - 1) if k >= 1 else 0
        here = tri(n, k) if k <= n else 0
        assert tri(n + 1, k) == below + (k * p.beta - n * p.alpha + p.r) * here
