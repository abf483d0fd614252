from __future__ import annotations

import math
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from dowling_kit.exact import gen_falling
from dowling_kit.hurwitz import (
    HurwitzSeries,
    hz_bpa,
    hz_deg_exp,
    hz_divide,
    hz_exp,
    hz_mul,
    hz_pow,
)

ORDER = 10
coeff = st.integers(-5, 5)
series = st.lists(coeff, min_size=ORDER + 1, max_size=ORDER + 1).map(HurwitzSeries)
nilpotent = st.lists(coeff, min_size=ORDER, max_size=ORDER).map(lambda cs: HurwitzSeries([0] + cs))


def test_exp_of_z_is_all_ones():
    assert hz_exp(HurwitzSeries.identity(ORDER)).integers() == [1] * (ORDER + 1)


def test_exp_needs_zero_constant():
    with pytest.raises(ValueError):
        hz_exp(HurwitzSeries.constant(1, 4))


def test_mul_is_binomial_convolution():
    # e^{2z} e^{3z} = e^{5z}
    a, b = HurwitzSeries.exp_linear(2, ORDER), HurwitzSeries.exp_linear(3, ORDER)
    assert hz_mul(a, b) == HurwitzSeries.exp_linear(5, ORDER)


def test_order_mismatch():
    with pytest.raises(ValueError):
        HurwitzSeries.constant(1, 3) + HurwitzSeries.constant(1, 4)


def test_deg_exp_coefficients():
    assert hz_deg_exp(2, 5, 4).integers() == [gen_falling(5, 2, n) for n in range(5)]
    assert hz_deg_exp(0, 3, 4) == HurwitzSeries.exp_linear(3, 4)


def test_bpa_values():
    # ordered set partitions (Fubini numbers)
    assert hz_bpa(0, 6).integers() == [1, 1, 3, 13, 75, 541, 4683]
    assert hz_bpa(1, 5).integers() == [1, 2, 8, 44, 308, 2612]
    assert hz_bpa(2, 6).integers() == [1, 3, 15, 99, 807, 7803, 87135]


def test_divide_by_zero_constant():
    with pytest.raises(ZeroDivisionError):
        hz_divide(HurwitzSeries.constant(1, 3), HurwitzSeries.identity(3))


def test_integers_rejects_fractions():
    with pytest.raises(ValueError):
        HurwitzSeries([Fraction(1, 2)]).integers()


@given(nilpotent, nilpotent)
@settings(max_examples=40)
def test_exp_additive(a, b):
    assert hz_exp(a + b) == hz_mul(hz_exp(a), hz_exp(b))


@given(st.integers(0, 3), st.integers(-4, 4), st.integers(-4, 4))
def test_deg_exp_multiplicative(alpha, r, s):
    assert hz_mul(hz_deg_exp(alpha, r, ORDER), hz_deg_exp(alpha, s, ORDER)) == hz_deg_exp(alpha, r + s, ORDER)


@given(st.integers(0, 4))
def test_bpa_inverse(l):
    base = HurwitzSeries.constant(2, ORDER) - HurwitzSeries.exp_linear(1, ORDER)
    assert hz_mul(hz_pow(base, l + 1), hz_bpa(l, ORDER)) == HurwitzSeries.constant(1, ORDER)


@given(series, st.integers(0, 6))
@settings(max_examples=40)
def test_binary_power_matches_repeated_product(a, e):
    want = HurwitzSeries.constant(1, ORDER)
    for _ in range(e):
        want = hz_mul(want, a)
    assert hz_pow(a, e) == want


@given(series, series)
@settings(max_examples=40)
def test_divide_inverts_multiply(a, b):
    if b.coeffs[0] == 0:
        b = b + HurwitzSeries.constant(1, ORDER)
    assert hz_divide(hz_mul(a, b), b) == a


def test_coefficient_convention():
    # c_n = n! [z^n] f
    s = HurwitzSeries.exp_linear(1, 5)
    assert [c / math.factorial(n) for n, c in enumerate(s.coeffs)] == [
        Fraction(1, math.factorial(n)) for n in range(6)
    ]
