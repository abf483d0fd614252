from __future__ import annotations

import math

import pytest
from hypothesis import given, settings, strategies as st

from dowling_kit.exact import (
    L,
    ONE,
    X,
    ZERO,
    BiPoly,
    binomial,
    compositions,
    gen_binomial,
    gen_falling,
    multinomial,
)

small = st.integers(-6, 6)
terms = st.dictionaries(st.tuples(st.integers(0, 4), st.integers(0, 4)), st.integers(-9, 9), max_size=6)
polys = terms.map(BiPoly)


def test_binomial_edges():
    assert binomial(5, 2) == 10
    assert binomial(5, -1) == binomial(5, 6) == 0
    with pytest.raises(ValueError):
        binomial(-1, 0)


def test_gen_binomial_negative_top():
    # C(-1, k) = (-1)^k
    assert [gen_binomial(-1, k) for k in range(5)] == [1, -1, 1, -1, 1]
    assert gen_binomial(-3, 2) == 6
    assert gen_binomial(4, -1) == 0


def test_multinomial():
    assert multinomial(4, [2, 1, 1]) == 12
    with pytest.raises(ValueError):
        multinomial(4, [2, 1])


def test_gen_falling_values():
    assert gen_falling(5, 1, 3) == 60
    assert gen_falling(5, 0, 3) == 125
    assert gen_falling(7, 2, 3) == 7 * 5 * 3
    assert gen_falling(9, 3, 0) == 1


def test_compositions_count():
    # C(n + p - 1, p - 1) weak compositions
    for n in range(6):
        for p in range(1, 5):
            got = list(compositions(n, p))
            assert len(got) == math.comb(n + p - 1, p - 1)
            assert all(sum(c) == n for c in got)
    assert list(compositions(0, 0)) == [()]
    assert list(compositions(2, 0)) == []


def test_bipoly_rendering():
    assert str(ZERO) == "0"
    assert str(X * L + 3) == "x*l + 3"
    assert str(BiPoly({(2, 2): 3, (0, 0): -1, (1, 0): -2})) == "3*x^2*l^2 - 2*x - 1"
    assert str(-X) == "-x"


def test_bipoly_rejects_negative_exponent():
    with pytest.raises(ValueError):
        BiPoly({(-1, 0): 1})


def test_subs():
    p = X**2 * L + X
    assert p.subs_l(3) == 3 * X**2 + X
    assert p.subs_x(X * L) == X**2 * L**3 + X * L


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + ZERO == a and a * ONE == a
    assert a - a == ZERO


@given(polys, polys, small, small)
def test_eval_is_ring_homomorphism(a, b, x0, l0):
    assert (a + b).eval(x0, l0) == a.eval(x0, l0) + b.eval(x0, l0)
    assert (a * b).eval(x0, l0) == a.eval(x0, l0) * b.eval(x0, l0)


@given(polys, st.integers(0, 4), small, small)
@settings(max_examples=50)
def test_pow_matches_eval(a, e, x0, l0):
    assert (a**e).eval(x0, l0) == a.eval(x0, l0) ** e


@given(st.integers(0, 40), st.integers(0, 40))
def test_pascal(n, k):
    assert binomial(n + 1, k + 1) == binomial(n, k) + binomial(n, k + 1)


@given(st.integers(-20, 20), st.integers(-3, 3), st.integers(0, 10))
def test_gen_falling_recurrence(m, alpha, k):
    assert gen_falling(m, alpha, k + 1) == gen_falling(m, alpha, k) * (m - k * alpha)


@given(st.integers(-15, 15), st.integers(0, 8))
def test_gen_binomial_is_falling_over_factorial(a, k):
    assert gen_binomial(a, k) * math.factorial(k) == gen_falling(a, 1, k)
