"""Exact arithmetic substrate: combinatorial primitives and bivariate polynomials.

Integers are Python ints and rationals are :class:`fractions.Fraction`, both
unbounded and exact. :class:`BiPoly` is a sparse polynomial in ``x`` and
``l`` (the order parameter lambda) with integer coefficients.
"""
from __future__ import annotations

import math
from typing import Iterable, Iterator, Mapping

__all__ = [
    "binomial",
    "gen_binomial",
    "multinomial",
    "gen_falling",
    "compositions",
    "BiPoly",
    "X",
    "L",
    "ONE",
    "ZERO",
]


def binomial(n: int, k: int) -> int:
    """C(n, k) for n >= 0; zero outside 0 <= k <= n."""
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def gen_binomial(a: int, k: int) -> int:
    """Binomial coefficient with an arbitrary integer upper index.

    C(a, k) = a(a-1)...(a-k+1)/k! for k >= 0, zero for k < 0. Needed to
    evaluate sums such as C(l+k-1, k) at l = 0, k = 0, where the upper index
    is negative.
    """
    if k < 0:
        return 0
    if a >= 0:
        return binomial(a, k)
    num = 1
    for i in range(k):
        num *= a - i
    return num // math.factorial(k)


def multinomial(n: int, parts: Iterable[int]) -> int:
    parts = list(parts)
    if any(p < 0 for p in parts):
        raise ValueError(f"multinomial parts must be non-negative: {parts}")
    if sum(parts) != n:
        raise ValueError(f"multinomial parts {parts} do not sum to {n}")
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


def gen_falling(m: int, alpha: int, k: int) -> int:
    """Generalized falling factorial (m|alpha)_k = prod_{i<k} (m - i*alpha)."""
    if k < 0:
        raise ValueError(f"gen_falling requires k >= 0, got {k}")
    out = 1
    for i in range(k):
        out *= m - i * alpha
    return out


def compositions(n: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of n into exactly ``parts`` non-negative parts."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in compositions(n - first, parts - 1):
            yield (first, *rest)


class BiPoly:
    """Sparse polynomial in x and l with integer coefficients.

    Terms are stored as ``{(x_degree, l_degree): coefficient}`` with no zero
    coefficients. Instances are treated as immutable.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[tuple[int, int], int] | None = None):
        clean: dict[tuple[int, int], int] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"negative exponent in term {(i, j)}")
            if c:
                clean[(i, j)] = c
        self._terms = clean

    @classmethod
    def const(cls, c: int) -> BiPoly:
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int, i: int, j: int) -> BiPoly:
        return cls({(i, j): c})

    @classmethod
    def from_x_coeffs(cls, coeffs: Iterable[int], *, diagonal: bool = False) -> BiPoly:
        """Build sum_k c_k x^k, or sum_k c_k (x l)^k when ``diagonal``."""
        return cls({(k, k if diagonal else 0): c for k, c in enumerate(coeffs)})

    @property
    def terms(self) -> dict[tuple[int, int], int]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def degree(self) -> int:
        return max((i + j for i, j in self._terms), default=-1)

    def coeff(self, i: int, j: int) -> int:
        return self._terms.get((i, j), 0)

    def _coerce(self, other) -> BiPoly:
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly.const(other)
        return NotImplemented

    def __add__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for key, c in other._terms.items():
            out[key] = out.get(key, 0) + c
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self) -> BiPoly:
        return BiPoly({key: -c for key, c in self._terms.items()})

    def __sub__(self, other) -> BiPoly:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> BiPoly:
        return (-self) + other

    def __mul__(self, other) -> BiPoly:
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + c1 * c2
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> BiPoly:
        if e < 0:
            raise ValueError("negative power of a polynomial")
        out = BiPoly.const(1)
        base = self
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def scale(self, c: int) -> BiPoly:
        return BiPoly({key: c * v for key, v in self._terms.items()})

    def eval(self, x0: int, l0: int) -> int:
        return sum(c * x0**i * l0**j for (i, j), c in self._terms.items())

    def subs_l(self, l0: int) -> BiPoly:
        """Specialize l to an integer, leaving a polynomial in x alone."""
        out: dict[tuple[int, int], int] = {}
        for (i, j), c in self._terms.items():
            out[(i, 0)] = out.get((i, 0), 0) + c * l0**j
        return BiPoly(out)

    def subs_x(self, x_poly: BiPoly) -> BiPoly:
        """Substitute a polynomial for x (e.g. x -> x*l)."""
        out = BiPoly()
        powers: dict[int, BiPoly] = {}
        for (i, j), c in self._terms.items():
            if i not in powers:
                powers[i] = x_poly**i
            out = out + powers[i] * BiPoly.monomial(c, 0, j)
        return out

    def is_diagonal(self) -> bool:
        return all(i == j for i, j in self._terms)

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        pieces = []
        for (i, j) in sorted(self._terms, reverse=True):
            c = self._terms[(i, j)]
            factors = []
            if i:
                factors.append("x" if i == 1 else f"x^{i}")
            if j:
                factors.append("l" if j == 1 else f"l^{j}")
            mono = "*".join(factors)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        text = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            text += f" {sign} {body}"
        return text

    def __repr__(self) -> str:
        return f"BiPoly({self})"


ZERO = BiPoly()
ONE = BiPoly.const(1)
X = BiPoly.monomial(1, 1, 0)
L = BiPoly.monomial(1, 0, 1)
