"""Truncated exponential generating functions in Hurwitz normalization.

A series f is stored through c_n = n! [z^n] f for n = 0..N. Products become
binomial convolutions, so every integer counting sequence keeps integer
coefficients.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable

from .exact import binomial, gen_falling

DEFAULT_ORDER = 32

__all__ = [
    "DEFAULT_ORDER",
    "HurwitzSeries",
    "hz_mul",
    "hz_exp",
    "hz_deg_exp",
    "hz_coeff",
    "hz_bpa",
    "hz_pow",
    "hz_divide",
]


class HurwitzSeries:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int | Fraction]):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.coeffs: tuple[Fraction, ...] = coeffs

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def constant(cls, c: int | Fraction, order: int = DEFAULT_ORDER) -> HurwitzSeries:
        return cls([c] + [0] * order)

    @classmethod
    def exp_linear(cls, r: int | Fraction, order: int = DEFAULT_ORDER) -> HurwitzSeries:
        """e^{r z}: c_n = r^n."""
        r = Fraction(r)
        return cls([r**n for n in range(order + 1)])

    @classmethod
    def identity(cls, order: int = DEFAULT_ORDER) -> HurwitzSeries:
        """The series z itself."""
        return cls([0, 1] + [0] * (order - 1)) if order >= 1 else cls([0])

    def _check(self, other: HurwitzSeries) -> None:
        if self.order != other.order:
            raise ValueError(f"truncation order mismatch: {self.order} vs {other.order}")

    def __add__(self, other: HurwitzSeries) -> HurwitzSeries:
        self._check(other)
        return HurwitzSeries(a + b for a, b in zip(self.coeffs, other.coeffs))

    def __sub__(self, other: HurwitzSeries) -> HurwitzSeries:
        self._check(other)
        return HurwitzSeries(a - b for a, b in zip(self.coeffs, other.coeffs))

    def __neg__(self) -> HurwitzSeries:
        return HurwitzSeries(-a for a in self.coeffs)

    def scale(self, c: int | Fraction) -> HurwitzSeries:
        return HurwitzSeries(c * a for a in self.coeffs)

    def __mul__(self, other):
        if isinstance(other, HurwitzSeries):
            return hz_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, e: int) -> HurwitzSeries:
        return hz_pow(self, e)

    def __eq__(self, other) -> bool:
        if not isinstance(other, HurwitzSeries):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __getitem__(self, n: int) -> Fraction:
        return hz_coeff(self, n)

    def truncate(self, order: int) -> HurwitzSeries:
        if order > self.order:
            raise ValueError(f"cannot extend a series of order {self.order} to {order}")
        return HurwitzSeries(self.coeffs[: order + 1])

    def integers(self) -> list[int]:
        """Coefficients as ints; raises if any coefficient is fractional."""
        out = []
        for n, c in enumerate(self.coeffs):
            if c.denominator != 1:
                raise ValueError(f"coefficient c_{n} = {c} is not an integer")
            out.append(c.numerator)
        return out

    def __repr__(self) -> str:
        shown = ", ".join(str(c) for c in self.coeffs[:8])
        tail = ", ..." if self.order >= 8 else ""
        return f"HurwitzSeries([{shown}{tail}], order={self.order})"


def hz_coeff(a: HurwitzSeries, n: int) -> Fraction:
    if n < 0 or n > a.order:
        raise IndexError(f"coefficient {n} outside truncation order {a.order}")
    return a.coeffs[n]


def hz_mul(a: HurwitzSeries, b: HurwitzSeries) -> HurwitzSeries:
    a._check(b)
    ac, bc = a.coeffs, b.coeffs
    return HurwitzSeries(
        sum(binomial(n, k) * ac[k] * bc[n - k] for k in range(n + 1))
        for n in range(a.order + 1)
    )


def hz_pow(a: HurwitzSeries, e: int) -> HurwitzSeries:
    """a^e by binary powering; O(log e) multiplications."""
    if e < 0:
        raise ValueError("negative powers are not supported")
    out = HurwitzSeries.constant(1, a.order)
    base = a
    while e:
        if e & 1:
            out = hz_mul(out, base)
        e >>= 1
        if e:
            base = hz_mul(base, base)
    return out


def hz_exp(a: HurwitzSeries) -> HurwitzSeries:
    """exp(a) for a series with zero constant term.

    Uses f' = a' f, i.e. c_n = sum_{k=1}^{n} C(n-1, k-1) a_k c_{n-k}.
    """
    if a.coeffs[0] != 0:
        raise ValueError(f"exp needs a zero constant term, got {a.coeffs[0]}")
    ac = a.coeffs
    out: list[Fraction] = [Fraction(1)]
    for n in range(1, a.order + 1):
        out.append(sum(binomial(n - 1, k - 1) * ac[k] * out[n - k] for k in range(1, n + 1)))
    return HurwitzSeries(out)


def hz_deg_exp(alpha: int, r: int, order: int = DEFAULT_ORDER) -> HurwitzSeries:
    """Degenerate exponential (1 + alpha z)^{r/alpha}.

    Hurwitz coefficients are (r|alpha)_n; alpha = 0 gives the ordinary
    e^{r z}. Divisibility of r by alpha is not required.
    """
    if alpha < 0:
        raise ValueError(f"alpha must be non-negative, got {alpha}")
    return HurwitzSeries(gen_falling(r, alpha, n) for n in range(order + 1))


def hz_divide(num: HurwitzSeries, den: HurwitzSeries) -> HurwitzSeries:
    """Solve den * f = num coefficient by coefficient; den must be invertible."""
    num._check(den)
    d0 = den.coeffs[0]
    if d0 == 0:
        raise ZeroDivisionError("denominator series has zero constant term")
    dc = den.coeffs
    out: list[Fraction] = []
    for n in range(num.order + 1):
        acc = num.coeffs[n] - sum(binomial(n, k) * dc[k] * out[n - k] for k in range(1, n + 1))
        out.append(acc / d0)
    return HurwitzSeries(out)


def hz_bpa(l: int, order: int = DEFAULT_ORDER) -> HurwitzSeries:
    """1 / (2 - e^z)^{l+1}, the barred preferential arrangement EGF."""
    if l < 0:
        raise ValueError(f"number of bars must be non-negative, got {l}")
    base = HurwitzSeries.constant(2, order) - HurwitzSeries.exp_linear(1, order)
    return hz_divide(HurwitzSeries.constant(1, order), hz_pow(base, l + 1))
