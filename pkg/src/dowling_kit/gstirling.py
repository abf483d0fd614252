"""Generalized Stirling numbers S(n, k; alpha, beta, r).

Two independent routes are provided: the triangular recurrence

    S(n+1, k) = S(n, k-1) + (k*beta - n*alpha + r) S(n, k),   S(0, 0) = 1,

the explicit alternating sum

    S(n, k) = 1/(beta^k k!) * sum_j C(k, j) (-1)^(k-j) (beta*j + r | alpha)_n,

and, as a third cross-check, the column generating function

    sum_n S(n, k) z^n/n! = e_alpha^r(z) ((e_alpha^beta(z) - 1)/beta)^k / k!.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exact import BiPoly, binomial, gen_falling
from .hurwitz import HurwitzSeries, hz_deg_exp, hz_mul, hz_pow
from .report import IdentityReport, compare


class NonIntegralError(ArithmeticError):
    """An exact formula that must yield an integer produced a fraction."""


class ExcludedParameters(ValueError):
    """(alpha, beta, r) = (0, 0, 0), which the family excludes."""


@dataclass(frozen=True)
class GStirlingParams:
    alpha: int
    beta: int
    r: int

    def __post_init__(self):
        if (self.alpha, self.beta, self.r) == (0, 0, 0):
            raise ExcludedParameters("(alpha, beta, r) = (0, 0, 0) is excluded")

    def as_dict(self) -> dict[str, int]:
        return {"alpha": self.alpha, "beta": self.beta, "r": self.r}


@lru_cache(maxsize=None)
def _rows(alpha: int, beta: int, r: int, n_max: int) -> tuple[tuple[int, ...], ...]:
    rows = [(1,)]
    for n in range(n_max):
        prev = rows[-1]
        row = []
        for k in range(n + 2):
            left = prev[k - 1] if k >= 1 else 0
            here = prev[k] if k <= n else 0
            row.append(left + (k * beta - n * alpha + r) * here)
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class GStirlingTriangle:
    params: GStirlingParams
    n_max: int
    rows: tuple[tuple[int, ...], ...]

    def __call__(self, n: int, k: int) -> int:
        if n < 0 or n > self.n_max:
            raise IndexError(f"row {n} outside 0..{self.n_max}")
        if k < 0 or k > n:
            return 0
        return self.rows[n][k]

    def row(self, n: int) -> tuple[int, ...]:
        return self.rows[n]


def gstirling_table(params: GStirlingParams, n_max: int) -> GStirlingTriangle:
    if n_max < 0:
        raise ValueError(f"n_max must be non-negative, got {n_max}")
    return GStirlingTriangle(params, n_max, _rows(params.alpha, params.beta, params.r, n_max))


def gstirling(n: int, k: int, alpha: int, beta: int, r: int) -> int:
    """Single value through the (cached) recurrence."""
    if (alpha, beta, r) == (0, 0, 0):
        raise ExcludedParameters("(alpha, beta, r) = (0, 0, 0) is excluded")
    if k < 0 or k > n:
        return 0
    return _rows(alpha, beta, r, n)[n][k]


def gstirling_explicit(n: int, k: int, params: GStirlingParams) -> int:
    if params.beta < 1:
        raise ValueError("the explicit formula divides by beta^k and needs beta >= 1")
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    beta, r, alpha = params.beta, params.r, params.alpha
    total = sum(
        binomial(k, j) * (-1) ** (k - j) * gen_falling(beta * j + r, alpha, n)
        for j in range(k + 1)
    )
    value = Fraction(total, beta**k * math.factorial(k))
    if value.denominator != 1:
        raise NonIntegralError(f"S({n},{k};{alpha},{beta},{r}) evaluated to {value}")
    return value.numerator


def gstirling_egf_column(k: int, params: GStirlingParams, order: int) -> HurwitzSeries:
    """Hurwitz series whose c_n is S(n, k; alpha, beta, r), n <= order."""
    if params.beta < 1:
        raise ValueError("the column generating function divides by beta and needs beta >= 1")
    if k < 0:
        raise ValueError(f"k must be non-negative, got {k}")
    inner = hz_deg_exp(params.alpha, params.beta, order) - HurwitzSeries.constant(1, order)
    col = hz_mul(hz_deg_exp(params.alpha, params.r, order), hz_pow(inner, k))
    return col.scale(Fraction(1, params.beta**k * math.factorial(k)))


# kind -> (substitution printed in the special-case table, substitution used).
# The two differ only where a combinatorial oracle contradicts the table's sign.
SPECIAL_CASES: dict[str, tuple[tuple[str, str, str], tuple[str, str, str]]] = {
    "stirling2": (("0", "1", "0"), ("0", "1", "0")),
    "translated-whitney": (("-alpha", "0", "0"), ("-alpha", "0", "0")),
    "howard": (("alpha", "1", "-r"), ("alpha", "1", "-r")),
    "carlitz": (("alpha", "1", "0"), ("alpha", "1", "0")),
    "r-stirling": (("0", "-1", "r"), ("0", "1", "r")),
    "whitney": (("0", "beta", "1"), ("0", "beta", "1")),
    "r-whitney": (("0", "beta", "-r"), ("0", "beta", "r")),
    "binomial": (("0", "0", "1"), ("0", "0", "1")),
}


def _resolve(expr: str, env: dict[str, int]) -> int:
    if expr.startswith("-"):
        return -_resolve(expr[1:], env)
    if expr.isdigit():
        return int(expr)
    return env[expr]


def special_case_params(
    kind: str, *, alpha: int = 0, beta: int = 1, r: int = 0, printed: bool = False
) -> GStirlingParams:
    try:
        table, used = SPECIAL_CASES[kind]
    except KeyError:
        raise ValueError(f"unsupported special case {kind!r}; choose from {sorted(SPECIAL_CASES)}")
    env = {"alpha": alpha, "beta": beta, "r": r}
    a, b, c = (_resolve(e, env) for e in (table if printed else used))
    return GStirlingParams(a, b, c)


def special_case(
    kind: str, n: int, k: int, *, alpha: int = 0, beta: int = 1, r: int = 0, printed: bool = False
) -> int:
    """Route a named family through the recurrence.

    ``printed=True`` applies the substitution exactly as listed in the
    special-case table, including its sign conventions for the r-Stirling and
    r-Whitney rows, so the two readings can be compared.
    """
    p = special_case_params(kind, alpha=alpha, beta=beta, r=r, printed=printed)
    return gstirling(n, k, p.alpha, p.beta, p.r)


def check_unfair_identities(n_max: int, alpha: int, m: int, r: int) -> IdentityReport:
    """Check both unfair-distribution identities for 0 <= k <= n <= n_max.

    UnfairD:  S(n+1,k) = S(n,k-1) + (k m - n alpha + r) S(n,k), with the left
              side taken from the explicit formula so the two sides come from
              different code paths.
    UnfairD2: k S(n,k) = sum_{j=k-1}^{n-1} C(n,j) (m-alpha|alpha)_{n-j-1} S(j,k-1).
    """
    if m < 1:
        raise ValueError("unfair distributions need m >= 1")
    params = GStirlingParams(alpha, m, r)
    tri = gstirling_table(params, n_max + 1)
    report = IdentityReport()
    ctx = params.as_dict()
    for n in range(n_max + 1):
        for k in range(n + 1):
            lhs = gstirling_explicit(n + 1, k, params)
            rhs = tri(n, k - 1) + (k * m - n * alpha + r) * tri(n, k)
            report.add(compare("UnfairD", n, {**ctx, "k": k}, BiPoly.const(lhs), BiPoly.const(rhs)))

            lhs2 = k * tri(n, k)
            rhs2 = sum(
                binomial(n, j) * gen_falling(m - alpha, alpha, n - j - 1) * tri(j, k - 1)
                for j in range(max(k - 1, 0), n)
            )
            report.add(compare("UnfairD2", n, {**ctx, "k": k}, BiPoly.const(lhs2), BiPoly.const(rhs2)))
    return report
