"""Large-lambda expansion of the n-th coefficient of Theta(z)^lambda.

With Theta(z) = sum_j m_j z^j and m_0 = 1,

    [z^n] Theta^lambda = sum_e (lambda)_{n-e} W(n, e),
    W(n, e) = sum over partitions 1^g_1 2^g_2 ... of n with n-e parts of
              prod_j m_j^g_j / g_j!.

The sum is finite: terms with e >= n vanish for n >= 1, so keeping e up to
n-1 reproduces the coefficient exactly. Here Theta is the generating function
of D^{1,x}_{m,r}(n; alpha), hence m_j = D^{1,x}(j)/j!.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Context, Decimal
from fractions import Fraction
from functools import lru_cache
from typing import Iterator

from .dowling import DowlingParams, dowling_egf, power_form, _d
from .exact import gen_falling
from .hurwitz import hz_pow

DECIMAL_DIGITS = 40
_CTX = Context(prec=DECIMAL_DIGITS)


class AsymptoticRangeError(ValueError):
    """Index outside the range where the expansion term is defined."""


def partitions_with_parts(n: int, k: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Partitions of n into exactly k positive parts, non-increasing."""
    if largest is None:
        largest = n
    if k == 0:
        if n == 0:
            yield ()
        return
    if n < k:
        return
    # the first part p leaves n - p for k - 1 parts, each at most p
    for p in range(min(largest, n - k + 1), 0, -1):
        if p * k < n:
            break
        for rest in partitions_with_parts(n - p, k - 1, p):
            yield (p, *rest)


def multiplicities(parts: tuple[int, ...], n: int) -> tuple[int, ...]:
    """(g_1, ..., g_n) for a partition of n."""
    g = [0] * n
    for p in parts:
        g[p - 1] += 1
    return tuple(g)


def _check_e(n: int, e: int) -> None:
    if n < 0:
        raise AsymptoticRangeError(f"n must be non-negative, got {n}")
    top = n - 1 if n >= 1 else 0
    if e < 0 or e > top:
        raise AsymptoticRangeError(f"e={e} outside 0..{top} for n={n}")


def w_symbolic(n: int, e: int) -> dict[tuple[int, ...], Fraction]:
    """W(n, e) as {multiplicity vector: coefficient} in the indeterminates m_j."""
    _check_e(n, e)
    out: dict[tuple[int, ...], Fraction] = {}
    for parts in partitions_with_parts(n, n - e):
        g = multiplicities(parts, n)
        out[g] = Fraction(1, math.prod(math.factorial(c) for c in g))
    return out


def theta_coeffs(params: DowlingParams, x0: int, n: int) -> tuple[Fraction, ...]:
    """m_0..m_n with m_j = D^{1,x0}(j)/j!."""
    return tuple(
        Fraction(_d(j, params.m, params.r, params.alpha).eval(x0, 1), math.factorial(j))
        for j in range(n + 1)
    )


def w_value(n: int, e: int, params: DowlingParams, x0: int) -> Fraction:
    ms = theta_coeffs(params, x0, n)
    total = Fraction(0)
    for g, c in w_symbolic(n, e).items():
        term = c
        for j, gj in enumerate(g, start=1):
            if gj:
                term *= ms[j] ** gj
        total += term
    return total


# Printed W(n, 1..4). A term (d, k, atoms) stands for
#   m_1^{n-k} / (d (n-k)!) * prod over atoms (i, f) of D(i)/f!,
# and D(i)/f! equals m_i i!/f!.
W_TRANSCRIBED: dict[int, tuple[tuple[int, int, tuple[tuple[int, int], ...]], ...]] = {
    0: ((1, 0, ()),),
    1: ((1, 2, ((2, 2),)),),
    2: ((1, 3, ((3, 3),)), (2, 4, ((2, 2), (2, 2)))),
    3: ((1, 4, ((4, 4),)), (1, 5, ((2, 2), (3, 3))), (6, 6, ((5, 2),) * 3)),
    4: (
        (1, 5, ((5, 5),)),
        (2, 6, ((3, 3), (3, 3))),
        (2, 7, ((2, 2), (2, 2), (3, 3))),
        (24, 8, ((2, 2),) * 4),
        (2, 6, ((2, 2), (4, 4))),
    ),
}


def w_transcribed_symbolic(n: int, e: int) -> dict[tuple[int, ...], Fraction]:
    out: dict[tuple[int, ...], Fraction] = {}
    for d, k, atoms in W_TRANSCRIBED[e]:
        if n < k:
            continue  # 1/(n-k)! vanishes
        g = [0] * n
        if k < n:
            g[0] = n - k
        coef = Fraction(1, d * math.factorial(n - k))
        for i, f in atoms:
            if i > n:
                break
            g[i - 1] += 1
            coef *= Fraction(math.factorial(i), math.factorial(f))
        else:
            key = tuple(g)
            out[key] = out.get(key, Fraction(0)) + coef
    return {k: v for k, v in out.items() if v}


def _render_monomial(g: tuple[int, ...]) -> str:
    parts = [f"m{j}^{c}" if c > 1 else f"m{j}" for j, c in enumerate(g, start=1) if c]
    return "*".join(parts) or "1"


def transcription_report(n_max: int = 10) -> dict:
    """Compare the printed W(n, e), e = 0..4, with the generic partition sum."""
    out: dict = {}
    for e in sorted(W_TRANSCRIBED):
        diffs = []
        for n in range(max(e + 1, 1), n_max + 1):
            want = w_symbolic(n, e)
            got = w_transcribed_symbolic(n, e)
            for g in sorted(set(want) | set(got)):
                if want.get(g, 0) != got.get(g, 0):
                    diffs.append(
                        {
                            "n": n,
                            "monomial": _render_monomial(g),
                            "generic": str(want.get(g, 0)),
                            "printed": str(got.get(g, 0)),
                        }
                    )
        out[f"W(n,{e})"] = {
            "verdict": "MISMATCH" if diffs else "PASS",
            "checked_n": [max(e + 1, 1), n_max],
            "mismatch_count": len(diffs),
            "first_mismatches": diffs[:3],
        }
    return out


def to_decimal(q: Fraction) -> Decimal:
    return _CTX.divide(Decimal(q.numerator), Decimal(q.denominator))


@dataclass(frozen=True)
class AsymptoticEstimate:
    n: int
    lam: int
    terms_used: int
    value: Decimal
    exact: Fraction
    rel_error: Decimal
    estimate_exact: Fraction

    def as_row(self) -> dict[str, str]:
        return {
            "n": str(self.n),
            "lambda": str(self.lam),
            "terms_used": str(self.terms_used),
            "estimate": str(self.value),
            "exact": str(self.exact),
            "rel_error": str(self.rel_error),
        }


@lru_cache(maxsize=None)
def theta_power_coeff(n: int, lam: int, params: DowlingParams, x0: int) -> Fraction:
    """n! [z^n] Theta(z)^lam by binary powering of the truncated series."""
    theta = dowling_egf(params, x0, 1, n)
    return hz_pow(theta, lam)[n]


def dowling_asymptotic(n: int, lam: int, e_max: int, params: DowlingParams, x0: int) -> AsymptoticEstimate:
    """n! sum_{e <= e_max} (lam)_{n-e} W(n, e) against the exact coefficient.

    Terms with e >= n are zero and are skipped, so ``terms_used`` counts only
    the nonzero terms included.
    """
    if lam <= n:
        raise AsymptoticRangeError(f"lambda={lam} must exceed n={n}")
    if e_max < 0:
        raise AsymptoticRangeError(f"e_max must be non-negative, got {e_max}")
    exact = theta_power_coeff(n, lam, params, x0)
    if n == 0:
        est = Fraction(1)
        used = 1
    else:
        top = min(e_max, n - 1)
        est = math.factorial(n) * sum(
            gen_falling(lam, 1, n - e) * w_value(n, e, params, x0) for e in range(top + 1)
        )
        used = top + 1
    rel = abs(est - exact) / abs(exact) if exact else Fraction(0)
    return AsymptoticEstimate(n, lam, used, to_decimal(est), exact, to_decimal(rel), est)


def order_reconciliation(n_max: int, params: DowlingParams, x0: int, lams=(1, 2, 3)) -> dict:
    """Where Theta^lambda agrees with the order-lambda Dowling polynomial.

    Theta^lambda generates D^{lambda,x}_{m, r lambda}, so the two coincide for
    every n exactly when r = 0 or lambda = 1.
    """
    rows = []
    for lam in lams:
        for n in range(n_max + 1):
            via_power = theta_power_coeff(n, lam, params, x0)
            dowling = _d(n, params.m, params.r, params.alpha).eval(x0, lam)
            rows.append({"n": n, "lambda": lam, "theta_power": str(via_power), "dowling": dowling,
                         "equal": via_power == dowling})
    if params.alpha == 0:
        for row in rows:
            row["power_form"] = power_form(row["n"], params.m, params.r).eval(x0, row["lambda"])
    return {
        "params": params.as_dict(),
        "x": x0,
        "all_equal": all(r["equal"] for r in rows),
        "expected_equal": params.r == 0 or set(lams) <= {1},
        "rows": rows,
    }


__all__ = [
    "AsymptoticEstimate",
    "AsymptoticRangeError",
    "DECIMAL_DIGITS",
    "W_TRANSCRIBED",
    "dowling_asymptotic",
    "multiplicities",
    "order_reconciliation",
    "partitions_with_parts",
    "theta_coeffs",
    "theta_power_coeff",
    "to_decimal",
    "transcription_report",
    "w_symbolic",
    "w_transcribed_symbolic",
    "w_value",
]
