"""Higher-order r-Dowling polynomials D^{l,x}_{m,r}(n; alpha).

D(n) = sum_k (x l)^k S(n, k; alpha, m, r), kept as an exact polynomial in x
and l. The second route reads coefficients off

    e_alpha^r(z) * exp(x l (e_alpha^m(z) - 1) / m)

at integer points. Some printed identities hold only for the "power form"
whose generating function is exp(l r z + x l (e^{mz} - 1)/m); it is provided
so those statements can be evaluated under that reading as well.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable

from .exact import L, X, BiPoly, binomial, compositions, gen_falling, multinomial
from .gbell import bell_x
from .gstirling import (
    GStirlingParams,
    NonIntegralError,
    _rows,
    gstirling,
    gstirling_explicit,
)
from .hurwitz import DEFAULT_ORDER, HurwitzSeries, hz_deg_exp, hz_exp, hz_mul
from .identities import Binding, Grid, Identity, printed_verdict, run_catalog, slot_bindings
from .report import EMPTY, MISMATCH, PASS, IdentityReport

XL = X * L


@dataclass(frozen=True)
class DowlingParams:
    m: int
    r: int
    alpha: int = 0

    def __post_init__(self):
        if self.m < 1:
            raise ValueError(f"m must be at least 1, got {self.m}")
        if self.r < 0:
            raise ValueError(f"r must be non-negative, got {self.r}")
        if self.alpha < 0:
            raise ValueError(f"alpha must be non-negative, got {self.alpha}")

    def as_dict(self) -> dict[str, int]:
        return {"m": self.m, "r": self.r, "alpha": self.alpha}


@dataclass(frozen=True)
class DowlingValue:
    n: int
    params: DowlingParams
    poly: BiPoly

    def __call__(self, x0: int, l0: int) -> int:
        return self.poly.eval(x0, l0)

    def __str__(self) -> str:
        return str(self.poly)


@lru_cache(maxsize=None)
def _d(n: int, m: int, r: int, alpha: int) -> BiPoly:
    """D(n) without parameter validation; the identities shift m and r freely."""
    if n < 0:
        return BiPoly()
    return BiPoly.from_x_coeffs(_rows(alpha, m, r, n)[n], diagonal=True)


def dowling_poly(n: int, params: DowlingParams) -> DowlingValue:
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    return DowlingValue(n, params, _d(n, params.m, params.r, params.alpha))


def dowling_egf(params: DowlingParams, x0: int, l0: int, order: int = DEFAULT_ORDER) -> HurwitzSeries:
    m, r, a = params.m, params.r, params.alpha
    inner = (hz_deg_exp(a, m, order) - HurwitzSeries.constant(1, order)).scale(Fraction(x0 * l0, m))
    return hz_mul(hz_deg_exp(a, r, order), hz_exp(inner))


def dowling_via_egf(n_max: int, params: DowlingParams, x0: int, l0: int) -> list[int]:
    """D(0..n_max) at (x0, l0) from the generating function alone."""
    series = dowling_egf(params, x0, l0, n_max)
    try:
        return series.integers()
    except ValueError as exc:
        raise NonIntegralError(str(exc)) from exc


@lru_cache(maxsize=None)
def power_form(n: int, m: int, r: int) -> BiPoly:
    """Coefficients of exp(l r z + x l (e^{mz} - 1)/m), non-degenerate only.

    Equals sum_i C(n,i) (l r)^{n-i} D_{m,0}(i); agrees with D(n) when r = 0
    or l = 1.
    """
    out = BiPoly()
    for i in range(n + 1):
        out = out + _d(i, m, 0, 0) * BiPoly.monomial(binomial(n, i) * r ** (n - i), 0, n - i)
    return out


# ---------------------------------------------------------------------------
# identity catalog


def _D(n, ctx, **shift):
    p = {**ctx, **shift}
    return _d(n, p["m"], p["r"], p.get("alpha", 0))


def _d1(n, ctx, _):
    m, r = ctx["m"], ctx["r"]
    tail = BiPoly()
    for i in range(n + 1):
        tail = tail + _D(n - i, ctx) * (binomial(n, i) * m**i)
    return _D(n + 1, ctx), _D(n, ctx) * r + XL * tail


def _d2(n, ctx, _):
    m, r = ctx["m"], ctx["r"]
    return _D(n + 1, ctx), _D(n, ctx) * r + XL * _D(n, ctx, r=m + r)


def _d3(n, ctx, _):
    m, r = ctx["m"], ctx["r"]
    tail = BiPoly()
    for i in range(n + 1):
        tail = tail + _D(n - i, ctx, r=0) * (binomial(n, i) * (m + r) ** i)
    return _D(n + 1, ctx), _D(n, ctx) * r + XL * tail


def _with_lambda(ctx: dict[str, int]) -> Iterable[dict[str, int]]:
    for l0 in (1, 2, 3):
        yield {**ctx, "lambda": l0}


def _d4(n, ctx, binding):
    r, l0 = ctx["r"], ctx["lambda"]
    ba, bb, br = binding.resolve(ctx)
    b = [bell_x(e, ba, bb, br) for e in range(n + 1)]
    rhs = BiPoly()
    for parts in compositions(n, l0 + 1):
        term = BiPoly.const(multinomial(n, parts) * r ** parts[0])
        for e in parts[1:]:
            term = term * b[e]
        rhs = rhs + term
    return _D(n, ctx).subs_l(l0), rhs


def _d5(n, ctx, binding):
    r = ctx["r"]
    ba, bb, br = binding.resolve(ctx)
    rhs = BiPoly()
    for i in range(n + 1):
        rhs = rhs + bell_x(i, ba, bb, br) * BiPoly.monomial(binomial(n, i) * r ** (n - i), 0, i)
    return _D(n, ctx), rhs


def _d5_corrected(n, ctx, _):
    m, r = ctx["m"], ctx["r"]
    rhs = BiPoly()
    for i in range(n + 1):
        rhs = rhs + bell_x(i, 0, m, 0).subs_x(XL) * (binomial(n, i) * r ** (n - i))
    return _D(n, ctx), rhs


def _d6(n, ctx, _):
    params = GStirlingParams(0, ctx["m"], ctx["r"])
    rhs = BiPoly({(i, i): gstirling_explicit(n, i, params) for i in range(n + 1)})
    return _D(n, ctx), rhs


def _d7(n, ctx, _):
    """Both sides are evaluated at every (x, l) in {1,2,3}^2 and packed as
    coefficients of x^x0 l^l0 so a single comparison covers the whole set."""
    params = DowlingParams(ctx["m"], ctx["r"], ctx["alpha"])
    lhs: dict[tuple[int, int], int] = {}
    rhs: dict[tuple[int, int], int] = {}
    for x0 in (1, 2, 3):
        for l0 in (1, 2, 3):
            lhs[(x0, l0)] = _D(n, ctx).eval(x0, l0)
            rhs[(x0, l0)] = _egf_values(params, x0, l0, max(n, 16))[n]
    return BiPoly(lhs), BiPoly(rhs)


@lru_cache(maxsize=None)
def _egf_values(params: DowlingParams, x0: int, l0: int, n_max: int) -> tuple[int, ...]:
    return tuple(dowling_via_egf(n_max, params, x0, l0))


def _with_s(ctx: dict[str, int]) -> Iterable[dict[str, int]]:
    for s in range(ctx["r"] + 1):
        yield {**ctx, "s": s}


def _d8_terms(n, ctx, d, lam: bool):
    r, s = ctx["r"], ctx["s"]
    rhs = BiPoly()
    for j in range(n + 1):
        w = BiPoly.monomial(binomial(n, j) * (r - s) ** (n - j), 0, n - j if lam else 0)
        rhs = rhs + d(j, s) * w
    return d(n, r), rhs


def _d8(n, ctx, _):
    return _d8_terms(n, ctx, lambda k, rr: _D(k, ctx, r=rr), lam=True)


def _d8_corrected(n, ctx, _):
    return _d8_terms(n, ctx, lambda k, rr: _D(k, ctx, r=rr), lam=False)


def _d8_power(n, ctx, _):
    return _d8_terms(n, ctx, lambda k, rr: power_form(k, ctx["m"], rr), lam=True)


def _d9_terms(n, ctx, d, lead: BiPoly):
    m = ctx["m"]
    tail = BiPoly()
    for j in range(n + 1):
        tail = tail + d(j) * (binomial(n, j) * m ** (n - j))
    return d(n + 1), lead * d(n) + XL * tail


def _d9(n, ctx, _):
    return _d9_terms(n, ctx, lambda k: _D(k, ctx), BiPoly.monomial(ctx["r"], 0, 1))


def _d9_corrected(n, ctx, _):
    return _d9_terms(n, ctx, lambda k: _D(k, ctx), BiPoly.const(ctx["r"]))


def _d9_power(n, ctx, _):
    return _d9_terms(
        n, ctx, lambda k: power_form(k, ctx["m"], ctx["r"]), BiPoly.monomial(ctx["r"], 0, 1)
    )


def _stirling2(s: int, i: int) -> int:
    return gstirling(s, i, 0, 1, 0)


def _d10(n, ctx, _):
    m, r = ctx["m"], ctx["r"]
    rhs = BiPoly()
    for i in range(n + 1):
        c = sum(binomial(n, s) * r ** (n - i) * m ** (s - i) * _stirling2(s, i) for s in range(i, n + 1))
        rhs = rhs + BiPoly.monomial(c, i, 0)
    return _D(n, ctx), rhs


def _d10_corrected(n, ctx, _):
    m, r = ctx["m"], ctx["r"]
    rhs = BiPoly()
    for i in range(n + 1):
        c = sum(binomial(n, s) * r ** (n - s) * m ** (s - i) * _stirling2(s, i) for s in range(i, n + 1))
        rhs = rhs + BiPoly.monomial(c, i, i)
    return _D(n, ctx), rhs


def _homogeneous(n: int, k: int, m: int, r: int) -> int:
    total = 0
    for es in compositions(n - k, k + 1):
        term = 1
        for t, e in enumerate(es):
            term *= (r + t * m) ** e
        total += term
    return total


def _d11_terms(n, ctx, lam: bool):
    m, r = ctx["m"], ctx["r"]
    rhs = BiPoly({(k, k if lam else 0): _homogeneous(n, k, m, r) for k in range(n + 1)})
    return _D(n, ctx), rhs


def _d11(n, ctx, _):
    return _d11_terms(n, ctx, lam=False)


def _d11_corrected(n, ctx, _):
    return _d11_terms(n, ctx, lam=True)


def _g1(n, ctx, _):
    m, r, a = ctx["m"], ctx["r"], ctx["alpha"]
    return _D(n + 1, ctx), _D(n, ctx, r=r - a) * r + XL * _D(n, ctx, m=m + r - a)


def _g1_corrected(n, ctx, _):
    m, r, a = ctx["m"], ctx["r"], ctx["alpha"]
    return _D(n + 1, ctx), _D(n, ctx, r=r - a) * r + XL * _D(n, ctx, r=m + r - a)


def _g2_terms(n, ctx, top: int, bell):
    r, a = ctx["r"], ctx["alpha"]
    tail = BiPoly()
    for i in range(n + 1):
        tail = tail + bell(n - i) * (binomial(n, i) * gen_falling(top, a, i))
    return _D(n + 1, ctx), _D(n, ctx, r=r - a) * r + XL * tail


def _g2(n, ctx, binding):
    ba, bb, br = binding.resolve(ctx)
    return _g2_terms(n, ctx, ctx["m"] + ctx["r"], lambda k: bell_x(k, ba, bb, br))


def _g2_corrected(n, ctx, _):
    m, a = ctx["m"], ctx["alpha"]
    return _g2_terms(n, ctx, m + ctx["r"] - a, lambda k: bell_x(k, a, m, 0).subs_x(XL))


def _g3(n, ctx, binding):
    r, a = ctx["r"], ctx["alpha"]
    ba, bb, br = binding.resolve(ctx)
    rhs = BiPoly()
    for i in range(n + 1):
        w = BiPoly.monomial(binomial(n, i) * gen_falling(r, a, n - i), 0, i)
        rhs = rhs + bell_x(i, ba, bb, br) * w
    return _D(n, ctx), rhs


def _g3_corrected(n, ctx, _):
    m, r, a = ctx["m"], ctx["r"], ctx["alpha"]
    rhs = BiPoly()
    for i in range(n + 1):
        rhs = rhs + bell_x(i, a, m, 0).subs_x(XL) * (binomial(n, i) * gen_falling(r, a, n - i))
    return _D(n, ctx), rhs


def _at_lambda_one(fn):
    def sides(n, ctx, binding):
        lhs, rhs = fn(n, ctx, binding)
        return lhs.subs_l(1), rhs.subs_l(1)

    return sides


_B_NONDEG = Binding(("0", "m", "0"))
_B_DEG = Binding(("alpha", "m", "0"))

DOWLING_CATALOG: dict[str, Identity] = {
    i.id: i
    for i in (
        Identity("D1", "D(n+1) = r D(n) + x l sum_i C(n,i) m^i D(n-i)", _d1),
        Identity("D2", "D(n+1) = r D(n) + x l D_{m,m+r}(n)", _d2),
        Identity("D3", "D(n+1) = r D(n) + l x sum_i C(n,i) (m+r)^i D_{m,0}(n-i)", _d3),
        Identity(
            "D4",
            "D(n) = sum_{e_1+...+e_{l+1}=n} C(n; e) r^{e_1} B_{e_2}(0,m,x)...B_{e_{l+1}}(0,m,x), l a positive integer",
            _d4,
            bindings=slot_bindings("0", "m"),
            frozen=_B_NONDEG,
            expand=_with_lambda,
        ),
        Identity(
            "D5",
            "D(n) = sum_i C(n,i) B_i(0,m,0,x) l^i r^{n-i}",
            _d5,
            bindings=slot_bindings("0", "m"),
            frozen=_B_NONDEG,
            erratum="l^i multiplies B_i(x) instead of replacing x by x l inside it",
            corrected=_d5_corrected,
            corrected_statement="D(n) = sum_i C(n,i) r^{n-i} B_i(x l; 0, m, 0)",
            readings=(("lambda=1", _at_lambda_one(_d5)),),
        ),
        Identity("D6", "D(n) = sum_i (l x)^i S(n,i;0,m,r), right side by the explicit formula", _d6),
        Identity(
            "D7",
            "sum_n D(n;a) z^n/n! = e_a^r(z) exp(x l (e_a^m(z) - 1)/m) at x, l in {1,2,3}",
            _d7,
            degenerate=True,
        ),
        Identity(
            "D8",
            "D_{m,r}(n) = sum_j C(n,j) l^{n-j} (r-s)^{n-j} D_{m,s}(j), 0 <= s <= r",
            _d8,
            expand=_with_s,
            erratum="the factor l^{n-j} is spurious for D(n) = sum_k (x l)^k S(n,k;0,m,r)",
            corrected=_d8_corrected,
            corrected_statement="D_{m,r}(n) = sum_j C(n,j) (r-s)^{n-j} D_{m,s}(j)",
            readings=(("power-form", _d8_power), ("lambda=1", _at_lambda_one(_d8))),
        ),
        Identity(
            "D9",
            "D(n+1) = r l D(n) + x l sum_j C(n,j) D(j) m^{n-j}",
            _d9,
            erratum=(
                "leading term r l D(n) conflicts with the derivative of the generating "
                "function, which gives r D(n) as in D1"
            ),
            corrected=_d9_corrected,
            corrected_statement="D(n+1) = r D(n) + x l sum_j C(n,j) D(j) m^{n-j}",
            readings=(("power-form", _d9_power), ("lambda=1", _at_lambda_one(_d9))),
        ),
        Identity(
            "D10",
            "D(n) = sum_i [sum_{s=i}^n C(n,s) r^{n-i} m^{s-i} S(s,i)] x^i",
            _d10,
            erratum="exponent of r must be n-s, and x^i must be (x l)^i",
            corrected=_d10_corrected,
            corrected_statement="D(n) = sum_i [sum_{s=i}^n C(n,s) r^{n-s} m^{s-i} S(s,i)] (x l)^i",
        ),
        Identity(
            "D11",
            "D(n) = sum_k [sum_{e_0+...+e_k=n-k} r^{e_0} (r+m)^{e_1} ... (r+km)^{e_k}] x^k",
            _d11,
            erratum="x^k must be (x l)^k",
            corrected=_d11_corrected,
            corrected_statement="D(n) = sum_k [sum_{e_0+...+e_k=n-k} prod_t (r+tm)^{e_t}] (x l)^k",
            readings=(("lambda=1", _at_lambda_one(_d11)),),
        ),
        Identity(
            "G1",
            "D_{m,r}(n+1;a) = r D_{m,r-a}(n;a) + x l D_{m+r-a,r}(n;a)",
            _g1,
            degenerate=True,
            erratum="subscripts of the second term are swapped: the merged unit has m+r-a compartments in the r slot",
            corrected=_g1_corrected,
            corrected_statement="D_{m,r}(n+1;a) = r D_{m,r-a}(n;a) + x l D_{m,m+r-a}(n;a)",
        ),
        Identity(
            "G2",
            "D(n+1;a) = r D_{m,r-a}(n;a) + x l sum_i C(n,i) (m+r|a)_i B_{n-i}(a,m,0,x)",
            _g2,
            degenerate=True,
            bindings=slot_bindings("alpha", "m"),
            frozen=_B_DEG,
            erratum="needs (m+r-a|a)_i, and the Bell factor must carry x l rather than x",
            corrected=_g2_corrected,
            corrected_statement="D(n+1;a) = r D_{m,r-a}(n;a) + x l sum_i C(n,i) (m+r-a|a)_i B_{n-i}(x l; a, m, 0)",
        ),
        Identity(
            "G3",
            "D(n;a) = sum_i C(n,i) l^i B_i(a,m,0,x) (r|a)_{n-i}",
            _g3,
            degenerate=True,
            bindings=slot_bindings("alpha", "m"),
            frozen=_B_DEG,
            erratum=(
                "printed index (r|a)_{n-k} is read as (r|a)_{n-i}; l^i B_i(x) must be B_i(x l)"
            ),
            corrected=_g3_corrected,
            corrected_statement="D(n;a) = sum_i C(n,i) B_i(x l; a, m, 0) (r|a)_{n-i}",
            readings=(("lambda=1", _at_lambda_one(_g3)),),
        ),
    )
}


def check_dowling_identities(
    catalog_ids: Iterable[str] | None = None, n_max: int = 12, grid: Grid | None = None
) -> IdentityReport:
    """Check the Dowling identities; symbolic in x and l except D4 and D7."""
    ids = list(DOWLING_CATALOG) if catalog_ids is None else list(catalog_ids)
    return run_catalog(DOWLING_CATALOG, ids, n_max, grid or Grid())


def _common(verdicts: list[str]) -> str:
    kinds = set(verdicts)
    if not kinds:
        return EMPTY
    return kinds.pop() if len(kinds) == 1 else "INCONSISTENT"


def d9_adjudication(report: IdentityReport) -> dict:
    """Summarize D9 per grid point and cross-reference D1.

    D9 differs from D1 only through the term r(l - 1) D(n), so its verdict can
    depend on r alone: points with r = 0 pass trivially. Consistency is judged
    over the points where the two statements differ.
    """
    rows = report.select("D9")
    if not rows:
        return {"verdict": EMPTY}
    per_point: dict[tuple, str] = {}
    for res in rows:
        if res.reading != "printed":
            continue
        key = res.params
        if res.verdict == MISMATCH or key not in per_point:
            per_point[key] = res.verdict
    informative = [v for k, v in per_point.items() if dict(k)["r"] != 0]
    trivial = [v for k, v in per_point.items() if dict(k)["r"] == 0]
    return {
        "statement": DOWLING_CATALOG["D9"].statement,
        "verdict": printed_verdict(DOWLING_CATALOG["D9"], report),
        "verdict_where_r_nonzero": _common(informative),
        "verdict_where_r_zero": _common(trivial),
        "grid_consistent": len(set(informative)) <= 1,
        "points_r_nonzero": len(informative),
        "points_r_zero": len(trivial),
        "D1_verdict": printed_verdict(DOWLING_CATALOG["D1"], report),
        "corrected_verdict": report.verdict("D9", reading="corrected"),
        "power_form_verdict": report.verdict("D9", reading="power-form"),
        "note": (
            "D9 holds for exp(l r z + x l (e^{mz}-1)/m), the generating function of "
            "the power form; the Dowling polynomial of D1 and D7 has exp(r z + ...)"
        ),
    }


__all__ = [
    "DOWLING_CATALOG",
    "DowlingParams",
    "DowlingValue",
    "check_dowling_identities",
    "d9_adjudication",
    "dowling_egf",
    "dowling_poly",
    "dowling_via_egf",
    "power_form",
]
