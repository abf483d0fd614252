"""Findings where a printed statement disagrees with an independent check.

Each function returns a JSON-ready dict with the printed form, the adopted
form and the evidence. None of them raises on disagreement: a mismatch is
the finding.
"""
from __future__ import annotations

import math

from .exact import binomial, gen_binomial
from .gstirling import SPECIAL_CASES, gstirling, special_case
from .hurwitz import hz_bpa
from .oracle import (
    MAX_BPA_L,
    MAX_BPA_N,
    MAX_COLORED_N,
    count_rwhitney,
    enum_bpa_count,
    enum_set_partitions,
)
from .report import MISMATCH, PASS


def bpa_closed_form(n: int, l: int, *, printed: bool) -> int:
    """sum_k S(n,k) k! C(l+k-1, k) as printed, or with C(l+k, k)."""
    top = (lambda k: l + k - 1) if printed else (lambda k: l + k)
    return sum(
        gstirling(n, k, 0, 1, 0) * math.factorial(k) * gen_binomial(top(k), k) for k in range(n + 1)
    )


def bpa_adjudication(n_max: int = MAX_BPA_N, l_max: int = MAX_BPA_L) -> dict:
    """Barred preferential arrangements: enumeration against both closed forms."""
    rows = []
    for l in range(l_max + 1):
        series = hz_bpa(l, n_max)
        for n in range(n_max + 1):
            rows.append({
                "n": n,
                "l": l,
                "enumerated": enum_bpa_count(n, l),
                "egf": int(series[n]),
                "printed_closed_form": bpa_closed_form(n, l, printed=True),
                "corrected_closed_form": bpa_closed_form(n, l, printed=False),
            })
    egf_ok = all(r["enumerated"] == r["egf"] for r in rows)
    printed_bad = [r for r in rows if r["printed_closed_form"] != r["enumerated"]]
    corrected_ok = all(r["corrected_closed_form"] == r["enumerated"] for r in rows)
    return {
        "claim": "number of barred preferential arrangements of [n] with l bars",
        "printed": "sum_k S(n,k) k! C(l+k-1, k)",
        "adopted": "sum_k S(n,k) k! C(l+k, k), the coefficients of 1/(2-e^z)^(l+1)",
        "range": {"n_max": n_max, "l_max": l_max},
        "egf_verdict": PASS if egf_ok else MISMATCH,
        "printed_verdict": MISMATCH if printed_bad else PASS,
        "printed_mismatch_count": len(printed_bad),
        "printed_first_mismatch": printed_bad[0] if printed_bad else None,
        "corrected_verdict": PASS if corrected_ok else MISMATCH,
        "rows": rows,
    }


def special_case_adjudication(n_max: int = MAX_COLORED_N) -> dict:
    """Check the table's substitutions against enumeration where one exists.

    r-Whitney numbers are the colored-partition counts; r-Stirling numbers
    are the same counts with one color; Whitney numbers take r = 1.
    """
    n_max = min(n_max, MAX_COLORED_N)
    out: dict = {}

    def verdicts(kind: str, cases) -> dict:
        bad = {"printed": [], "used": []}
        for params, n, k, want in cases:
            for label, printed in (("printed", True), ("used", False)):
                got = special_case(kind, n, k, printed=printed, **params)
                if got != want:
                    bad[label].append({**params, "n": n, "k": k, "got": got, "oracle": want})
        table, used = SPECIAL_CASES[kind]
        return {
            "printed_substitution": list(table),
            "used_substitution": list(used),
            "printed_verdict": MISMATCH if bad["printed"] else PASS,
            "printed_first_mismatch": bad["printed"][0] if bad["printed"] else None,
            "used_verdict": MISMATCH if bad["used"] else PASS,
            "used_mismatches": bad["used"],
        }

    grid = [(n, k) for n in range(n_max + 1) for k in range(n + 1)]
    out["r-whitney"] = verdicts(
        "r-whitney",
        [({"beta": b, "r": r}, n, k, count_rwhitney(n, k, b, r))
         for b in (1, 2, 3) for r in (0, 1, 2) for n, k in grid],
    )
    out["r-stirling"] = verdicts(
        "r-stirling",
        [({"r": r}, n, k, count_rwhitney(n, k, 1, r)) for r in (0, 1, 2) for n, k in grid],
    )
    out["whitney"] = verdicts(
        "whitney",
        [({"beta": b}, n, k, count_rwhitney(n, k, b, 1)) for b in (1, 2, 3) for n, k in grid],
    )
    blocks = {}
    for n in range(n_max + 1):
        for part in enum_set_partitions(n):
            blocks[(n, len(part))] = blocks.get((n, len(part)), 0) + 1
    out["stirling2"] = verdicts("stirling2", [({}, n, k, blocks.get((n, k), 0)) for n, k in grid])
    out["binomial"] = verdicts("binomial", [({}, n, k, binomial(n, k)) for n, k in grid])
    return out


__all__ = ["bpa_adjudication", "bpa_closed_form", "special_case_adjudication"]
