"""dowling-kit command line.

    dowling-kit table --kind gstirling|gbell|dowling|bpa
    dowling-kit check --suite bell|dowling|unfair|all
    dowling-kit asymptotic --n 3,5 --lambda 100,1000 --e-max 0,1,2,3,4
    dowling-kit quad
    dowling-kit oracle-diff --kind all|stirling|rwhitney|dowling|bpa

Output is deterministic: JSON keys are sorted, floats use repr, and every
file ends in a single LF.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Iterable, Sequence

from . import __version__
from .adjudications import bpa_adjudication, bpa_closed_form, special_case_adjudication
from .asymptotics import (
    AsymptoticRangeError,
    dowling_asymptotic,
    order_reconciliation,
    transcription_report,
)
from .dowling import DOWLING_CATALOG, DowlingParams, check_dowling_identities, d9_adjudication, dowling_poly
from .gbell import BELL_CATALOG, bell_x, check_bell_identities, egf_adjudication
from .gstirling import ExcludedParameters, GStirlingParams, check_unfair_identities, gstirling_table
from .hurwitz import hz_bpa
from .identities import Grid, contract_ok, describe
from .integral import (
    DEFAULT_NODES,
    PANEL_POINTS,
    bell_rows,
    casado_rows,
    dowling_rows,
    integrand_adjudication,
)
from .oracle import (
    MAX_BPA_L,
    MAX_BPA_N,
    MAX_COLORED_N,
    MAX_SET_PARTITION_N,
    EnumerationRangeError,
    count_rmxl,
    count_rwhitney,
    enum_bpa_count,
    enum_set_partitions,
)
from .report import IdentityReport

SCHEMA = "1"
MAX_TABLE_N = 60
MAX_CHECK_N = 20
MAX_ASYMPTOTIC_N = 30


class UsageError(Exception):
    """Invalid ranges or a cap violation; reported on stderr with exit code 2."""


def int_list(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


# ---------------------------------------------------------------------------
# rendering


def _dump_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, ensure_ascii=True) + "\n"


def _csv(rows: list[dict], columns: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(columns), lineterminator="\n", extrasaction="ignore")
    writer.writeheader()
    for row in rows:
        writer.writerow({c: _cell(row.get(c, "")) for c in columns})
    return buf.getvalue()


def _cell(v) -> str:
    if isinstance(v, float):
        return repr(v)
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def _pretty(rows: list[dict], columns: Sequence[str]) -> str:
    cells = [[str(c) for c in columns]] + [[_cell(r.get(c, "")) for c in columns] for r in rows]
    widths = [max(len(row[i]) for row in cells) for i in range(len(columns))]
    lines = ["  ".join(v.rjust(w) for v, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def _render(fmt: str, rows: list[dict], columns: Sequence[str], document: dict) -> str:
    if fmt == "csv":
        return _csv(rows, columns)
    if fmt == "pretty":
        return _pretty(rows, columns)
    return _dump_json(document)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        sys.stdout.flush()
    else:
        with open(out, "w", encoding="ascii", newline="\n") as fh:
            fh.write(text)


def _config(args: argparse.Namespace) -> dict:
    skip = {"func", "out", "format"}
    return {k: list(v) if isinstance(v, tuple) else v for k, v in sorted(vars(args).items()) if k not in skip}


def _grid(args: argparse.Namespace) -> Grid:
    if any(m < 1 for m in args.m):
        raise UsageError("--m values must be at least 1")
    if any(r < 0 for r in args.r) or any(a < 0 for a in args.alpha):
        raise UsageError("--r and --alpha values must be non-negative")
    return Grid(m=args.m, r=args.r, alpha=args.alpha)


def _check_n(n_max: int, cap: int, what: str) -> None:
    if n_max < 0:
        raise UsageError("--n-max must be non-negative")
    if n_max > cap:
        raise UsageError(f"--n-max={n_max} exceeds the {what} cap n <= {cap}")


# ---------------------------------------------------------------------------
# table


def cmd_table(args: argparse.Namespace) -> int:
    n_max = args.n_max if args.n_max is not None else 8
    _check_n(n_max, MAX_TABLE_N, "table")
    grid = _grid(args)
    rows: list[dict] = []
    if args.kind == "gstirling":
        columns = ["alpha", "beta", "r", "n"] + [f"k{k}" for k in range(n_max + 1)]
        for a in grid.alpha:
            for b in grid.m:
                for r in grid.r:
                    tri = gstirling_table(GStirlingParams(a, b, r), n_max)
                    for n in range(n_max + 1):
                        row = {"alpha": a, "beta": b, "r": r, "n": n}
                        row.update({f"k{k}": tri(n, k) if k <= n else 0 for k in range(n_max + 1)})
                        rows.append(row)
    elif args.kind == "gbell":
        columns = ["alpha", "beta", "r", "n", "poly"]
        for a in grid.alpha:
            for b in grid.m:
                for r in grid.r:
                    for n in range(n_max + 1):
                        rows.append({"alpha": a, "beta": b, "r": r, "n": n, "poly": str(bell_x(n, a, b, r))})
    elif args.kind == "dowling":
        columns = ["alpha", "m", "r", "n", "poly"]
        for a in grid.alpha:
            for m in grid.m:
                for r in grid.r:
                    params = DowlingParams(m, r, a)
                    for n in range(n_max + 1):
                        rows.append({"alpha": a, "m": m, "r": r, "n": n, "poly": str(dowling_poly(n, params))})
    else:
        if any(l < 0 for l in args.l):
            raise UsageError("--l values must be non-negative")
        columns = ["l", "n", "count", "printed_closed_form"]
        for l in args.l:
            series = hz_bpa(l, n_max)
            for n in range(n_max + 1):
                rows.append({
                    "l": l, "n": n, "count": series.integers()[n],
                    "printed_closed_form": bpa_closed_form(n, l, printed=True),
                })
    doc = {"schema": SCHEMA, "command": "table", "config": _config(args), "columns": columns, "rows": rows}
    _emit(_render(args.format, rows, columns, doc), args.out)
    return 0


# ---------------------------------------------------------------------------
# check

SUITES = ("bell", "dowling", "unfair", "all")


def _unfair_report(n_max: int, grid: Grid) -> IdentityReport:
    report = IdentityReport()
    if grid.is_empty():
        return report
    for a in grid.alpha:
        for m in grid.m:
            for r in grid.r:
                report.extend(check_unfair_identities(n_max, a, m, r).results)
    return report


def cmd_check(args: argparse.Namespace) -> int:
    n_max = args.n_max if args.n_max is not None else 12
    _check_n(n_max, MAX_CHECK_N, "identity-check")
    grid = _grid(args)
    suites = ("bell", "dowling", "unfair") if args.suite == "all" else (args.suite,)
    identities: dict = {}
    adjudications: dict = {}
    ok = True
    catalogs = {"bell": (BELL_CATALOG, check_bell_identities), "dowling": (DOWLING_CATALOG, check_dowling_identities)}
    empty = grid.is_empty()
    for suite in suites:
        if suite == "unfair":
            report = _unfair_report(n_max, grid)
            for ident in report.identities():
                identities[ident] = {
                    "id": ident,
                    "flagged": False,
                    "verdict": report.verdict(ident),
                    "checked": report.summary(ident),
                }
            ok = ok and report.all_pass()
            continue
        catalog, run = catalogs[suite]
        report = run(None, n_max, grid)
        for ident in report.identities():
            identities[ident] = describe(catalog[ident], report)
        ok = ok and contract_ok(catalog, report)
        if empty:
            continue
        if suite == "bell":
            adjudications["bell_generating_function"] = egf_adjudication(n_max, grid)
        if suite == "dowling":
            adjudications["D9"] = d9_adjudication(report)
    if args.suite == "all" and not empty:
        bpa = bpa_adjudication()
        bpa.pop("rows")
        adjudications["barred_arrangements"] = bpa
        adjudications["special_cases"] = special_case_adjudication()
        adjudications["W_transcription"] = transcription_report(10)
        adjudications["integrands"] = integrand_adjudication()
        adjudications["theta_power_vs_dowling_order"] = order_reconciliation(6, DowlingParams(1, 1, 0), 1)
    doc = {
        "schema": SCHEMA,
        "command": "check",
        "config": _config(args),
        "identities": identities,
        "adjudications": adjudications,
        "contract": {
            "ok": ok,
            "rule": "every non-flagged identity passes as printed; every flagged identity's corrected form passes",
        },
    }
    rows = [
        {
            "identity": k,
            "flagged": v["flagged"],
            "verdict": v["verdict"],
            "corrected": v.get("corrected", {}).get("verdict", ""),
            "instances": v["checked"]["instances"],
            "mismatches": v["checked"]["mismatch_count"],
        }
        for k, v in identities.items()
    ]
    columns = ["identity", "flagged", "verdict", "corrected", "instances", "mismatches"]
    _emit(_render(args.format, rows, columns, doc), args.out)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# asymptotic


def cmd_asymptotic(args: argparse.Namespace) -> int:
    if not args.x or len(args.x) != 1:
        raise UsageError("asymptotic takes a single --x value")
    for name in ("m", "r", "alpha"):
        if len(getattr(args, name)) != 1:
            raise UsageError(f"asymptotic takes a single --{name} value")
    if any(n < 0 or n > MAX_ASYMPTOTIC_N for n in args.n):
        raise UsageError(f"--n values must lie in 0..{MAX_ASYMPTOTIC_N} (the series truncation cap)")
    if any(e < 0 for e in args.e_max):
        raise UsageError("--e-max values must be non-negative")
    (m,), (r,), (a,), (x0,) = args.m, args.r, args.alpha, args.x
    params = DowlingParams(m, r, a)
    rows = []
    for n in args.n:
        for lam in args.lam:
            for e_max in args.e_max:
                try:
                    est = dowling_asymptotic(n, lam, e_max, params, x0)
                except AsymptoticRangeError as exc:
                    raise UsageError(str(exc))
                rows.append({"n": n, "lambda": lam, "e_max": e_max, "estimate": str(est.value),
                             "exact": str(est.exact), "rel_error": str(est.rel_error)})
    columns = ["n", "lambda", "e_max", "estimate", "exact", "rel_error"]
    doc = {
        "schema": SCHEMA,
        "command": "asymptotic",
        "config": _config(args),
        "rows": rows,
        "adjudications": {
            "W_transcription": transcription_report(10),
            "theta_power_vs_dowling_order": order_reconciliation(6, params, x0),
        },
    }
    _emit(_render(args.format, rows, columns, doc), args.out)
    return 0


# ---------------------------------------------------------------------------
# quad


def cmd_quad(args: argparse.Namespace) -> int:
    if args.nodes < 2 * PANEL_POINTS or args.nodes % PANEL_POINTS:
        raise UsageError(f"--nodes must be a multiple of {PANEL_POINTS} and at least {2 * PANEL_POINTS}")
    rows = casado_rows() + bell_rows(args.nodes) + dowling_rows(args.nodes)
    columns = ["kind", "j", "n", "x", "lambda", "m", "r", "exact", "value", "est_abs_error",
               "rel_error", "printed_value", "printed_rel_error"]
    doc = {
        "schema": SCHEMA,
        "command": "quad",
        "config": _config(args),
        "rows": rows,
        "adjudications": {"integrands": integrand_adjudication(nodes=args.nodes)},
    }
    _emit(_render(args.format, rows, columns, doc), args.out)
    return 0


# ---------------------------------------------------------------------------
# oracle-diff

ORACLE_CAPS = {
    "stirling": MAX_SET_PARTITION_N,
    "rwhitney": MAX_COLORED_N,
    "dowling": MAX_COLORED_N,
    "bpa": MAX_BPA_N,
}


def _diff_row(kind: str, key: dict, oracle: int, algebra: int) -> dict:
    return {"kind": kind, "key": json.dumps(key, sort_keys=True), "oracle": oracle,
            "algebra": algebra, "diff": algebra - oracle}


def cmd_oracle_diff(args: argparse.Namespace) -> int:
    n_max = args.n_max if args.n_max is not None else 6
    kinds = tuple(ORACLE_CAPS) if args.kind == "all" else (args.kind,)
    for kind in kinds:
        _check_n(n_max, ORACLE_CAPS[kind], f"{kind} enumeration")
    grid = _grid(args)
    rows: list[dict] = []
    if "stirling" in kinds:
        counts: dict[tuple[int, int], int] = {}
        for n in range(n_max + 1):
            for part in enum_set_partitions(n):
                counts[(n, len(part))] = counts.get((n, len(part)), 0) + 1
        tri = gstirling_table(GStirlingParams(0, 1, 0), n_max)
        for n in range(n_max + 1):
            for k in range(n + 1):
                rows.append(_diff_row("stirling", {"n": n, "k": k}, counts.get((n, k), 0), tri(n, k)))
    if "rwhitney" in kinds:
        for b in grid.m:
            for r in grid.r:
                tri = gstirling_table(GStirlingParams(0, b, r), n_max)
                for n in range(n_max + 1):
                    for k in range(n + 1):
                        rows.append(_diff_row("rwhitney", {"beta": b, "r": r, "n": n, "k": k},
                                              count_rwhitney(n, k, b, r), tri(n, k)))
    if "dowling" in kinds:
        if any(v < 1 for v in args.x + args.lam):
            raise UsageError("--x and --lambda values must be positive for enumeration")
        for m in grid.m:
            for r in grid.r:
                for n in range(n_max + 1):
                    poly = dowling_poly(n, DowlingParams(m, r, 0))
                    for x0 in args.x:
                        for l0 in args.lam:
                            rows.append(_diff_row("dowling", {"m": m, "r": r, "x": x0, "lambda": l0, "n": n},
                                                  count_rmxl(n, m, r, x0, l0), poly(x0, l0)))
    if "bpa" in kinds:
        for l in args.l:
            if not 0 <= l <= MAX_BPA_L:
                raise UsageError(f"--l={l} outside the barred-arrangement cap 0 <= l <= {MAX_BPA_L}")
            series = hz_bpa(l, n_max).integers()
            for n in range(n_max + 1):
                rows.append(_diff_row("bpa", {"l": l, "n": n}, enum_bpa_count(n, l), series[n]))
    nonzero = [r for r in rows if r["diff"]]
    columns = ["kind", "key", "oracle", "algebra", "diff"]
    doc = {
        "schema": SCHEMA,
        "command": "oracle-diff",
        "config": _config(args),
        "compared": len(rows),
        "nonzero_diffs": len(nonzero),
        "rows": rows,
    }
    _emit(_render(args.format, rows, columns, doc), args.out)
    return 1 if nonzero else 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dowling-kit",
        description="Generalized Stirling numbers, Bell and higher-order r-Dowling polynomials.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, fmt: str) -> None:
        p.add_argument("--n-max", type=int, default=None)
        p.add_argument("--m", type=int_list, default=(1, 2, 3), help="m (or beta) values")
        p.add_argument("--r", type=int_list, default=(0, 1, 2))
        p.add_argument("--alpha", type=int_list, default=(0, 1, 2))
        p.add_argument("--x", type=int_list, default=(1, 2, 3))
        p.add_argument("--lambda", dest="lam", type=int_list, default=(1, 2, 3))
        p.add_argument("--l", type=int_list, default=(0, 1, 2), help="bar counts for bpa")
        p.add_argument("--format", choices=("csv", "json", "pretty"), default=fmt)
        p.add_argument("--out", default=None, help="output path (default: stdout)")

    p = sub.add_parser("table", help="tables of S, B, D or barred arrangement counts")
    common(p, "csv")
    p.add_argument("--kind", choices=("gstirling", "gbell", "dowling", "bpa"), required=True)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="identity report; exit 1 if the contract fails")
    common(p, "json")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("asymptotic", help="large-lambda expansion against exact coefficients")
    common(p, "csv")
    p.set_defaults(func=cmd_asymptotic, m=(1,), r=(0,), alpha=(0,), x=(1,), lam=(100, 1000, 10000))
    p.add_argument("--n", type=int_list, default=(3, 5))
    p.add_argument("--e-max", type=int_list, default=(0, 1, 2, 3, 4))

    p = sub.add_parser("quad", help="integral representations by Gauss-Legendre quadrature")
    common(p, "csv")
    p.add_argument("--nodes", type=int, default=DEFAULT_NODES)
    p.set_defaults(func=cmd_quad)

    p = sub.add_parser("oracle-diff", help="enumeration against algebra; exit 1 on any difference")
    common(p, "csv")
    p.add_argument("--kind", choices=("all",) + tuple(ORACLE_CAPS), default="all")
    p.set_defaults(func=cmd_oracle_diff)
    return parser


def main(argv: Iterable[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(None if argv is None else list(argv))
    try:
        return args.func(args)
    except (UsageError, EnumerationRangeError, ExcludedParameters) as exc:
        print(f"dowling-kit: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
