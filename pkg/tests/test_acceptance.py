"""Acceptance criteria 1-9, one test (or parametrized family) per criterion.

The terminal summary prints one pass/fail line per criterion.
"""
from __future__ import annotations

import json
import subprocess
import sys
import time

import pytest

from dowling_kit import cli
from dowling_kit.adjudications import bpa_adjudication, special_case_adjudication
from dowling_kit.asymptotics import dowling_asymptotic, theta_power_coeff
from dowling_kit.dowling import (
    DOWLING_CATALOG,
    _d,
    DowlingParams,
    check_dowling_identities,
    d9_adjudication,
    dowling_poly,
)
from dowling_kit.gbell import BELL_CATALOG, bell_x, check_bell_identities
from dowling_kit.gstirling import (
    GStirlingParams,
    check_unfair_identities,
    gstirling_egf_column,
    gstirling_explicit,
    gstirling_table,
    special_case,
)
from dowling_kit.hurwitz import hz_bpa
from dowling_kit.identities import Grid, contract_ok, printed_verdict
from dowling_kit.integral import (
    BELL_GRID,
    DOWLING_GRID,
    bell_integral,
    casado_check,
    casado_exact,
    dowling_integral,
    rel_error,
)
from dowling_kit.oracle import count_rmxl, count_rwhitney, enum_bpa_count, enum_set_partitions
from dowling_kit.report import PASS

ALPHAS, BETAS, RS = (0, 1, 2), (1, 2, 3), (0, 1, 2)


@pytest.mark.criterion(1, "Stirling triangle equals set-partition enumeration, n <= 10")
def test_c1_stirling_vs_set_partitions():
    counts: dict[tuple[int, int], int] = {}
    for n in range(11):
        for part in enum_set_partitions(n):
            counts[(n, len(part))] = counts.get((n, len(part)), 0) + 1
    tri = gstirling_table(GStirlingParams(0, 1, 0), 10)
    diffs = [(n, k) for n in range(11) for k in range(n + 1) if tri(n, k) != counts.get((n, k), 0)]
    assert diffs == []


@pytest.mark.criterion(2, "r-Whitney special case equals colored-partition enumeration, n <= 7")
def test_c2_rwhitney_vs_enumeration():
    diffs = [
        (b, r, n, k)
        for b in BETAS
        for r in RS
        for n in range(8)
        for k in range(n + 1)
        if special_case("r-whitney", n, k, beta=b, r=r) != count_rwhitney(n, k, b, r)
    ]
    assert diffs == []
    # the table's own sign for r is recorded as a finding, not used
    assert special_case_adjudication()["r-whitney"]["used_verdict"] == PASS


@pytest.mark.criterion(3, "Dowling polynomial at integer x, lambda equals (r,m,x,lambda)-partition count, n <= 7")
def test_c3_dowling_vs_enumeration():
    diffs = []
    for m in (1, 2, 3):
        for r in RS:
            for n in range(8):
                poly = dowling_poly(n, DowlingParams(m, r, 0))
                for x0 in (1, 2, 3):
                    for l0 in (1, 2, 3):
                        if poly(x0, l0) != count_rmxl(n, m, r, x0, l0):
                            diffs.append((m, r, n, x0, l0))
    assert diffs == []


@pytest.mark.criterion(4, "barred arrangements: enumeration equals 1/(2-e^z)^(l+1); printed closed form reported")
def test_c4_barred_arrangements():
    for l in range(5):
        series = hz_bpa(l, 8).integers()
        assert [enum_bpa_count(n, l) for n in range(9)] == series
    report = bpa_adjudication(8, 4)
    assert report["egf_verdict"] == PASS
    assert "printed_verdict" in report and "printed_first_mismatch" in report
    # l = 0 is the ordered-partition case where the printed binomial collapses to 0
    assert report["printed_verdict"] == "MISMATCH"
    assert report["printed_first_mismatch"]["l"] == 0


@pytest.mark.criterion(5, "recurrence, explicit sum and column EGF agree exactly, n <= 16, full grid")
@pytest.mark.parametrize("alpha", ALPHAS)
def test_c5_three_routes(alpha):
    bad = []
    for beta in BETAS:
        for r in RS:
            p = GStirlingParams(alpha, beta, r)
            tri = gstirling_table(p, 16)
            for k in range(17):
                col = gstirling_egf_column(k, p, 16).integers()
                for n in range(17):
                    rec = tri(n, k) if k <= n else 0
                    exp_ = gstirling_explicit(n, k, p)
                    if not rec == exp_ == col[n]:
                        bad.append((beta, r, n, k, rec, exp_, col[n]))
    assert bad == []


@pytest.fixture(scope="module")
def identity_reports():
    grid = Grid()
    return {
        "bell": check_bell_identities(None, 12, grid),
        "dowling": check_dowling_identities(None, 12, grid),
    }


MUST_PASS_AS_PRINTED = [
    ("bell", "B1"), ("bell", "B2"), ("bell", "B3"),
    ("dowling", "D1"), ("dowling", "D2"), ("dowling", "D3"), ("dowling", "D4"),
    ("dowling", "D5"), ("dowling", "D6"), ("dowling", "D7"), ("dowling", "D8"),
    ("dowling", "D10"), ("dowling", "D11"),
    ("dowling", "G1"), ("dowling", "G2"), ("dowling", "G3"),
]
MUST_PASS_FROZEN = [("bell", "B4"), ("bell", "B5"), ("bell", "B6"), ("bell", "B7")]
CATALOGS = {"bell": BELL_CATALOG, "dowling": DOWLING_CATALOG}


@pytest.mark.criterion(6, "identity suite passes, D9 reported and grid-consistent, exit code follows contract")
@pytest.mark.parametrize("suite,ident", MUST_PASS_AS_PRINTED + MUST_PASS_FROZEN,
                         ids=[i for _, i in MUST_PASS_AS_PRINTED + MUST_PASS_FROZEN])
def test_c6_identity_as_printed(identity_reports, suite, ident):
    report = identity_reports[suite]
    assert printed_verdict(CATALOGS[suite][ident], report) == PASS, report.mismatches(ident)[:3]


@pytest.mark.criterion(6, "identity suite passes, D9 reported and grid-consistent, exit code follows contract")
@pytest.mark.parametrize("alpha", ALPHAS)
def test_c6_unfair_identities(alpha):
    for m in (1, 2, 3):
        for r in RS:
            report = check_unfair_identities(12, alpha, m, r)
            assert report.all_pass(), report.mismatches()[:3]


@pytest.mark.criterion(6, "identity suite passes, D9 reported and grid-consistent, exit code follows contract")
def test_c6_d9_grid_consistent(identity_reports):
    adj = d9_adjudication(identity_reports["dowling"])
    assert adj["verdict"] in ("PASS", "MISMATCH")
    assert adj["grid_consistent"]


@pytest.mark.criterion(6, "identity suite passes, D9 reported and grid-consistent, exit code follows contract")
def test_c6_exit_code_follows_contract(identity_reports, tmp_path, capsys):
    out = tmp_path / "check.json"
    code = cli.main(["check", "--suite", "all", "--out", str(out)])
    doc = json.loads(out.read_text())
    expected_ok = (
        contract_ok(BELL_CATALOG, identity_reports["bell"])
        and contract_ok(DOWLING_CATALOG, identity_reports["dowling"])
        and all(v["verdict"] == PASS for k, v in doc["identities"].items() if k.startswith("Unfair"))
    )
    assert doc["contract"]["ok"] == expected_ok
    assert code == (0 if expected_ok else 1)
    assert "D9" in doc["adjudications"]


@pytest.mark.criterion(7, "integral representations within tolerance; integrand adjudication in output")
def test_c7_casado():
    worst = max(
        rel_error(casado_check(j, n, 512).value, casado_exact(j, n))
        for j in range(7)
        for n in range(1, 9)
    )
    assert worst <= 1e-10


@pytest.mark.criterion(7, "integral representations within tolerance; integrand adjudication in output")
def test_c7_bell_and_dowling_integrals():
    worst = 0.0
    for m in BELL_GRID["m"]:
        for r in BELL_GRID["r"]:
            for x0 in BELL_GRID["x"]:
                for n in BELL_GRID["n"]:
                    exact = bell_x(n, 0, m, r).eval(x0, 0)
                    worst = max(worst, rel_error(bell_integral(n, x0, m, r).value, exact))
                    for l0 in DOWLING_GRID["lambda"]:
                        exact = _d(n, m, r, 0).eval(x0, l0)
                        worst = max(worst, rel_error(dowling_integral(n, x0, l0, m, r).value, exact))
    assert worst <= 1e-7


@pytest.mark.criterion(7, "integral representations within tolerance; integrand adjudication in output")
def test_c7_adjudication_in_output(tmp_path):
    out = tmp_path / "quad.json"
    assert cli.main(["quad", "--format", "json", "--out", str(out)]) == 0
    adj = json.loads(out.read_text())["adjudications"]["integrands"]
    for kind in ("bell", "dowling"):
        assert adj[kind]["corrected_verdict"] == PASS
        assert {"printed_integrand", "printed_verdict", "corrected_integrand"} <= set(adj[kind])


BASE = DowlingParams(1, 0, 0)
LAMBDAS = (10**2, 10**3, 10**4)


def _strictly_decreasing(xs) -> bool:
    return all(a > b for a, b in zip(xs, xs[1:]))


@pytest.mark.criterion(8, "asymptotic relative error strictly decreasing in lambda and in e_max")
@pytest.mark.parametrize("n", (3, 5))
def test_c8_decreasing_in_lambda(n):
    errs = [dowling_asymptotic(n, lam, 4, BASE, 1).rel_error for lam in LAMBDAS]
    assert _strictly_decreasing(errs), errs


@pytest.mark.criterion(8, "asymptotic relative error strictly decreasing in lambda and in e_max")
@pytest.mark.parametrize("n", (3, 5))
def test_c8_decreasing_in_e_max(n):
    errs = [dowling_asymptotic(n, 10**4, e, BASE, 1).rel_error for e in range(5)]
    assert _strictly_decreasing(errs), errs


@pytest.mark.criterion(8, "asymptotic relative error strictly decreasing in lambda and in e_max")
def test_c8_reference_is_binary_powering():
    est = dowling_asymptotic(5, 10**4, 4, BASE, 1)
    assert est.exact == theta_power_coeff(5, 10**4, BASE, 1)
    # with m=1, r=0, x=1 the n-th coefficient of Theta^lambda is the Touchard value B_n(lambda)
    assert est.exact == _d(5, 1, 0, 0).eval(1, 10**4)


DETERMINISM_RUNS = [
    ["table", "--kind", "gstirling", "--n-max", "10"],
    ["table", "--kind", "dowling", "--n-max", "6", "--format", "json"],
    ["table", "--kind", "bpa", "--n-max", "8", "--l", "0,1,2,3,4"],
    ["check", "--suite", "all"],
    ["asymptotic", "--format", "json"],
    ["quad"],
    ["oracle-diff", "--n-max", "6"],
]


@pytest.mark.criterion(9, "repeated CLI runs byte-identical; full suite under 5 minutes")
def test_c9_determinism_and_wall_clock(tmp_path, elapsed):
    start = time.perf_counter()
    for i, argv in enumerate(DETERMINISM_RUNS):
        outputs = []
        for rep in range(2):
            path = tmp_path / f"run{i}_{rep}.out"
            proc = subprocess.run(
                [sys.executable, "-m", "dowling_kit.cli", *argv, "--out", str(path)],
                capture_output=True,
            )
            assert proc.returncode in (0, 1), proc.stderr
            outputs.append(path.read_bytes())
        assert outputs[0] == outputs[1], argv
        assert b"\r" not in outputs[0]
    assert time.perf_counter() - start < 300
    assert elapsed() < 300
