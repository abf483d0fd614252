from __future__ import annotations

from dowling_kit.exact import X, BiPoly
from dowling_kit.identities import Grid, slot_bindings
from dowling_kit.report import EMPTY, MISMATCH, PASS, IdentityReport, compare


def test_compare_records_residual():
    ok = compare("T", 2, {"m": 1}, X + 1, 1 + X)
    bad = compare("T", 3, {"m": 1}, X * 2, X)
    assert ok.verdict == PASS and ok.residual is None
    assert bad.verdict == MISMATCH and bad.residual == "x"


def test_report_aggregation():
    rep = IdentityReport()
    assert rep.verdict("T") == EMPTY
    rep.add(compare("T", 0, {}, BiPoly.const(1), BiPoly.const(1)))
    rep.add(compare("T", 1, {}, X, X, reading="corrected"))
    assert rep.verdict("T") == PASS
    rep.add(compare("T", 1, {}, X, BiPoly.const(0)))
    assert rep.verdict("T") == MISMATCH
    assert rep.verdict("T", reading="corrected") == PASS
    summ = rep.summary("T")
    assert summ["per_n"] == {"0": PASS, "1": MISMATCH}
    assert summ["mismatch_count"] == 1 and not rep.all_pass()


def test_slot_bindings_cover_permutations():
    names = {b.slots for b in slot_bindings("alpha", "m")}
    assert len(names) == 6
    assert ("alpha", "m", "0") in names
    assert slot_bindings("m", "m", "0")[0].resolve({"m": 4}) == (4, 4, 0)


def test_grid():
    assert Grid(m=()).is_empty()
    assert {p["alpha"] for p in Grid().points(degenerate=False)} == {0}
    assert len(list(Grid().points(degenerate=True))) == 27
