"""Identity catalogs: statements checked coefficient-wise over a parameter grid.

Each :class:`Identity` produces the two sides of its printed statement as
exact polynomials. Where a polynomial factor is written with an ambiguous
argument list, every candidate :class:`Binding` is evaluated and the frozen
one decides the verdict. Statements known to be misprinted carry a note and a
derived corrected form; both are always evaluated.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Callable, Iterable, Iterator

from .exact import BiPoly
from .gstirling import ExcludedParameters
from .report import EMPTY, MISMATCH, PASS, IdentityReport, compare

Sides = Callable[..., tuple[BiPoly, BiPoly]]


@dataclass(frozen=True)
class Binding:
    """Assignment of printed argument tokens to the (alpha, beta, r) slots."""

    slots: tuple[str, str, str]

    @property
    def name(self) -> str:
        a, b, r = self.slots
        return f"B(x; alpha={a}, beta={b}, r={r})"

    def resolve(self, ctx: dict[str, int]) -> tuple[int, int, int]:
        return tuple(_token(t, ctx) for t in self.slots)  # type: ignore[return-value]


def _token(tok: str, ctx: dict[str, int]) -> int:
    if tok.lstrip("-").isdigit():
        return int(tok)
    if tok.startswith("-"):
        return -ctx[tok[1:]]
    return ctx[tok]


def slot_bindings(*tokens: str) -> tuple[Binding, ...]:
    """All distinct placements of the printed tokens (padded with 0)."""
    padded = list(tokens) + ["0"] * (3 - len(tokens))
    seen: dict[tuple[str, str, str], None] = {}
    for perm in permutations(padded):
        seen.setdefault(perm, None)
    return tuple(Binding(p) for p in seen)


@dataclass(frozen=True)
class Identity:
    id: str
    statement: str
    sides: Sides
    degenerate: bool = False
    bindings: tuple[Binding, ...] = ()
    frozen: Binding | None = None
    erratum: str | None = None
    corrected: Sides | None = None
    corrected_statement: str | None = None
    readings: tuple[tuple[str, Sides], ...] = ()
    expand: Callable[[dict[str, int]], Iterable[dict[str, int]]] | None = None

    @property
    def flagged(self) -> bool:
        return self.erratum is not None


@dataclass(frozen=True)
class Grid:
    m: tuple[int, ...] = (1, 2, 3)
    r: tuple[int, ...] = (0, 1, 2)
    alpha: tuple[int, ...] = (0, 1, 2)

    def is_empty(self) -> bool:
        return not (self.m and self.r and self.alpha)

    def points(self, degenerate: bool) -> Iterator[dict[str, int]]:
        alphas = self.alpha if degenerate else (0,)
        for m in self.m:
            for r in self.r:
                for alpha in alphas:
                    yield {"m": m, "r": r, "alpha": alpha}


def _eval(fn: Sides, n: int, ctx: dict[str, int], binding: Binding | None):
    try:
        return fn(n, ctx, binding)
    except ExcludedParameters:
        return None


def run_identity(ident: Identity, n_max: int, grid: Grid, report: IdentityReport) -> None:
    if grid.is_empty():
        return
    for base in grid.points(ident.degenerate):
        contexts = list(ident.expand(base)) if ident.expand else [base]
        for ctx in contexts:
            for n in range(n_max + 1):
                for binding in ident.bindings or (None,):
                    sides = _eval(ident.sides, n, ctx, binding)
                    if sides is None:
                        continue
                    report.add(
                        compare(ident.id, n, ctx, *sides, binding=binding.name if binding else None)
                    )
                if ident.corrected is not None:
                    sides = ident.corrected(n, ctx, ident.frozen)
                    report.add(compare(ident.id, n, ctx, *sides, reading="corrected"))
                for name, fn in ident.readings:
                    sides = fn(n, ctx, ident.frozen)
                    report.add(compare(ident.id, n, ctx, *sides, reading=name))


def run_catalog(
    catalog: dict[str, Identity], ids: Iterable[str], n_max: int, grid: Grid
) -> IdentityReport:
    report = IdentityReport()
    for ident_id in ids:
        if ident_id not in catalog:
            raise KeyError(f"unknown identity {ident_id!r}; known: {sorted(catalog)}")
        run_identity(catalog[ident_id], n_max, grid, report)
    return report


def printed_verdict(ident: Identity, report: IdentityReport) -> str:
    binding = ident.frozen.name if ident.frozen else None
    return report.verdict(ident.id, reading="printed", binding=binding)


def describe(ident: Identity, report: IdentityReport) -> dict:
    """JSON-ready summary of one identity's checks."""
    frozen = ident.frozen.name if ident.frozen else None
    out: dict = {
        "id": ident.id,
        "statement": ident.statement,
        "flagged": ident.flagged,
        "verdict": printed_verdict(ident, report),
        "checked": report.summary(ident.id, reading="printed", binding=frozen),
    }
    if ident.bindings:
        out["frozen_binding"] = frozen
        out["bindings"] = {
            b.name: report.verdict(ident.id, reading="printed", binding=b.name)
            for b in ident.bindings
        }
        out["verifying_bindings"] = [
            name for name, v in out["bindings"].items() if v == PASS
        ]
    if ident.erratum:
        out["erratum"] = ident.erratum
    if ident.corrected is not None:
        out["corrected"] = {
            "statement": ident.corrected_statement,
            "verdict": report.verdict(ident.id, reading="corrected"),
        }
    if ident.readings:
        out["readings"] = {name: report.verdict(ident.id, reading=name) for name, _ in ident.readings}
    return out


def contract_ok(catalog: dict[str, Identity], report: IdentityReport) -> bool:
    """Exit-code contract: every non-flagged identity passes as printed, and
    every flagged identity's corrected form passes."""
    for ident_id in report.identities():
        ident = catalog[ident_id]
        if ident.flagged:
            if ident.corrected is not None and report.verdict(ident_id, reading="corrected") == MISMATCH:
                return False
        elif printed_verdict(ident, report) not in (PASS, EMPTY):
            return False
    return True


__all__ = [
    "Binding",
    "Grid",
    "Identity",
    "contract_ok",
    "describe",
    "printed_verdict",
    "run_catalog",
    "run_identity",
    "slot_bindings",
]
