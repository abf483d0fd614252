"""Verdict bookkeeping shared by the identity harnesses."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable

from .exact import BiPoly

PASS = "PASS"
MISMATCH = "MISMATCH"
EMPTY = "EMPTY"


@dataclass(frozen=True)
class CheckResult:
    identity: str
    n: int
    params: tuple[tuple[str, int], ...]
    verdict: str
    residual: str | None = None
    binding: str | None = None
    reading: str = "printed"

    def to_dict(self) -> dict:
        out = {"n": self.n, "params": dict(self.params), "verdict": self.verdict}
        if self.binding is not None:
            out["binding"] = self.binding
        if self.residual is not None:
            out["residual"] = self.residual
        return out


def compare(
    identity: str,
    n: int,
    params: dict[str, int],
    lhs: BiPoly,
    rhs: BiPoly,
    *,
    binding: str | None = None,
    reading: str = "printed",
) -> CheckResult:
    diff = lhs - rhs
    ok = diff.is_zero()
    return CheckResult(
        identity=identity,
        n=n,
        params=tuple(sorted(params.items())),
        verdict=PASS if ok else MISMATCH,
        residual=None if ok else str(diff),
        binding=binding,
        reading=reading,
    )


@dataclass
class IdentityReport:
    """Per-identity, per-instance verdicts with residuals on mismatch."""

    results: list[CheckResult] = field(default_factory=list)

    def add(self, result: CheckResult) -> None:
        self.results.append(result)

    def extend(self, results: Iterable[CheckResult]) -> None:
        self.results.extend(results)

    def identities(self) -> list[str]:
        seen: dict[str, None] = {}
        for res in self.results:
            seen.setdefault(res.identity, None)
        return list(seen)

    def select(
        self, identity: str, *, reading: str | None = "printed", binding: str | None = "*"
    ) -> list[CheckResult]:
        return [
            r
            for r in self.results
            if r.identity == identity
            and (reading is None or r.reading == reading)
            and (binding == "*" or r.binding == binding)
        ]

    def verdict(self, identity: str, *, reading: str = "printed", binding: str | None = "*") -> str:
        rows = self.select(identity, reading=reading, binding=binding)
        if not rows:
            return EMPTY
        return PASS if all(r.verdict == PASS for r in rows) else MISMATCH

    def mismatches(self, identity: str | None = None) -> list[CheckResult]:
        return [
            r
            for r in self.results
            if r.verdict == MISMATCH and (identity is None or r.identity == identity)
        ]

    def all_pass(self) -> bool:
        return all(r.verdict == PASS for r in self.results)

    def summary(self, identity: str, *, reading: str = "printed", binding: str | None = "*") -> dict:
        rows = self.select(identity, reading=reading, binding=binding)
        per_n: dict[int, str] = {}
        for r in rows:
            if r.verdict == MISMATCH:
                per_n[r.n] = MISMATCH
            else:
                per_n.setdefault(r.n, PASS)
        bad = [r.to_dict() for r in rows if r.verdict == MISMATCH]
        return {
            "verdict": self.verdict(identity, reading=reading, binding=binding),
            "instances": len(rows),
            "mismatch_count": len(bad),
            "per_n": {str(n): per_n[n] for n in sorted(per_n)},
            "mismatches": bad,
        }
