"""Brute-force enumeration of the combinatorial models.

These counts are ground truth for the algebraic routes: nothing here calls
the recurrences, explicit formulas or generating functions.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations_with_replacement, permutations
from typing import Iterator

from . import kernels

MAX_SET_PARTITION_N = 12
MAX_BPA_N = 8
MAX_BPA_L = 4
MAX_COLORED_N = 7


class EnumerationRangeError(ValueError):
    """Requested size lies outside the exhaustive-enumeration caps."""


@dataclass(frozen=True)
class SetPartition:
    """Blocks sorted internally and ordered by their minima."""

    blocks: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.blocks)


@dataclass(frozen=True)
class BarredArrangement:
    """l+1 sections, each a (possibly empty) sequence of blocks."""

    sections: tuple[tuple[tuple[int, ...], ...], ...]

    def __str__(self) -> str:
        return "|".join(" ".join("".join(map(str, b)) for b in sec) for sec in self.sections)


def _cap(name: str, value: int, limit: int) -> None:
    if value > limit:
        raise EnumerationRangeError(f"{name}={value} exceeds the exhaustive cap {name} <= {limit}")


def enum_set_partitions(n: int) -> Iterator[SetPartition]:
    """Every set partition of {1..n} exactly once, in standard form."""
    if n < 0:
        raise EnumerationRangeError(f"n must be non-negative, got {n}")
    _cap("n", n, MAX_SET_PARTITION_N)

    def rec(i: int, blocks: list[list[int]]):
        if i > n:
            yield SetPartition(tuple(tuple(b) for b in blocks))
            return
        for b in blocks:
            b.append(i)
            yield from rec(i + 1, blocks)
            b.pop()
        blocks.append([i])
        yield from rec(i + 1, blocks)
        blocks.pop()

    yield from rec(1, [])


def iter_barred_arrangements(n: int, l: int) -> Iterator[BarredArrangement]:
    """Materialize every barred preferential arrangement (small n only)."""
    _cap("n", n, 6)
    if l < 0:
        raise EnumerationRangeError(f"l must be non-negative, got {l}")
    for part in enum_set_partitions(n):
        for ordered in permutations(part.blocks):
            k = len(ordered)
            for bars in combinations_with_replacement(range(k + 1), l):
                cuts = (0, *bars, k)
                yield BarredArrangement(
                    tuple(tuple(ordered[cuts[s] : cuts[s + 1]]) for s in range(l + 1))
                )


def enum_bpa_count(n: int, l: int) -> int:
    """Number of barred preferential arrangements of [n] with l bars."""
    if n < 0 or l < 0:
        raise EnumerationRangeError("n and l must be non-negative")
    _cap("n", n, MAX_BPA_N)
    _cap("l", l, MAX_BPA_L)
    return kernels.bpa_count(n, l)


def _colored_checks(n: int, m: int, r: int) -> None:
    if n < 0:
        raise EnumerationRangeError(f"n must be non-negative, got {n}")
    _cap("n", n, MAX_COLORED_N)
    if m < 1:
        raise EnumerationRangeError(f"m must be at least 1, got {m}")
    if r < 0:
        raise EnumerationRangeError(f"r must be non-negative, got {r}")


def count_rwhitney(n: int, k: int, m: int, r: int) -> int:
    """Colored partitions of [n+r] into k+r blocks, 1..r in distinct blocks.

    Each non-distinguished block contributes m^(size-1): every element other
    than its minimum carries one of m colors.
    """
    _colored_checks(n, m, r)
    if k < 0 or k > n:
        return 0
    return kernels.colored_partition_counts(n, r, m)[k]


def count_rmxl(n: int, m: int, r: int, x0: int, l0: int) -> int:
    """(r, m, x, lambda)-partitions of [n+r], weighted count.

    Every non-distinguished block additionally picks one of x0 colors and one
    of l0 sections.
    """
    _colored_checks(n, m, r)
    if x0 < 1 or l0 < 1:
        raise EnumerationRangeError("x and lambda must be positive")
    per_block = x0 * l0
    return sum(c * per_block**k for k, c in enumerate(kernels.colored_partition_counts(n, r, m)))
