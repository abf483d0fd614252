"""Pure-Python enumeration kernels; same contract as the compiled ``_ckernels``."""
from __future__ import annotations

from itertools import combinations_with_replacement, permutations

MAX_BPA_N = 10
MAX_PARTITION_SIZE = 14


def _rgs(size: int, forced: int):
    """Restricted growth strings of length ``size`` whose first ``forced``
    entries are 0, 1, ..., forced-1 (so those elements sit in distinct blocks).

    Yields (labels, block_count); ``labels`` is reused between yields.
    """
    labels = list(range(forced)) + [0] * (size - forced)

    def rec(pos: int, blocks: int):
        if pos == size:
            yield labels, blocks
            return
        for b in range(blocks + 1):
            labels[pos] = b
            yield from rec(pos + 1, blocks + (b == blocks))

    yield from rec(forced, forced)


def bpa_count(n: int, l: int) -> int:
    """Count barred preferential arrangements of [n] with l bars one by one.

    Every set partition, every ordering of its blocks and every placement of
    the l identical bars among the ordered blocks is generated.
    """
    if n < 0 or l < 0:
        raise ValueError("n and l must be non-negative")
    if n > MAX_BPA_N:
        raise ValueError(f"n={n} exceeds the enumeration cap {MAX_BPA_N}")
    total = 0
    for _, k in _rgs(n, 0):
        for _order in permutations(range(k)):
            total += len(list(combinations_with_replacement(range(k + 1), l)))
    return total


def colored_partition_counts(n: int, r: int, m: int) -> list[int]:
    """Weighted counts of partitions of [n+r] with 1..r in distinct blocks.

    Entry k sums, over partitions with exactly k non-distinguished blocks, the
    product of m^(size-1) over those blocks.
    """
    if n < 0 or r < 0 or m < 0:
        raise ValueError("n, r and m must be non-negative")
    if n + r > MAX_PARTITION_SIZE:
        raise ValueError(f"n + r = {n + r} exceeds the enumeration cap {MAX_PARTITION_SIZE}")
    counts = [0] * (n + 1)
    for labels, blocks in _rgs(n + r, r):
        sizes = [0] * blocks
        for b in labels:
            sizes[b] += 1
        weight = 1
        for size in sizes[r:]:
            weight *= m ** (size - 1)
        counts[blocks - r] += weight
    return counts
