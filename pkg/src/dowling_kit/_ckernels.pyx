# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled enumeration kernels; same contract as ``_pykernels``."""

MAX_BPA_N = 10
MAX_PARTITION_SIZE = 14

cdef enum:
    MAXN = 16

# Bell numbers B_0..B_14, to bound weighted sums before using 64-bit counters
_BELL = (1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570,
         4213597, 27644437, 190899322)


cdef unsigned long long _count_bar_placements(int k, int l) nogil:
    # odometer over non-decreasing sequences 0 <= b_1 <= ... <= b_l <= k
    cdef int pos[MAXN]
    cdef int i, j
    cdef unsigned long long count = 0
    if l == 0:
        return 1
    for i in range(l):
        pos[i] = 0
    while True:
        count += 1
        i = l - 1
        while i >= 0 and pos[i] == k:
            i -= 1
        if i < 0:
            break
        pos[i] += 1
        for j in range(i + 1, l):
            pos[j] = pos[i]
    return count


cdef unsigned long long _count_orderings(int k, int l) nogil:
    # Heap's algorithm over the k! orderings of the blocks
    cdef int perm[MAXN]
    cdef int c[MAXN]
    cdef int i, tmp
    cdef unsigned long long count = 0
    for i in range(k):
        perm[i] = i
        c[i] = 0
    count += _count_bar_placements(k, l)
    i = 1
    while i < k:
        if c[i] < i:
            if i % 2 == 0:
                tmp = perm[0]; perm[0] = perm[i]; perm[i] = tmp
            else:
                tmp = perm[c[i]]; perm[c[i]] = perm[i]; perm[i] = tmp
            count += _count_bar_placements(k, l)
            c[i] += 1
            i = 1
        else:
            c[i] = 0
            i += 1
    return count


cdef unsigned long long _bpa_rec(int pos, int n, int blocks, int l) nogil:
    cdef int b
    cdef unsigned long long total = 0
    if pos == n:
        return _count_orderings(blocks, l)
    for b in range(blocks + 1):
        total += _bpa_rec(pos + 1, n, blocks + (b == blocks), l)
    return total


def bpa_count(int n, int l):
    """Count barred preferential arrangements of [n] with l bars one by one."""
    cdef unsigned long long total
    if n < 0 or l < 0:
        raise ValueError("n and l must be non-negative")
    if n > MAX_BPA_N:
        raise ValueError(f"n={n} exceeds the enumeration cap {MAX_BPA_N}")
    if l >= MAXN:
        raise ValueError(f"l={l} exceeds the kernel limit {MAXN - 1}")
    with nogil:
        total = _bpa_rec(0, n, 0, l)
    return int(total)


cdef void _colored_rec(int pos, int size, int r, int blocks, long long m,
                       int* sizes, long long* counts) nogil:
    cdef int b, s
    cdef long long weight
    if pos == size:
        weight = 1
        for b in range(r, blocks):
            for s in range(sizes[b] - 1):
                weight *= m
        counts[blocks - r] += weight
        return
    for b in range(blocks + 1):
        sizes[b] += 1
        _colored_rec(pos + 1, size, r, blocks + (b == blocks), m, sizes, counts)
        sizes[b] -= 1


def colored_partition_counts(int n, int r, long long m):
    """Weighted counts of partitions of [n+r] with 1..r in distinct blocks."""
    cdef int sizes[MAXN]
    cdef long long counts[MAXN]
    cdef int i
    if n < 0 or r < 0 or m < 0:
        raise ValueError("n, r and m must be non-negative")
    if n + r > MAX_PARTITION_SIZE:
        raise ValueError(f"n + r = {n + r} exceeds the enumeration cap {MAX_PARTITION_SIZE}")
    if int(m) ** n * _BELL[n + r] >= 2 ** 63:
        raise OverflowError(f"weighted count for n={n}, r={r}, m={m} may exceed 64 bits")
    for i in range(MAXN):
        sizes[i] = 0
        counts[i] = 0
    for i in range(r):
        sizes[i] = 1
    with nogil:
        _colored_rec(r, n + r, r, r, m, sizes, counts)
    return [counts[i] for i in range(n + 1)]
