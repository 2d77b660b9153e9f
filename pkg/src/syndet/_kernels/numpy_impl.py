"""Pure-numpy implementations of the hot kernels.

Every function here must return bit-identical results to its twin in
``numba_impl``; the test suite and ``benchmarks/bench_backends.py`` check
that pairing on random inputs.
"""

import numpy as np

_FAR = np.int64(2**62)


def window_best_count(bits, n):
    """Best ones-count over all length-n windows of ``bits``.

    Returns ``(count, start)`` with the smallest achieving start index.
    Caller guarantees 1 <= n <= len(bits).
    """
    length = bits.shape[0]
    prefix = np.cumsum(bits, dtype=np.int64)
    counts = prefix[n - 1 :].copy()
    counts[1:] -= prefix[: length - n]
    start = int(np.argmax(counts))
    return int(counts[start]), start


def best_shift(c_pad, d_pos, n_shifts):
    """Shift z in [1, n_shifts] maximizing sum(c_pad[z + d] for d in d_pos).

    ``c_pad[v]`` holds membership of the integer v and must be valid up to
    index ``n_shifts + max(d_pos)``.  Smallest z wins ties; an empty
    ``d_pos`` yields ``(1, 0)``.
    """
    acc = np.zeros(n_shifts, dtype=np.int64)
    for d in d_pos:
        acc += c_pad[d + 1 : d + 1 + n_shifts]
    z = int(np.argmax(acc)) + 1
    return z, int(acc[z - 1])


def or_shifted(out, src, offsets):
    """out[off : off + len(src)] |= src  for every offset."""
    width = src.shape[0]
    for off in offsets:
        seg = out[off : off + width]
        np.logical_or(seg, src, out=seg)


def max_false_run(bits):
    """Longest run of False, counting the runs at either boundary.

    Returns -1 when ``bits`` has no True entry at all.
    """
    idx = np.flatnonzero(bits)
    if idx.size == 0:
        return -1
    lead = int(idx[0])
    trail = int(bits.shape[0] - 1 - idx[-1])
    inner = int((np.diff(idx) - 1).max()) if idx.size > 1 else 0
    return max(lead, inner, trail)


def _true_runs(bits):
    padded = np.empty(bits.shape[0] + 2, dtype=np.int8)
    padded[0] = padded[-1] = 0
    padded[1:-1] = bits
    edges = np.diff(padded)
    return np.flatnonzero(edges == 1), np.flatnonzero(edges == -1)


def first_true_run(bits, k):
    """Start of the first run of at least k consecutive True; -1 if none."""
    starts, ends = _true_runs(bits)
    hits = np.flatnonzero(ends - starts >= k)
    return int(starts[hits[0]]) if hits.size else -1


def longest_true_run(bits):
    """(length, start) of the first maximal run of True; (0, -1) if none."""
    starts, ends = _true_runs(bits)
    if starts.size == 0:
        return 0, -1
    lengths = ends - starts
    i = int(np.argmax(lengths))
    return int(lengths[i]), int(starts[i])


def low_gap_window(bits, k, m):
    """First start s of a length-m window whose every length-k subwindow
    contains a True (boundary runs count as gaps); -1 if no window works.

    Caller guarantees 1 <= m <= len(bits) and k >= 1.
    """
    length = bits.shape[0]
    tol = min(k, m) - 1
    win = max(m - k + 1, 1)
    arange = np.arange(length, dtype=np.int64)
    pos = np.where(bits, arange, _FAR)
    nxt = np.minimum.accumulate(pos[::-1])[::-1]
    bad = (nxt - arange) > tol
    last_bad = np.maximum.accumulate(np.where(bad, arange, np.int64(-1)))
    good = last_bad[win - 1 :] < np.arange(length - win + 1, dtype=np.int64)
    good = good[: length - m + 1]
    hits = np.flatnonzero(good)
    return int(hits[0]) if hits.size else -1


def bernoulli_fill(lo, hi, seed, num, den):
    """Membership vector for {x : mix64(seed ^ u64(x)) mod den < num}
    over [lo, hi], where u64 is the two's-complement 64-bit image."""
    v = np.arange(lo, hi + 1, dtype=np.int64).astype(np.uint64)
    v ^= seed
    v += np.uint64(0x9E3779B97F4A7C15)
    v = (v ^ (v >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    v = (v ^ (v >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    v ^= v >> np.uint64(31)
    return v % den < num
