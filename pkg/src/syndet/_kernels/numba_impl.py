"""Jit-compiled implementations of the hot kernels.

Mirrors ``numpy_impl`` function for function; results must be
bit-identical.  All kernels are cached on disk, so only the first call in
a fresh environment pays the compile cost.
"""

import numpy as np
from numba import njit

_FAR = np.int64(2**62)


@njit(cache=True)
def window_best_count(bits, n):
    length = bits.shape[0]
    cur = 0
    for i in range(n):
        if bits[i]:
            cur += 1
    best = cur
    start = 0
    for s in range(1, length - n + 1):
        if bits[s - 1]:
            cur -= 1
        if bits[s + n - 1]:
            cur += 1
        if cur > best:
            best = cur
            start = s
    return best, start


@njit(cache=True)
def best_shift(c_pad, d_pos, n_shifts):
    best = -1
    best_z = 1
    for z in range(1, n_shifts + 1):
        cur = 0
        for j in range(d_pos.shape[0]):
            if c_pad[z + d_pos[j]]:
                cur += 1
        if cur > best:
            best = cur
            best_z = z
    if best < 0:
        best = 0
    return best_z, best


@njit(cache=True)
def or_shifted(out, src, offsets):
    width = src.shape[0]
    for oi in range(offsets.shape[0]):
        off = offsets[oi]
        for i in range(width):
            if src[i]:
                out[off + i] = True


@njit(cache=True)
def max_false_run(bits):
    length = bits.shape[0]
    best = -1
    run = 0
    seen = False
    for i in range(length):
        if bits[i]:
            seen = True
            if run > best:
                best = run
            run = 0
        else:
            run += 1
    if not seen:
        return -1
    if run > best:
        best = run
    return best


@njit(cache=True)
def first_true_run(bits, k):
    run = 0
    for i in range(bits.shape[0]):
        if bits[i]:
            run += 1
            if run >= k:
                return i - k + 1
        else:
            run = 0
    return -1


@njit(cache=True)
def longest_true_run(bits):
    best = 0
    best_start = -1
    run = 0
    for i in range(bits.shape[0]):
        if bits[i]:
            run += 1
            if run > best:
                best = run
                best_start = i - run + 1
        else:
            run = 0
    return best, best_start


@njit(cache=True)
def low_gap_window(bits, k, m):
    length = bits.shape[0]
    tol = min(k, m) - 1
    win = max(m - k + 1, 1)
    dist = np.empty(length, np.int64)
    nxt = _FAR
    for i in range(length - 1, -1, -1):
        if bits[i]:
            nxt = i
        dist[i] = nxt - i
    last_bad = -1
    for i in range(length):
        if dist[i] > tol:
            last_bad = i
        s = i - win + 1
        if s >= 0 and s <= length - m and last_bad < s:
            return s
    return -1


@njit(cache=True)
def bernoulli_fill(lo, hi, seed, num, den):
    length = hi - lo + 1
    out = np.zeros(length, np.bool_)
    for i in range(length):
        v = np.uint64(lo + i) ^ seed
        v += np.uint64(0x9E3779B97F4A7C15)
        v = (v ^ (v >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
        v = (v ^ (v >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
        v ^= v >> np.uint64(31)
        out[i] = (v % den) < num
    return out


def warmup():
    """Compile every kernel on tiny inputs (cached to disk afterwards)."""
    bits = np.array([True, False, True, True], dtype=np.bool_)
    window_best_count(bits, 2)
    best_shift(np.zeros(8, np.bool_), np.array([1, 2], np.int64), 3)
    or_shifted(np.zeros(6, np.bool_), bits, np.array([0, 2], np.int64))
    max_false_run(bits)
    first_true_run(bits, 2)
    longest_true_run(bits)
    low_gap_window(bits, 2, 3)
    bernoulli_fill(-2, 2, np.uint64(42), np.uint64(1), np.uint64(2))
