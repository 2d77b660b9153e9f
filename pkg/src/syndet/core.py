"""Exact integer sets on a bounded support window.

A :class:`WindowSet` holds the members of an integer set truncated to an
inclusive interval, as a boolean membership vector (index ``i`` holds
membership of ``support.lo + i``).  Difference sets, sumsets and
finite-shift unions are computed exactly for the truncations; no claim is
made about the untruncated sets.

All values are immutable after construction and every operation is a pure
function, so values are safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

import numpy as np

from . import _kernels

_ENDPOINT_LIMIT = 2**62


class SyndetError(Exception):
    """Base class for errors raised by this package."""


class RangeError(SyndetError):
    """An interval, index or length argument lies outside its permitted range."""


class EmptyWindowError(SyndetError):
    """A restriction produced no overlap with the support."""


@dataclass(frozen=True)
class Interval:
    """Inclusive integer interval [lo, hi]; lo <= hi always holds."""

    lo: int
    hi: int

    def __post_init__(self) -> None:
        if self.lo > self.hi:
            raise RangeError(f"empty interval [{self.lo}, {self.hi}]")
        if max(abs(self.lo), abs(self.hi)) > _ENDPOINT_LIMIT:
            raise RangeError("interval endpoint out of range")

    @property
    def length(self) -> int:
        return self.hi - self.lo + 1

    def contains(self, x: int) -> bool:
        return self.lo <= x <= self.hi

    def intersect(self, other: "Interval") -> Optional["Interval"]:
        lo, hi = max(self.lo, other.lo), min(self.hi, other.hi)
        return Interval(lo, hi) if lo <= hi else None

    def shifted(self, z: int) -> "Interval":
        return Interval(self.lo + z, self.hi + z)

    def negated(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __str__(self) -> str:
        return f"[{self.lo},{self.hi}]"


class WindowSet:
    """Integer set truncated to a support interval, bit-vector backed.

    ``degenerate`` marks empty results returned where an operation's
    natural support hull does not exist (difference or sum with an empty
    operand); such results are empty sets on the single-point support
    ``[0, 0]``.
    """

    __slots__ = ("support", "bits", "degenerate", "_count")

    def __init__(
        self, support: Interval, bits: np.ndarray, degenerate: bool = False
    ) -> None:
        bits = np.asarray(bits, dtype=np.bool_)
        if bits.ndim != 1 or bits.shape[0] != support.length:
            raise RangeError("membership vector length must equal support length")
        if bits.flags.writeable:
            bits = bits.copy()
            bits.setflags(write=False)
        self.support = support
        self.bits = bits
        self.degenerate = degenerate
        self._count = int(np.count_nonzero(bits))

    @property
    def count(self) -> int:
        """Number of members."""
        return self._count

    def contains(self, x: int) -> bool:
        return self.support.contains(x) and bool(self.bits[x - self.support.lo])

    __contains__ = contains

    def elements(self) -> np.ndarray:
        """Members in increasing order, as an int64 array."""
        return np.flatnonzero(self.bits).astype(np.int64) + self.support.lo

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WindowSet):
            return NotImplemented
        return self.support == other.support and bool(
            np.array_equal(self.bits, other.bits)
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"WindowSet({self.support}, count={self._count})"


def _owned(support: Interval, bits: np.ndarray, degenerate: bool = False) -> WindowSet:
    # internal: take ownership of a freshly allocated vector without copying
    bits.setflags(write=False)
    return WindowSet(support, bits, degenerate)


def _degenerate_empty() -> WindowSet:
    return _owned(Interval(0, 0), np.zeros(1, np.bool_), degenerate=True)


def from_elements(elems: Iterable[int], support: Interval) -> WindowSet:
    """Set containing exactly the given elements clipped to the support."""
    bits = np.zeros(support.length, dtype=np.bool_)
    for x in elems:
        if support.lo <= x <= support.hi:
            bits[x - support.lo] = True
    return _owned(support, bits)


def full(support: Interval) -> WindowSet:
    """The whole interval as a set."""
    return _owned(support, np.ones(support.length, dtype=np.bool_))


def empty(support: Interval) -> WindowSet:
    return _owned(support, np.zeros(support.length, dtype=np.bool_))


def count_in(a: WindowSet, window: Interval) -> int:
    """|a ∩ window|; only members inside the support are counted."""
    overlap = a.support.intersect(window)
    if overlap is None:
        return 0
    lo = overlap.lo - a.support.lo
    return int(np.count_nonzero(a.bits[lo : lo + overlap.length]))


def shift(a: WindowSet, z: int) -> WindowSet:
    """Translate by z: x is a member iff x - z was one.  The support moves
    with the set; overflowing endpoints raise RangeError."""
    return WindowSet(a.support.shifted(z), a.bits, a.degenerate)


def restrict(a: WindowSet, window: Interval) -> WindowSet:
    """Clip to ``window``; the result's support is window ∩ support."""
    overlap = a.support.intersect(window)
    if overlap is None:
        raise EmptyWindowError(f"{window} does not meet support {a.support}")
    lo = overlap.lo - a.support.lo
    return WindowSet(overlap, a.bits[lo : lo + overlap.length])


def negate(a: WindowSet) -> WindowSet:
    """Mirror through 0: x is a member iff -x was one."""
    return WindowSet(a.support.negated(), a.bits[::-1], a.degenerate)


def union(a: WindowSet, b: WindowSet) -> WindowSet:
    _require_same_support(a, b)
    return _owned(a.support, a.bits | b.bits)


def intersect(a: WindowSet, b: WindowSet) -> WindowSet:
    _require_same_support(a, b)
    return _owned(a.support, a.bits & b.bits)


def complement(a: WindowSet) -> WindowSet:
    """Complement within the support."""
    return _owned(a.support, ~a.bits)


def _require_same_support(a: WindowSet, b: WindowSet) -> None:
    if a.support != b.support:
        raise RangeError(
            f"supports differ: {a.support} vs {b.support}; restrict first"
        )


def difference_set(a: WindowSet, b: WindowSet) -> WindowSet:
    """All pairwise differences {x - y : x in a, y in b}, exact for the
    truncations, on the hull support [a.lo - b.hi, a.hi - b.lo].

    Computed as an OR of shifted membership vectors, one shift per element
    of the operand with fewer members.  An empty operand yields a flagged
    degenerate empty set.
    """
    if a.count == 0 or b.count == 0:
        return _degenerate_empty()
    hull = Interval(a.support.lo - b.support.hi, a.support.hi - b.support.lo)
    out = np.zeros(hull.length, dtype=np.bool_)
    if a.count <= b.count:
        src = b.bits[::-1]
        offsets = np.flatnonzero(a.bits).astype(np.int64)
    else:
        src = a.bits
        offsets = (
            np.int64(b.support.length - 1) - np.flatnonzero(b.bits)
        ).astype(np.int64)
    _kernels.or_shifted(out, src, offsets)
    return _owned(hull, out)


def sumset(a: WindowSet, b: WindowSet) -> WindowSet:
    """All pairwise sums, on the hull [a.lo + b.lo, a.hi + b.hi]; equals
    difference_set(a, negate(b)) element for element."""
    if a.count == 0 or b.count == 0:
        return _degenerate_empty()
    hull = Interval(a.support.lo + b.support.lo, a.support.hi + b.support.hi)
    out = np.zeros(hull.length, dtype=np.bool_)
    if a.count <= b.count:
        src = b.bits
        offsets = np.flatnonzero(a.bits).astype(np.int64)
    else:
        src = a.bits
        offsets = np.flatnonzero(b.bits).astype(np.int64)
    _kernels.or_shifted(out, src, offsets)
    return _owned(hull, out)


def add_finite(a: WindowSet, shifts: Sequence[int]) -> WindowSet:
    """Union of the translates a + f over f in ``shifts``, on the hull
    support.  ``shifts`` must be nonempty."""
    if not shifts:
        raise ValueError("shift set must be nonempty")
    offs = sorted({int(f) for f in shifts})
    hull = Interval(a.support.lo + offs[0], a.support.hi + offs[-1])
    out = np.zeros(hull.length, dtype=np.bool_)
    if a.count:
        base = np.array(offs, dtype=np.int64) - np.int64(offs[0])
        _kernels.or_shifted(out, a.bits, base)
    return _owned(hull, out)


def max_gap(a: WindowSet, window: Interval) -> Optional[int]:
    """Largest run of consecutive non-members inside ``window``, counting
    the runs touching either end of the window.  None when a ∩ window is
    empty; 0 when the window is entirely members.

    With this convention, gap g means every subinterval of length g + 1
    inside the window meets the set.
    """
    if a.support.intersect(window) != window:
        raise RangeError(f"{window} not contained in support {a.support}")
    lo = window.lo - a.support.lo
    run = _kernels.max_false_run(a.bits[lo : lo + window.length])
    return None if run < 0 else int(run)
