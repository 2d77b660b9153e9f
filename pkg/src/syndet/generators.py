"""Deterministic set generators driven by a compact text grammar.

Grammar (ASCII, no whitespace)::

    SPEC := "ap:"INT":"INT               residue class r mod d
          | "beatty:"INT"/"INT           { floor(k*p/q) : k integer }
          | "bernoulli:"INT"/"INT":"INT  pseudorandom, rate num/den, 64-bit seed
          | "list:"INT(","INT)*          explicit elements
          | "union:"SPEC"|"SPEC
          | "inter:"SPEC"|"SPEC
          | "shift:"INT":"SPEC
          | "neg:"SPEC
          | "compl:"SPEC                 complement within the support

Materialization is deterministic: the same (spec, support) pair always
yields an identical membership vector, on every platform and backend.
Bernoulli membership depends only on the integer itself (plus rate and
seed), never on the support window.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from . import _kernels, core
from .core import Interval, SyndetError, WindowSet

MAX_DEPTH = 32

_MASK64 = (1 << 64) - 1


class SpecError(SyndetError):
    """A set specification string or value is invalid."""


class SpecSyntaxError(SpecError):
    def __init__(self, pos: int, message: str) -> None:
        super().__init__(f"at position {pos}: {message}")
        self.pos = pos


class SpecSemanticError(SpecError):
    pass


@dataclass(frozen=True)
class SetSpec:
    pass


@dataclass(frozen=True)
class Ap(SetSpec):
    d: int
    r: int


@dataclass(frozen=True)
class Beatty(SetSpec):
    p: int
    q: int


@dataclass(frozen=True)
class Bernoulli(SetSpec):
    num: int
    den: int
    seed: int


@dataclass(frozen=True)
class Elements(SetSpec):
    values: Tuple[int, ...]


@dataclass(frozen=True)
class Union(SetSpec):
    left: SetSpec
    right: SetSpec


@dataclass(frozen=True)
class Inter(SetSpec):
    left: SetSpec
    right: SetSpec


@dataclass(frozen=True)
class Shifted(SetSpec):
    z: int
    child: SetSpec


@dataclass(frozen=True)
class Negated(SetSpec):
    child: SetSpec


@dataclass(frozen=True)
class Complement(SetSpec):
    child: SetSpec


@dataclass(frozen=True)
class NominalDensity:
    """Density attributed to a generated set; ``exact`` is False when the
    value is a pointwise rate rather than a window-uniform guarantee."""

    value: Fraction
    exact: bool


_INT = re.compile(r"-?\d+")


def _read_int(text: str, pos: int) -> Tuple[int, int]:
    m = _INT.match(text, pos)
    if m is None:
        raise SpecSyntaxError(pos, "expected an integer")
    return int(m.group()), m.end()


def _expect(text: str, pos: int, token: str) -> int:
    if not text.startswith(token, pos):
        raise SpecSyntaxError(pos, f"expected {token!r}")
    return pos + len(token)


def _parse(text: str, pos: int, depth: int) -> Tuple[SetSpec, int]:
    if depth > MAX_DEPTH:
        raise SpecSemanticError(f"specs may nest at most {MAX_DEPTH} deep")
    if text.startswith("ap:", pos):
        d, pos = _read_int(text, pos + 3)
        pos = _expect(text, pos, ":")
        r, pos = _read_int(text, pos)
        if d < 1:
            raise SpecSemanticError(f"modulus must be >= 1, got {d}")
        if not 0 <= r < d:
            raise SpecSemanticError(f"residue must satisfy 0 <= r < {d}, got {r}")
        return Ap(d, r), pos
    if text.startswith("beatty:", pos):
        p, pos = _read_int(text, pos + 7)
        pos = _expect(text, pos, "/")
        q, pos = _read_int(text, pos)
        if p < 1 or q < 1:
            raise SpecSemanticError(f"slope parts must be >= 1, got {p}/{q}")
        return Beatty(p, q), pos
    if text.startswith("bernoulli:", pos):
        num, pos = _read_int(text, pos + 10)
        pos = _expect(text, pos, "/")
        den, pos = _read_int(text, pos)
        pos = _expect(text, pos, ":")
        seed, pos = _read_int(text, pos)
        if den < 1:
            raise SpecSemanticError(f"rate denominator must be >= 1, got {den}")
        if not 0 <= num <= den:
            raise SpecSemanticError(f"rate must satisfy 0 <= num <= den, got {num}/{den}")
        return Bernoulli(num, den, seed & _MASK64), pos
    if text.startswith("list:", pos):
        v, pos = _read_int(text, pos + 5)
        values = [v]
        while pos < len(text) and text[pos] == ",":
            v, pos = _read_int(text, pos + 1)
            values.append(v)
        return Elements(tuple(values)), pos
    if text.startswith("union:", pos):
        left, pos = _parse(text, pos + 6, depth + 1)
        pos = _expect(text, pos, "|")
        right, pos = _parse(text, pos, depth + 1)
        return Union(left, right), pos
    if text.startswith("inter:", pos):
        left, pos = _parse(text, pos + 6, depth + 1)
        pos = _expect(text, pos, "|")
        right, pos = _parse(text, pos, depth + 1)
        return Inter(left, right), pos
    if text.startswith("shift:", pos):
        z, pos = _read_int(text, pos + 6)
        pos = _expect(text, pos, ":")
        child, pos = _parse(text, pos, depth + 1)
        return Shifted(z, child), pos
    if text.startswith("neg:", pos):
        child, pos = _parse(text, pos + 4, depth + 1)
        return Negated(child), pos
    if text.startswith("compl:", pos):
        child, pos = _parse(text, pos + 6, depth + 1)
        return Complement(child), pos
    raise SpecSyntaxError(pos, "expected a spec head (ap:, beatty:, bernoulli:, list:, union:, inter:, shift:, neg:, compl:)")


def parse_spec(text: str) -> SetSpec:
    """Parse a spec string; rejects anything outside the grammar."""
    spec, pos = _parse(text, 0, 1)
    if pos != len(text):
        raise SpecSyntaxError(pos, "trailing input after a complete spec")
    return spec


def mix64(v: int) -> int:
    """64-bit finalizer (wrapping arithmetic mod 2**64).

    Reference implementation in exact python integers; the vectorized
    kernels must agree with it on every input.
    """
    v = (v + 0x9E3779B97F4A7C15) & _MASK64
    v = ((v ^ (v >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    v = ((v ^ (v >> 27)) * 0x94D049BB133111EB) & _MASK64
    return (v ^ (v >> 31)) & _MASK64


def bernoulli_member(x: int, num: int, den: int, seed: int) -> bool:
    """Reference membership test for bernoulli specs: materialize() must
    agree with this bit for bit.  x enters as its two's-complement 64-bit
    image."""
    return mix64((seed & _MASK64) ^ (x & _MASK64)) % den < num


def materialize(spec: SetSpec, support: Interval, _depth: int = 1) -> WindowSet:
    """Evaluate a spec on a support window.

    Deterministic: identical (spec, support) pairs give identical
    membership vectors.  Depth beyond MAX_DEPTH raises.
    """
    if _depth > MAX_DEPTH:
        raise SpecSemanticError(f"specs may nest at most {MAX_DEPTH} deep")
    lo, hi = support.lo, support.hi
    if isinstance(spec, Ap):
        xs = np.arange(lo, hi + 1, dtype=np.int64)
        return WindowSet(support, (xs % spec.d) == spec.r)
    if isinstance(spec, Beatty):
        p, q = spec.p, spec.q
        if p < q:
            # increments of floor(k*p/q) are 0 or 1, so every integer occurs
            return core.full(support)
        bits = np.zeros(support.length, dtype=np.bool_)
        k_lo = (lo * q) // p - 1
        k_hi = ((hi + 1) * q) // p + 1
        ks = np.arange(k_lo, k_hi + 1, dtype=np.int64)
        vals = (ks * p) // q
        vals = vals[(vals >= lo) & (vals <= hi)]
        bits[vals - lo] = True
        return WindowSet(support, bits)
    if isinstance(spec, Bernoulli):
        bits = _kernels.bernoulli_fill(
            lo, hi, np.uint64(spec.seed), np.uint64(spec.num), np.uint64(spec.den)
        )
        return WindowSet(support, bits)
    if isinstance(spec, Elements):
        return core.from_elements(spec.values, support)
    if isinstance(spec, Union):
        return core.union(
            materialize(spec.left, support, _depth + 1),
            materialize(spec.right, support, _depth + 1),
        )
    if isinstance(spec, Inter):
        return core.intersect(
            materialize(spec.left, support, _depth + 1),
            materialize(spec.right, support, _depth + 1),
        )
    if isinstance(spec, Shifted):
        child = materialize(spec.child, support.shifted(-spec.z), _depth + 1)
        return core.shift(child, spec.z)
    if isinstance(spec, Negated):
        child = materialize(spec.child, support.negated(), _depth + 1)
        return core.negate(child)
    if isinstance(spec, Complement):
        return core.complement(materialize(spec.child, support, _depth + 1))
    raise TypeError(f"unknown spec node {spec!r}")


def nominal_density(spec: SetSpec) -> Optional[NominalDensity]:
    """Density attributed to the generated set, when structurally known.

    Residue classes give exactly 1/d.  A slope p/q >= 1 gives exactly q/p
    (slopes below 1 generate every integer, density 1).  Bernoulli specs
    report their pointwise rate, marked inexact: over an unbounded domain
    the best-window density of such a set is almost surely 1, so num/den
    is a modeling choice, not a window-uniform guarantee.  Shifts and
    mirrors preserve the child's value; anything else returns None.
    """
    if isinstance(spec, Ap):
        return NominalDensity(Fraction(1, spec.d), True)
    if isinstance(spec, Beatty):
        if spec.p >= spec.q:
            return NominalDensity(Fraction(spec.q, spec.p), True)
        return NominalDensity(Fraction(1), True)
    if isinstance(spec, Bernoulli):
        return NominalDensity(Fraction(spec.num, spec.den), False)
    if isinstance(spec, (Shifted, Negated)):
        return nominal_density(spec.child)
    return None


def override_seed(spec: SetSpec, seed: int) -> SetSpec:
    """Copy of the spec with every bernoulli seed replaced."""
    seed &= _MASK64
    if isinstance(spec, Bernoulli):
        return Bernoulli(spec.num, spec.den, seed)
    if isinstance(spec, Union):
        return Union(override_seed(spec.left, seed), override_seed(spec.right, seed))
    if isinstance(spec, Inter):
        return Inter(override_seed(spec.left, seed), override_seed(spec.right, seed))
    if isinstance(spec, Shifted):
        return Shifted(spec.z, override_seed(spec.child, seed))
    if isinstance(spec, Negated):
        return Negated(override_seed(spec.child, seed))
    if isinstance(spec, Complement):
        return Complement(override_seed(spec.child, seed))
    return spec
