"""Nested halving intervals indexed by a binary sequence.

Everything here is generic over the scalar: plain :class:`Fraction`
endpoints give the rational picture, :class:`~nondedekind.hyperreal.Hyperreal`
endpoints run the identical recursion inside the infinitesimal field.
Scalars only need ``+``, ``-``, ``*``, division by 2 and a total order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Sequence, Union

from .errors import DomainError
from .sequences import DigitString, SequenceSpec, format_rational, prefix, value_exact

__all__ = [
    "Interval",
    "IntervalChain",
    "bisect_step",
    "interval_chain",
    "dedekind_value",
    "encode",
    "affine_to_unit",
    "affine_from_unit",
]

Bits = Union[DigitString, str, Sequence[int]]


def _scalar(x):
    # ints would fall into float division on "/ 2"
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"exact scalars only, got {type(x).__name__}")
    return Fraction(x) if isinstance(x, int) else x


def _fmt(x: Any) -> str:
    return format_rational(x) if isinstance(x, (int, Fraction)) else str(x)


@dataclass(frozen=True)
class Interval:
    lo: Any
    hi: Any

    def __post_init__(self):
        object.__setattr__(self, "lo", _scalar(self.lo))
        object.__setattr__(self, "hi", _scalar(self.hi))
        if not self.lo < self.hi:
            raise DomainError(f"interval needs lo < hi, got [{_fmt(self.lo)}, {_fmt(self.hi)}]")

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def contains_interval(self, other: Interval) -> bool:
        return self.lo <= other.lo and other.hi <= self.hi

    def __str__(self) -> str:
        return f"[{_fmt(self.lo)}, {_fmt(self.hi)}]"


@dataclass(frozen=True)
class IntervalChain:
    """``start`` followed by one halved interval per bit."""

    start: Interval
    bits: DigitString
    steps: tuple[Interval, ...] = field(default=())

    @property
    def final(self) -> Interval:
        return self.steps[-1] if self.steps else self.start

    def intervals(self) -> tuple[Interval, ...]:
        """Every interval including the start, i.e. depths 0..len(bits)."""
        return (self.start,) + self.steps

    def contains(self, x) -> bool:
        return all(x in iv for iv in self.intervals())

    def __len__(self) -> int:
        return len(self.steps)


def _as_bits(bits: Bits) -> DigitString:
    if isinstance(bits, DigitString):
        if bits.base != 2:
            raise DomainError("interval chains are indexed by binary strings")
        return bits
    if isinstance(bits, str):
        return DigitString.from_str(bits, 2)
    return DigitString(2, tuple(bits))


def bisect_step(iv: Interval, bit: int) -> Interval:
    mid = iv.midpoint
    if bit == 0:
        return Interval(iv.lo, mid)
    if bit == 1:
        return Interval(mid, iv.hi)
    raise DomainError(f"bit must be 0 or 1, got {bit!r}")


def interval_chain(a0, b0, bits: Bits) -> IntervalChain:
    bits = _as_bits(bits)
    start = Interval(a0, b0)
    steps = []
    iv = start
    for bit in bits:
        iv = bisect_step(iv, bit)
        steps.append(iv)
    return IntervalChain(start, bits, tuple(steps))


def affine_to_unit(x, a0, b0):
    """Map ``[a0, b0]`` onto ``[0, 1]``."""
    x, a0, b0 = _scalar(x), _scalar(a0), _scalar(b0)
    if not a0 < b0:
        raise DomainError("affine maps need a0 < b0")
    return (x - a0) / (b0 - a0)


def affine_from_unit(x, a0, b0):
    """Map ``[0, 1]`` onto ``[a0, b0]``."""
    x, a0, b0 = _scalar(x), _scalar(a0), _scalar(b0)
    if not a0 < b0:
        raise DomainError("affine maps need a0 < b0")
    return (b0 - a0) * x + a0


def dedekind_value(a0, b0, spec: SequenceSpec):
    """The point common to every interval of the chain over ``[a0, b0]``."""
    if spec.base != 2:
        raise DomainError("the bisection operator reads binary sequences")
    a0, b0 = _scalar(a0), _scalar(b0)
    if not a0 < b0:
        raise DomainError("dedekind_value needs a0 < b0")
    return a0 + (b0 - a0) * value_exact(spec)


def encode(c, a0, b0, depth: int) -> DigitString:
    """Bits whose chain over ``[a0, b0]`` keeps ``c`` inside at every step.

    At a midpoint the lower half wins, which reproduces the nonterminating
    binary expansion of ``(c - a0) / (b0 - a0)``.
    """
    if depth < 0:
        raise DomainError("depth must be >= 0")
    c, a0, b0 = _scalar(c), _scalar(a0), _scalar(b0)
    if not a0 < b0:
        raise DomainError("encode needs a0 < b0")
    if not a0 <= c <= b0:
        raise DomainError(f"{_fmt(c)} is outside [{_fmt(a0)}, {_fmt(b0)}]")
    lo, hi = a0, b0
    out = []
    for _ in range(depth):
        mid = (lo + hi) / 2
        if c <= mid:
            out.append(0)
            hi = mid
        else:
            out.append(1)
            lo = mid
    return DigitString(2, tuple(out))


def chain_for(a0, b0, spec: SequenceSpec, depth: int) -> IntervalChain:
    """Chain over the first ``depth`` digits of ``spec``."""
    return interval_chain(a0, b0, prefix(spec, depth))
