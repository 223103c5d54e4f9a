"""Exact n-ary digit strings and eventually periodic sequences.

An infinite sequence over the alphabet ``{0, ..., base-1}`` is only
representable here when it is eventually periodic: a finite preamble
followed by a period repeated forever. Those are exactly the sequences
whose positional value is rational, so every value below is a
:class:`fractions.Fraction` and nothing is ever rounded.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

from .errors import DomainError

__all__ = [
    "DigitString",
    "SequenceSpec",
    "Rational",
    "prefix",
    "digit_at",
    "finite_value",
    "value_exact",
    "expand",
    "canonicalize",
    "change_basis",
    "is_nonterminating",
    "parse_rational",
    "format_rational",
]

Rational = Fraction

_RATIONAL_RE = re.compile(r"^\s*(-?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"`` or ``"p"`` with an optional leading ``-``."""
    m = _RATIONAL_RE.match(text)
    if m is None:
        raise DomainError(f"not a rational literal: {text!r}")
    num = int(m.group(1))
    den = int(m.group(2)) if m.group(2) is not None else 1
    if den == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(num, den)


def format_rational(q: Fraction | int) -> str:
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


@dataclass(frozen=True)
class DigitString:
    """A finite word over ``{0, ..., base-1}``; the empty word is allowed."""

    base: int
    digits: tuple[int, ...] = ()

    def __post_init__(self):
        if not isinstance(self.base, int) or self.base < 2:
            raise DomainError(f"base must be an integer >= 2, got {self.base!r}")
        digits = tuple(self.digits)
        for d in digits:
            if not isinstance(d, int) or not 0 <= d < self.base:
                raise DomainError(f"digit {d!r} out of range for base {self.base}")
        object.__setattr__(self, "digits", digits)

    @classmethod
    def from_str(cls, text: str, base: int = 2) -> DigitString:
        if base > 10:
            raise DomainError("bases above 10 are not supported")
        if any(not ch.isdigit() for ch in text):
            raise DomainError(f"digit strings use '0'-'9' only: {text!r}")
        return cls(base, tuple(int(ch) for ch in text))

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)

    def __getitem__(self, index):
        if isinstance(index, slice):
            return DigitString(self.base, self.digits[index])
        return self.digits[index]

    def __add__(self, other: DigitString) -> DigitString:
        if not isinstance(other, DigitString):
            return NotImplemented
        if other.base != self.base:
            raise DomainError("cannot concatenate strings of different bases")
        return DigitString(self.base, self.digits + other.digits)

    def __str__(self) -> str:
        return "".join(map(str, self.digits))

    def is_prefix_of(self, other: DigitString) -> bool:
        return len(self) <= len(other) and other.digits[: len(self)] == self.digits


@dataclass(frozen=True)
class SequenceSpec:
    """The infinite sequence ``preamble . period period period ...``."""

    base: int
    preamble: DigitString
    period: DigitString

    def __post_init__(self):
        if self.preamble.base != self.base or self.period.base != self.base:
            raise DomainError("preamble and period must use the sequence base")
        if len(self.period) == 0:
            raise DomainError("period must be nonempty")

    @classmethod
    def of(cls, preamble: str | Sequence[int], period: str | Sequence[int], base: int = 2) -> SequenceSpec:
        return cls(base, _digits(preamble, base), _digits(period, base))

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> SequenceSpec:
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise DomainError(f"invalid sequence JSON: {exc}") from None
        try:
            base = int(data["base"])
            return cls.of(str(data.get("preamble", "")), str(data["period"]), base)
        except (KeyError, TypeError) as exc:
            raise DomainError(f"invalid sequence JSON: {exc}") from None

    def to_json(self) -> dict:
        return {"base": self.base, "preamble": str(self.preamble), "period": str(self.period)}

    def digits(self):
        """Yield the digit stream forever."""
        yield from self.preamble.digits
        while True:
            yield from self.period.digits

    def __str__(self) -> str:
        return f"0.{self.preamble}({self.period})_{self.base}"


def _digits(value: str | Sequence[int] | DigitString, base: int) -> DigitString:
    if isinstance(value, DigitString):
        return value
    if isinstance(value, str):
        return DigitString.from_str(value, base)
    return DigitString(base, tuple(value))


def prefix(spec: SequenceSpec, n: int) -> DigitString:
    """First ``n`` digits of the stream."""
    if n < 0:
        raise DomainError("prefix length must be >= 0")
    pre = spec.preamble.digits
    if n <= len(pre):
        return DigitString(spec.base, pre[:n])
    per = spec.period.digits
    rest = n - len(pre)
    reps, extra = divmod(rest, len(per))
    return DigitString(spec.base, pre + per * reps + per[:extra])


def digit_at(spec: SequenceSpec, i: int) -> int:
    """The ``i``-th digit, 1-indexed."""
    if i < 1:
        raise DomainError("digit positions start at 1")
    pre = spec.preamble.digits
    if i <= len(pre):
        return pre[i - 1]
    return spec.period.digits[(i - len(pre) - 1) % len(spec.period)]


def _as_int(digits: Iterable[int], base: int) -> int:
    acc = 0
    for d in digits:
        acc = acc * base + d
    return acc


def finite_value(s: DigitString) -> Fraction:
    """``sum(x_i / base**i)`` over the string."""
    return Fraction(_as_int(s.digits, s.base), s.base ** len(s))


def value_exact(spec: SequenceSpec) -> Fraction:
    n = spec.base
    m, p = len(spec.preamble), len(spec.period)
    head = _as_int(spec.preamble.digits, n)
    cycle = _as_int(spec.period.digits, n)
    # preamble + (0.(period)) shifted by m places; 0.(z) = Z / (n^p - 1)
    return (Fraction(head) + Fraction(cycle, n**p - 1)) / n**m


def _minimal_period(per: tuple[int, ...]) -> tuple[int, ...]:
    p = len(per)
    for d in range(1, p + 1):
        if p % d == 0 and per[:d] * (p // d) == per:
            return per[:d]
    return per


def canonicalize(spec: SequenceSpec) -> SequenceSpec:
    """Minimal period, then minimal preamble; the stream is unchanged."""
    pre = list(spec.preamble.digits)
    per = _minimal_period(spec.period.digits)
    while pre and pre[-1] == per[-1]:
        pre.pop()
        per = per[-1:] + per[:-1]
    return SequenceSpec(spec.base, DigitString(spec.base, tuple(pre)), DigitString(spec.base, per))


def expand(q: Fraction | int, base: int) -> SequenceSpec:
    """Nonterminating base-``base`` expansion of ``q`` in ``[0, 1]``.

    Values with a terminating expansion come back ending in repeated
    ``base-1``; zero is the all-zeros sequence.
    """
    q = Fraction(q)
    if base < 2:
        raise DomainError(f"base must be >= 2, got {base}")
    if not 0 <= q <= 1:
        raise DomainError(f"{format_rational(q)} is outside [0, 1]")
    if q == 0:
        return SequenceSpec.of((), (0,), base)
    # The remainder r stays in (0, 1]; choosing digit ceil(r*base) - 1 never lets
    # it reach 0, which is the nonterminating rule. States repeat since the
    # denominator is fixed.
    den = q.denominator
    r = q.numerator
    seen: dict[int, int] = {}
    digits: list[int] = []
    while r not in seen:
        seen[r] = len(digits)
        scaled = r * base
        d = -(-scaled // den) - 1
        digits.append(d)
        r = scaled - d * den
    start = seen[r]
    return canonicalize(SequenceSpec.of(digits[:start], digits[start:], base))


def is_nonterminating(spec: SequenceSpec) -> bool:
    """False exactly for streams ending in zeros after a nonzero digit."""
    c = canonicalize(spec)
    return c.period.digits != (0,) or len(c.preamble) == 0


def change_basis(spec: SequenceSpec, target_base: int) -> SequenceSpec:
    """Re-express the value of ``spec`` in ``target_base`` (nonterminating form)."""
    if target_base < 2:
        raise DomainError(f"target base must be >= 2, got {target_base}")
    return expand(value_exact(spec), target_base)
