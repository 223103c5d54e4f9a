"""Cylinder sets, their Lebesgue measure, and finite null-cover checks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from ..bisection import affine_from_unit, affine_to_unit
from ..errors import DomainError
from ..sequences import (
    DigitString,
    SequenceSpec,
    canonicalize,
    expand,
    format_rational,
    parse_rational,
    prefix,
    value_exact,
)

__all__ = [
    "StringSet",
    "NullCoverSpec",
    "CoverVerdict",
    "RationalityVerdict",
    "RelativeWitness",
    "cylinder_measure",
    "covers",
    "verify_null_cover",
    "own_prefix_cover",
    "rationality_verdict",
    "relative_random_witness",
]


@dataclass(frozen=True)
class StringSet:
    """Finite set ``X`` of words; stands for the open set of all their extensions."""

    base: int
    strings: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.base < 2:
            raise DomainError("base must be >= 2")
        items = set()
        for s in self.strings:
            if isinstance(s, str):
                s = DigitString.from_str(s, self.base)
            elif not isinstance(s, DigitString):
                s = DigitString(self.base, tuple(s))
            if s.base != self.base:
                raise DomainError("all strings must share the set's base")
            items.add(s)
        object.__setattr__(self, "strings", frozenset(items))

    @classmethod
    def of(cls, strings: Iterable[Union[str, Sequence[int]]], base: int = 2) -> StringSet:
        return cls(base, frozenset(strings if not isinstance(strings, str) else [strings]))

    def __iter__(self):
        return iter(sorted(self.strings, key=lambda s: (len(s), s.digits)))

    def __len__(self) -> int:
        return len(self.strings)

    def union(self, other: StringSet) -> StringSet:
        if other.base != self.base:
            raise DomainError("cannot merge string sets of different bases")
        return StringSet(self.base, self.strings | other.strings)

    def pruned(self) -> StringSet:
        """Drop every string that extends another member."""
        keep = set()
        members = {s.digits for s in self.strings}
        for s in self.strings:
            d = s.digits
            if not any(d[:k] in members for k in range(len(d))):
                keep.add(s)
        return StringSet(self.base, frozenset(keep))


def cylinder_measure(xs: StringSet) -> Fraction:
    """Lebesgue measure of the union of the cylinders over ``xs``."""
    return sum((Fraction(1, xs.base ** len(s)) for s in xs.pruned().strings), Fraction(0))


def covers(spec: SequenceSpec, xs: StringSet) -> bool:
    """Whether some member of ``xs`` is a prefix of the sequence."""
    if spec.base != xs.base:
        raise DomainError(f"base mismatch: sequence {spec.base}, set {xs.base}")
    if not xs.strings:
        return False
    head = prefix(spec, max(len(s) for s in xs.strings))
    return any(s.is_prefix_of(head) for s in xs.strings)


@dataclass(frozen=True)
class NullCoverSpec:
    """Levels ``G_1, G_2, ...`` truncated to finitely many, with measure bounds."""

    base: int
    levels: tuple[StringSet, ...]
    bounds: tuple[Fraction, ...]

    def __post_init__(self):
        levels = tuple(lv if isinstance(lv, StringSet) else StringSet.of(lv, self.base) for lv in self.levels)
        bounds = tuple(Fraction(b) for b in self.bounds)
        object.__setattr__(self, "levels", levels)
        object.__setattr__(self, "bounds", bounds)
        if len(levels) != len(bounds):
            raise DomainError(f"{len(levels)} levels but {len(bounds)} bounds")
        if any(lv.base != self.base for lv in levels):
            raise DomainError("every level must use the cover's base")
        if any(b <= 0 for b in bounds):
            raise DomainError("bounds must be strictly positive")
        if any(later > earlier for earlier, later in zip(bounds, bounds[1:])):
            raise DomainError("bounds must be non-increasing")

    @classmethod
    def from_json(cls, data: Union[str, dict]) -> NullCoverSpec:
        if isinstance(data, str):
            try:
                data = json.loads(data)
            except json.JSONDecodeError as exc:
                raise DomainError(f"invalid cover JSON: {exc}") from None
        try:
            base = int(data["base"])
            levels = tuple(StringSet.of([str(s) for s in lv], base) for lv in data["levels"])
            bounds = tuple(parse_rational(str(b)) for b in data["bounds"])
        except (KeyError, TypeError) as exc:
            raise DomainError(f"invalid cover JSON: {exc}") from None
        return cls(base, levels, bounds)

    def to_json(self) -> dict:
        return {
            "base": self.base,
            "levels": [[str(s) for s in lv] for lv in self.levels],
            "bounds": [format_rational(b) for b in self.bounds],
        }


@dataclass(frozen=True)
class CoverVerdict:
    valid: bool
    level_measures: list[Fraction]
    covered_at: list[bool]

    @property
    def exhibits_nonrandom(self) -> bool:
        """The target sits in every level of a valid cover."""
        return self.valid and bool(self.covered_at) and all(self.covered_at)

    def to_json(self) -> dict:
        return {
            "valid": self.valid,
            "level_measures": [format_rational(m) for m in self.level_measures],
            "covered_at": self.covered_at,
        }


def verify_null_cover(cover: NullCoverSpec, target: Optional[SequenceSpec] = None) -> CoverVerdict:
    """Check ``mu(G_k) <= bound_k <= 2**-k`` level by level.

    ``2**-k`` is the normalizing modulus for "measure tends to zero
    constructively"; a cover within it is a finite truncation of a
    Martin-Lof test.
    """
    if len(cover.levels) != len(cover.bounds):
        raise DomainError("levels and bounds differ in length")
    measures = [cylinder_measure(lv) for lv in cover.levels]
    valid = all(
        m <= b <= Fraction(1, 2**k)
        for k, (m, b) in enumerate(zip(measures, cover.bounds), start=1)
    )
    covered = [covers(target, lv) for lv in cover.levels] if target is not None else []
    return CoverVerdict(valid, measures, covered)


def own_prefix_cover(spec: SequenceSpec, n_levels: int, stride: int = 1) -> NullCoverSpec:
    """Cover whose level ``k`` is the sequence's own prefix of length ``stride*k``."""
    if stride < 1:
        raise DomainError("stride must be >= 1")
    levels = tuple(StringSet(spec.base, frozenset([prefix(spec, stride * k)])) for k in range(1, n_levels + 1))
    bounds = tuple(Fraction(1, 2**k) for k in range(1, n_levels + 1))
    return NullCoverSpec(spec.base, levels, bounds)


@dataclass(frozen=True)
class RationalityVerdict:
    kind: str  # "Rational" or "Unknown"
    value: Optional[Fraction] = None

    def __str__(self) -> str:
        return f"Rational {format_rational(self.value)}" if self.kind == "Rational" else "Unknown"


def rationality_verdict(x: Union[SequenceSpec, DigitString]) -> RationalityVerdict:
    """Eventually periodic sequences have rational value; a finite prefix decides nothing."""
    if isinstance(x, SequenceSpec):
        return RationalityVerdict("Rational", value_exact(x))
    if isinstance(x, DigitString):
        return RationalityVerdict("Unknown")
    raise TypeError(f"expected SequenceSpec or DigitString, got {type(x).__name__}")


@dataclass(frozen=True)
class RelativeWitness:
    w: Fraction
    outer_value: Fraction
    expansion_in_outer: SequenceSpec
    expansions_differ: bool

    def to_json(self) -> dict:
        return {
            "w": format_rational(self.w),
            "outer_value": format_rational(self.outer_value),
            "expansion_in_outer": self.expansion_in_outer.to_json(),
            "expansions_differ": self.expansions_differ,
        }


def relative_random_witness(a1, b1, a2, b2, spec: SequenceSpec) -> RelativeWitness:
    """Encode one point relative to an inner and an outer interval.

    ``w`` is the point of ``[a2, b2]`` whose encoding is ``spec``; its
    encoding relative to ``[a1, b1]`` is returned alongside. Both
    encodings are compared in nonterminating normal form.
    """
    a1, b1, a2, b2 = (Fraction(v) for v in (a1, b1, a2, b2))
    if spec.base != 2:
        raise DomainError("relative encodings are binary")
    if not (a1 < b1 and a2 < b2):
        raise DomainError("intervals need lo < hi")
    if not (a1 <= a2 and b2 <= b1) or (a1, b1) == (a2, b2):
        raise DomainError("[a2, b2] must be strictly contained in [a1, b1]")
    inner_value = value_exact(spec)
    w = affine_from_unit(inner_value, a2, b2)
    outer_value = affine_to_unit(w, a1, b1)
    outer = expand(outer_value, 2)
    inner = expand(inner_value, 2)
    return RelativeWitness(w, outer_value, outer, canonicalize(inner) != canonicalize(outer))
