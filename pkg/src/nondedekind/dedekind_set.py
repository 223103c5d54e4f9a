"""Dedekind sets: the intersection of a bisection chain in an ordered field.

Over Q (or R) that intersection is a single point. Inside a field with
infinitesimals it is thick, and the verdicts here record, symbolically,
the cardinality that intersection has in a hypercontinuous hyperreal
system. The field actually implemented is countable, so the verdicts are
transcriptions; :func:`membership_at_depth` is the in-model evidence.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .bisection import chain_for, dedekind_value
from .errors import DomainError
from .hyperreal import Hyperreal, Kind, as_hyperreal, classify, finitely_distant, std
from .sequences import SequenceSpec, format_rational, value_exact

__all__ = [
    "CardinalClass",
    "CaseTag",
    "DedekindSetDescriptor",
    "classify_dedekind_set",
    "membership_at_depth",
    "random_hyperreal",
    "decompose",
    "DEFAULT_DEPTH",
]

DEFAULT_DEPTH = 64


@dataclass(frozen=True)
class CardinalClass:
    """``Finite(k)``, ``Aleph(k)`` or ``SameAsInfinitesimals``.

    ``Aleph(1)`` stands for the cardinality of R under GCH.
    """

    kind: str
    k: Optional[int] = None

    def __post_init__(self):
        if self.kind == "Finite":
            if self.k is None or self.k < 1:
                raise DomainError("Finite(k) needs k >= 1")
        elif self.kind == "Aleph":
            if self.k is None or self.k < 0:
                raise DomainError("Aleph(k) needs k >= 0")
        elif self.kind == "SameAsInfinitesimals":
            if self.k is not None:
                raise DomainError("SameAsInfinitesimals takes no index")
        else:
            raise DomainError(f"unknown cardinal class {self.kind!r}")

    @classmethod
    def finite(cls, k: int) -> CardinalClass:
        return cls("Finite", k)

    @classmethod
    def aleph(cls, k: int) -> CardinalClass:
        return cls("Aleph", k)

    @classmethod
    def same_as_infinitesimals(cls) -> CardinalClass:
        return cls("SameAsInfinitesimals")

    def __str__(self) -> str:
        return self.kind if self.k is None else f"{self.kind}({self.k})"


class CaseTag(str, enum.Enum):
    REAL = "RealCase"
    DISTINCT_STD = "DistinctStdCase"
    EQUAL_STD = "EqualStdCase"
    INFINITELY_SEPARATED = "InfinitelySeparatedCase"


Endpoint = Union[Hyperreal, Fraction, int]


@dataclass(frozen=True)
class DedekindSetDescriptor:
    endpoints: tuple[Endpoint, Endpoint]
    spec: SequenceSpec
    cardinality: CardinalClass
    std_limit: Optional[Fraction]
    contains_all_reals: bool
    case_tag: CaseTag

    def __post_init__(self):
        has_limit = self.case_tag is not CaseTag.INFINITELY_SEPARATED
        if (self.std_limit is not None) != has_limit:
            raise DomainError("std_limit is present exactly in the finite cases")
        if self.contains_all_reals != (self.case_tag is CaseTag.INFINITELY_SEPARATED):
            raise DomainError("contains_all_reals marks the infinitely separated case")

    def to_json(self) -> dict:
        return {
            "case": self.case_tag.value,
            "cardinality": str(self.cardinality),
            "std_limit": None if self.std_limit is None else format_rational(self.std_limit),
            "contains_all_reals": self.contains_all_reals,
        }


def classify_dedekind_set(a0: Endpoint, b0: Endpoint, spec: SequenceSpec) -> DedekindSetDescriptor:
    """Case analysis of the Dedekind set over ``[a0, b0]`` for ``spec``.

    Plain rational endpoints (``int`` / ``Fraction``) are read in the
    Archimedean field, where the set is the single point
    ``dedekind_value(a0, b0, spec)``. :class:`Hyperreal` endpoints, even
    constant ones, are read in the field with infinitesimals.
    """
    if spec.base != 2:
        raise DomainError("Dedekind sets are indexed by binary sequences")
    if not isinstance(a0, Hyperreal) and not isinstance(b0, Hyperreal):
        a, b = Fraction(a0), Fraction(b0)
        if not a < b:
            raise DomainError("classify_dedekind_set needs a0 < b0")
        return DedekindSetDescriptor(
            (a, b), spec, CardinalClass.finite(1), dedekind_value(a, b, spec), False, CaseTag.REAL
        )

    a, b = as_hyperreal(a0), as_hyperreal(b0)
    if not a < b:
        raise DomainError("classify_dedekind_set needs a0 < b0")
    thick = CardinalClass.same_as_infinitesimals()
    if not finitely_distant(a, b):
        return DedekindSetDescriptor((a, b), spec, thick, None, True, CaseTag.INFINITELY_SEPARATED)
    sa, sb = std(a), std(b)
    if sa != sb:
        limit = dedekind_value(sa, sb, spec)
        return DedekindSetDescriptor((a, b), spec, thick, limit, False, CaseTag.DISTINCT_STD)
    return DedekindSetDescriptor((a, b), spec, thick, sa, False, CaseTag.EQUAL_STD)


def membership_at_depth(d, a0, b0, spec: SequenceSpec, depth: int = DEFAULT_DEPTH) -> bool:
    """Whether ``d`` lies in every chain interval down to ``depth``."""
    if depth < 0:
        raise DomainError("depth must be >= 0")
    return chain_for(a0, b0, spec, depth).contains(d)


def random_hyperreal(spec: SequenceSpec, eps) -> Hyperreal:
    """The sequence's value displaced by an infinitesimal ``eps``."""
    eps = as_hyperreal(eps)
    if classify(eps) not in (Kind.ZERO, Kind.INFINITESIMAL):
        raise DomainError(f"{eps} is not infinitesimal")
    return value_exact(spec) + eps


def decompose(h) -> tuple[Fraction, Hyperreal]:
    """Split a finite element into ``(std(h), h - std(h))``."""
    h = as_hyperreal(h)
    s = std(h)
    return s, h - s
