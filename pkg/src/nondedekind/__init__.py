"""Exact interval-bisection numbers, an infinitesimal ordered field,
Dedekind-set case analysis, and desk-scale randomness tests."""

from .bisection import (
    Interval,
    IntervalChain,
    affine_from_unit,
    affine_to_unit,
    bisect_step,
    dedekind_value,
    encode,
    interval_chain,
)
from .errors import DomainError, NoStandardPartError, ParseError
from .sequences import (
    DigitString,
    SequenceSpec,
    canonicalize,
    change_basis,
    expand,
    finite_value,
    prefix,
    value_exact,
)

__version__ = "0.1.0"

__all__ = [
    "DigitString",
    "DomainError",
    "Interval",
    "IntervalChain",
    "NoStandardPartError",
    "ParseError",
    "SequenceSpec",
    "affine_from_unit",
    "affine_to_unit",
    "bisect_step",
    "canonicalize",
    "change_basis",
    "dedekind_value",
    "encode",
    "expand",
    "finite_value",
    "interval_chain",
    "prefix",
    "value_exact",
]
