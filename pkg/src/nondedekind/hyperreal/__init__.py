"""A constructive non-Archimedean ordered field with an infinitesimal ``e``."""

from .number import (
    EPS,
    ONE,
    ZERO,
    ArchimedeanResult,
    Hyperreal,
    Kind,
    archimedean_check,
    as_hyperreal,
    classify,
    closeness,
    compare,
    finitely_distant,
    format_poly,
    infinitesimally_close,
    is_finite,
    std,
)
from .parser import parse_hyperreal
from .poly import Poly, gcd

__all__ = [
    "EPS",
    "ONE",
    "ZERO",
    "ArchimedeanResult",
    "Hyperreal",
    "Kind",
    "Poly",
    "archimedean_check",
    "arithmetic",
    "as_hyperreal",
    "classify",
    "closeness",
    "compare",
    "finitely_distant",
    "format_poly",
    "gcd",
    "infinitesimally_close",
    "is_finite",
    "parse_hyperreal",
    "std",
]


def arithmetic(kind: str, x, y) -> Hyperreal:
    """Dispatch ``add``/``sub``/``mul``/``div`` on two scalars."""
    x, y = as_hyperreal(x), as_hyperreal(y)
    if kind == "add":
        return x + y
    if kind == "sub":
        return x - y
    if kind == "mul":
        return x * y
    if kind == "div":
        return x / y
    raise ValueError(f"unknown operation {kind!r}")
