"""Rational functions in an infinitesimal ``e``, ordered as ``e -> 0+``.

An element is ``num(e) / den(e)`` with rational coefficients. It is
positive when its Laurent expansion at 0 starts with a positive
coefficient, which is the same as being positive for every sufficiently
small rational ``t > 0``. This field is chain-ordered and
non-Archimedean (``e`` is below every positive rational), and contains Q
as the constant elements.
"""

from __future__ import annotations

import enum
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Literal, Optional, Union

from ..errors import DomainError, NoStandardPartError
from .poly import Poly, gcd

Scalar = Union["Hyperreal", Fraction, int]


def _normalize(num: Poly, den: Poly) -> tuple[Poly, Poly]:
    if not den:
        raise ZeroDivisionError("hyperreal division by zero")
    if not num:
        return Poly(), Poly.const(1)
    g = gcd(num, den)
    if g.degree > 0:
        num, den = num // g, den // g
    c = den.lowcoeff
    if c != 1:
        num, den = num.scale(1 / c), den.scale(1 / c)
    return num, den


@functools.total_ordering
class Hyperreal:
    """Reduced ``num / den``; the lowest-degree coefficient of ``den`` is 1."""

    __slots__ = ("num", "den")

    def __init__(self, num: Poly | Scalar = 0, den: Poly | None = None):
        if not isinstance(num, Poly):
            other = _coerce(num)
            if other is None:
                raise TypeError(f"cannot build a Hyperreal from {type(num).__name__}")
            num, d0 = other.num, other.den
            den = d0 if den is None else d0 * den
        elif den is None:
            den = Poly.const(1)
        self.num, self.den = _normalize(num, den)

    @classmethod
    def _raw(cls, num: Poly, den: Poly) -> Hyperreal:
        obj = object.__new__(cls)
        obj.num, obj.den = num, den
        return obj

    @classmethod
    def rational(cls, q) -> Hyperreal:
        q = Fraction(q)
        return cls._raw(Poly.const(q), Poly.const(1))

    # -- structure -------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.num

    def is_standard(self) -> bool:
        """True when the element is a rational constant."""
        return self.num.degree <= 0 and self.den.degree == 0

    def as_rational(self) -> Fraction:
        if not self.is_standard():
            raise DomainError(f"{self} is not a rational constant")
        return self.num.coeffs[0] if self.num else Fraction(0)

    @property
    def valuation(self) -> int:
        """Net order of ``e``; undefined for zero."""
        if not self.num:
            raise DomainError("the valuation of zero is undefined")
        return self.num.lowdeg - self.den.lowdeg

    def sign(self) -> int:
        if not self.num:
            return 0
        # den.lowcoeff is normalized to 1
        return 1 if self.num.lowcoeff > 0 else -1

    def leading_coefficient(self) -> Fraction:
        """Coefficient of the dominant term ``c * e**valuation``."""
        return self.num.lowcoeff / self.den.lowcoeff

    def __call__(self, t) -> Fraction:
        """Evaluate at a rational ``t`` standing in for ``e``."""
        d = self.den(Fraction(t))
        if d == 0:
            raise ZeroDivisionError(f"denominator vanishes at t = {t}")
        return self.num(Fraction(t)) / d

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return Hyperreal(self.num + o.num, self.den)
        return Hyperreal(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> Hyperreal:
        return Hyperreal._raw(-self.num, self.den)

    def __pos__(self) -> Hyperreal:
        return self

    def __abs__(self) -> Hyperreal:
        return -self if self.sign() < 0 else self

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return Hyperreal(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def reciprocal(self) -> Hyperreal:
        if not self.num:
            raise ZeroDivisionError("hyperreal division by zero")
        return Hyperreal(self.den, self.num)

    def __truediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self * o.reciprocal()

    def __rtruediv__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return o * self.reciprocal()

    def __pow__(self, k: int) -> Hyperreal:
        if not isinstance(k, int):
            return NotImplemented
        base = self if k >= 0 else self.reciprocal()
        k = abs(k)
        out = Hyperreal.rational(1)
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    # -- order and equality ---------------------------------------------

    def __eq__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __lt__(self, other) -> bool:
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign() < 0

    def __hash__(self) -> int:
        if self.is_standard():
            return hash(self.as_rational())
        return hash((self.num, self.den))

    # -- text --------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_standard():
            q = self.as_rational()
            return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"
        top = format_poly(self.num)
        if self.den == Poly.const(1):
            return top
        return f"({top}) / ({format_poly(self.den)})"

    def __repr__(self) -> str:
        return f"Hyperreal({str(self)!r})"


def _coerce(x) -> Optional[Hyperreal]:
    if isinstance(x, Hyperreal):
        return x
    if isinstance(x, (int, _RationalABC)) and not isinstance(x, bool):
        return Hyperreal.rational(x)
    return None


def _format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_poly(p: Poly, var: str = "e") -> str:
    """Ascending-exponent text, e.g. ``1 + 2*e - 1/2*e^3``."""
    parts: list[str] = []
    for k, c in p.terms().items():
        mag = abs(c)
        if k == 0:
            body = _format_coeff(mag)
        else:
            power = var if k == 1 else f"{var}^{k}"
            body = power if mag == 1 else f"{_format_coeff(mag)}*{power}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts) if parts else "0"


EPS = Hyperreal(Poly.monomial(1))
ZERO = Hyperreal.rational(0)
ONE = Hyperreal.rational(1)


def as_hyperreal(x: Scalar) -> Hyperreal:
    h = _coerce(x)
    if h is None:
        raise TypeError(f"not a scalar: {x!r}")
    return h


class Kind(enum.Enum):
    ZERO = "Zero"
    INFINITESIMAL = "Infinitesimal"
    APPRECIABLE = "Appreciable"
    UNBOUNDED = "Unbounded"


def classify(x: Scalar) -> Kind:
    x = as_hyperreal(x)
    if x.is_zero():
        return Kind.ZERO
    v = x.valuation
    if v > 0:
        return Kind.INFINITESIMAL
    if v < 0:
        return Kind.UNBOUNDED
    return Kind.APPRECIABLE


def is_finite(x: Scalar) -> bool:
    return classify(x) is not Kind.UNBOUNDED


def std(x: Scalar) -> Fraction:
    """The rational infinitesimally close to a finite ``x``."""
    x = as_hyperreal(x)
    kind = classify(x)
    if kind is Kind.UNBOUNDED:
        raise NoStandardPartError(f"{x} is unbounded and has no standard part")
    if kind is not Kind.APPRECIABLE:
        return Fraction(0)
    # reduced and valuation 0: both constant terms are nonzero, den's is 1
    return x.num.coeffs[0] / x.den.coeffs[0]


def compare(x: Scalar, y: Scalar) -> Literal["less", "equal", "greater"]:
    s = (as_hyperreal(x) - as_hyperreal(y)).sign()
    return "less" if s < 0 else "greater" if s > 0 else "equal"


def infinitesimally_close(x: Scalar, y: Scalar) -> bool:
    return classify(as_hyperreal(x) - as_hyperreal(y)) in (Kind.ZERO, Kind.INFINITESIMAL)


def finitely_distant(x: Scalar, y: Scalar) -> bool:
    return classify(as_hyperreal(x) - as_hyperreal(y)) is not Kind.UNBOUNDED


def closeness(mode: str, x: Scalar, y: Scalar) -> bool:
    if mode == "infinitesimally_close":
        return infinitesimally_close(x, y)
    if mode == "finitely_distant":
        return finitely_distant(x, y)
    raise DomainError(f"unknown closeness mode {mode!r}")


@dataclass(frozen=True)
class ArchimedeanResult:
    exceeded_at: Optional[int]
    symbolic_verdict: Literal["bounded_forever", "eventually_exceeds", "inconclusive"]

    @property
    def never(self) -> bool:
        return self.exceeded_at is None


def _first_exceeding(a: Hyperreal, b: Hyperreal) -> Optional[int]:
    """Smallest n >= 1 with n*a > b, or None if there is none."""
    s = a.sign()
    if s == 0:
        return 1 if b.sign() < 0 else None
    if s < 0:
        # n*a decreases with n
        return 1 if a > b else None
    q = b / a  # n*a > b  <=>  n > q
    if classify(q) is Kind.UNBOUNDED:
        return None if q.sign() > 0 else 1
    n = max(1, math.floor(std(q)) - 1)
    while not Hyperreal.rational(n) > q:
        n += 1
    return n


def archimedean_check(a: Scalar, b: Scalar, n_max: int) -> ArchimedeanResult:
    """Search ``n = 1..n_max`` for ``n*a > b`` and read the valuations.

    The scan is done in closed form: ``n*a`` is monotone in ``n``, so the
    first exceeding ``n`` is located from ``b / a`` directly.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    a, b = as_hyperreal(a), as_hyperreal(b)
    n = _first_exceeding(a, b)
    exceeded_at = n if n is not None and n <= n_max else None

    verdict: Literal["bounded_forever", "eventually_exceeds", "inconclusive"] = "inconclusive"
    if a.sign() > 0 and b.sign() > 0:
        verdict = "bounded_forever" if a.valuation > b.valuation else "eventually_exceeds"
    return ArchimedeanResult(exceeded_at, verdict)
