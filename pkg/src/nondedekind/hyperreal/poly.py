"""Dense univariate polynomials with Fraction coefficients.

Coefficients are stored low degree first with trailing zeros stripped,
so the zero polynomial is the empty tuple.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable


class Poly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        c = [Fraction(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(c)

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> Poly:
        return cls([0] * degree + [coeff])

    @classmethod
    def const(cls, value) -> Poly:
        return cls([value])

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other) -> bool:
        return isinstance(other, Poly) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"Poly({[str(c) for c in self.coeffs]})"

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def terms(self) -> dict[int, Fraction]:
        """Exponent -> coefficient for the nonzero terms."""
        return {k: c for k, c in enumerate(self.coeffs) if c}

    @property
    def lowdeg(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        raise ValueError("zero polynomial has no lowest degree")

    @property
    def lowcoeff(self) -> Fraction:
        return self.coeffs[self.lowdeg]

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def __neg__(self) -> Poly:
        return Poly(-c for c in self.coeffs)

    def __add__(self, other: Poly) -> Poly:
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return Poly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    def __sub__(self, other: Poly) -> Poly:
        return self + (-other)

    def __mul__(self, other: Poly) -> Poly:
        if not self or not other:
            return Poly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return Poly(out)

    def scale(self, k) -> Poly:
        return Poly(c * k for c in self.coeffs)

    def shift(self, k: int) -> Poly:
        """Multiply by ``x**k`` (``k`` may be negative if the low terms are zero)."""
        if k >= 0:
            return Poly((0,) * k + self.coeffs)
        if self and self.lowdeg < -k:
            raise ValueError("shift would drop nonzero terms")
        return Poly(self.coeffs[-k:])

    def __divmod__(self, other: Poly) -> tuple[Poly, Poly]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dv = other.coeffs
        lead = dv[-1]
        if len(rem) < len(dv):
            return Poly(), self
        quot = [Fraction(0)] * (len(rem) - len(dv) + 1)
        for k in range(len(quot) - 1, -1, -1):
            c = rem[k + len(dv) - 1] / lead
            quot[k] = c
            if c:
                for j, d in enumerate(dv):
                    rem[k + j] -= c * d
        return Poly(quot), Poly(rem)

    def __floordiv__(self, other: Poly) -> Poly:
        return divmod(self, other)[0]

    def __mod__(self, other: Poly) -> Poly:
        return divmod(self, other)[1]

    def monic(self) -> Poly:
        return self.scale(1 / self.leading) if self else self

    def __call__(self, t) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc


def gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor (Euclid over Q)."""
    while b:
        a, b = b, (a % b).monic()
    return a.monic()
