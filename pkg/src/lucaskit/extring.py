"""Quadratic extension ring adjoining s with s^2 = x^2 + 4*y.

Elements are a + b*s with RatPoly components a, b.  The doubled
characteristic roots live here exactly: 2*alpha = x + s and
2*beta = x - s, so root arithmetic (Binet comparisons, conjugation,
norms) never leaves exact rational polynomials.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .ratpoly import RatPoly, X, Y, ZERO, _coerce

# The defining relation: s^2 = DISC.
DISC = X * X + Y.scale(4)

ExtLike = Union["ExtElem", RatPoly, int, Fraction]


@dataclass(frozen=True)
class ExtElem:
    """Element a + b*s of the extension ring, s^2 = x^2 + 4*y."""

    a: RatPoly
    b: RatPoly

    def __add__(self, other: ExtLike) -> "ExtElem":
        other = _coerce_ext(other)
        if other is NotImplemented:
            return NotImplemented
        return ExtElem(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __neg__(self) -> "ExtElem":
        return ExtElem(-self.a, -self.b)

    def __sub__(self, other: ExtLike) -> "ExtElem":
        other = _coerce_ext(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: ExtLike) -> "ExtElem":
        other = _coerce_ext(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: ExtLike) -> "ExtElem":
        other = _coerce_ext(other)
        if other is NotImplemented:
            return NotImplemented
        # (a1 + b1 s)(a2 + b2 s) = (a1 a2 + b1 b2 D) + (a1 b2 + a2 b1) s
        return ExtElem(
            self.a * other.a + self.b * other.b * DISC,
            self.a * other.b + other.a * self.b,
        )

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "ExtElem":
        if not isinstance(n, int) or isinstance(n, bool):
            raise TypeError("exponent must be an int")
        if n < 0:
            raise ValueError("exponent must be nonnegative")
        result = ONE_EXT
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def conj(self) -> "ExtElem":
        """Conjugation s -> -s; swaps the two roots."""
        return ExtElem(self.a, -self.b)

    def norm(self) -> RatPoly:
        """self * conj(self), which has zero s-component: a^2 - D*b^2."""
        return self.a * self.a - self.b * self.b * DISC

    def is_zero(self) -> bool:
        return self.a.is_zero() and self.b.is_zero()

    def __str__(self) -> str:
        return f"({self.a}) + ({self.b})*s"


def _coerce_ext(value: ExtLike) -> "ExtElem":
    if isinstance(value, ExtElem):
        return value
    p = _coerce(value)
    if p is NotImplemented:
        return NotImplemented
    return ExtElem(p, ZERO)


ZERO_EXT = ExtElem(ZERO, ZERO)
ONE_EXT = ExtElem(RatPoly.constant(1), ZERO)
S = ExtElem(ZERO, RatPoly.constant(1))

# Doubled characteristic roots: 2*alpha and 2*beta.
TWO_ALPHA = ExtElem(X, RatPoly.constant(1))
TWO_BETA = ExtElem(X, RatPoly.constant(-1))
