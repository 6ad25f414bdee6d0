"""Truncated formal power series in t with RatPoly coefficients.

Used to verify the generating functions t / (1 - x*t - y*t^2) and
(2 - x*t) / (1 - x*t - y*t^2) against the recurrence-built polynomials.
"""
from __future__ import annotations

from typing import Mapping, Sequence

from .ratpoly import ONE, RatPoly, RatPolyLike, X, Y, ZERO, _coerce_strict


class TruncSeries:
    """Power series truncated at a fixed order (inclusive)."""

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Sequence[RatPolyLike]):
        if not coeffs:
            raise ValueError("a truncated series needs at least the t^0 coefficient")
        self._coeffs = tuple(_coerce_strict(c) for c in coeffs)

    @classmethod
    def from_terms(cls, order: int, terms: Mapping[int, RatPolyLike]) -> "TruncSeries":
        if order < 0:
            raise ValueError("order must be nonnegative")
        coeffs: list[RatPolyLike] = [ZERO] * (order + 1)
        for n, c in terms.items():
            if 0 <= n <= order:
                coeffs[n] = c
        return cls(coeffs)

    @property
    def order(self) -> int:
        return len(self._coeffs) - 1

    def coeff(self, n: int) -> RatPoly:
        """Coefficient of t^n."""
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient t^{n} beyond truncation order {self.order}")
        return self._coeffs[n]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self._coeffs == other._coeffs

    __hash__ = None

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        order = min(self.order, other.order)
        return TruncSeries(
            [self._coeffs[i] + other._coeffs[i] for i in range(order + 1)]
        )

    def __mul__(self, other: "TruncSeries") -> "TruncSeries":
        """Cauchy product truncated to the smaller order."""
        order = min(self.order, other.order)
        out = [ZERO] * (order + 1)
        for i, a in enumerate(self._coeffs[: order + 1]):
            if a.is_zero():
                continue
            for j in range(order + 1 - i):
                b = other._coeffs[j]
                if not b.is_zero():
                    out[i + j] = out[i + j] + a * b
        return TruncSeries(out)

    def recip(self) -> "TruncSeries":
        """Multiplicative inverse up to the truncation order.

        Requires constant coefficient exactly 1; then
        b_n = -sum_{j>=1} a_j * b_{n-j}.
        """
        if self._coeffs[0] != ONE:
            raise ValueError(
                f"reciprocal requires constant coefficient 1, got {self._coeffs[0]}"
            )
        out: list[RatPoly] = [ONE]
        for n in range(1, self.order + 1):
            acc = ZERO
            for j in range(1, n + 1):
                a = self._coeffs[j]
                if not a.is_zero():
                    acc = acc + a * out[n - j]
            out.append(-acc)
        return TruncSeries(out)

    def render_lines(self) -> list[str]:
        """One "t^n: <poly>" line per coefficient."""
        return [f"t^{n}: {c}" for n, c in enumerate(self._coeffs)]

    def __str__(self) -> str:
        return "\n".join(self.render_lines())


def _denominator(order: int) -> TruncSeries:
    # 1 - x*t - y*t^2
    return TruncSeries.from_terms(order, {0: ONE, 1: -X, 2: -Y})


def gf_fib(order: int) -> TruncSeries:
    """t / (1 - x*t - y*t^2); coefficient of t^n is the n-th Fibonacci polynomial."""
    t = TruncSeries.from_terms(order, {1: ONE})
    return t * _denominator(order).recip()


def gf_luc(order: int) -> TruncSeries:
    """(2 - x*t) / (1 - x*t - y*t^2); coefficient of t^n is the n-th Lucas polynomial."""
    num = TruncSeries.from_terms(order, {0: RatPoly.constant(2), 1: -X})
    return num * _denominator(order).recip()
