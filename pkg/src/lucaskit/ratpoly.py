"""Exact sparse bivariate polynomials over arbitrary-precision rationals.

A polynomial in the variables x, y is stored as a dict mapping monomials
(deg_x, deg_y) to nonzero rational coefficients.  The representation is
canonical: no zero coefficient is ever stored, and integral coefficients
are stored as plain ints (a big speedup, since nearly everything in this
package has integer coefficients).  Two polynomials are equal iff their
term tables are equal.

Values are immutable after construction; all operations are pure
functions and safe to share across threads.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

# A monomial x^i * y^j is the pair (i, j).
Monomial = tuple[int, int]

# Exact rational scalar: ints are canonical for denominator 1.
Rat = Union[int, Fraction]

RatPolyLike = Union["RatPoly", int, Fraction]


def _norm_coeff(c: Rat) -> Rat:
    """Canonicalize a scalar: Fractions with denominator 1 become ints."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


def as_rational(value: Rat) -> Rat:
    """Validate and canonicalize a scalar coefficient."""
    if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
        raise TypeError(f"expected an int or Fraction, got {type(value).__name__}")
    return _norm_coeff(value)


def binomial(a: int, b: int) -> int:
    """Binomial coefficient C(a, b), zero outside 0 <= b <= a."""
    if b < 0 or b > a:
        return 0
    out = 1
    for i in range(1, b + 1):
        out = out * (a - b + i) // i
    return out


class RatPoly:
    """Sparse bivariate polynomial with exact rational coefficients."""

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Monomial, Rat] | None = None):
        table: dict[Monomial, Rat] = {}
        if terms:
            for mono, coeff in terms.items():
                if (
                    not isinstance(mono, tuple)
                    or len(mono) != 2
                    or not all(isinstance(e, int) and e >= 0 for e in mono)
                ):
                    raise ValueError(f"invalid monomial {mono!r}")
                c = as_rational(coeff)
                if c:
                    table[mono] = c
        self._terms = table

    @classmethod
    def _raw(cls, table: dict[Monomial, Rat]) -> "RatPoly":
        # Internal fast path: assumes valid monomials, drops zeros, norms coeffs.
        p = object.__new__(cls)
        p._terms = {m: _norm_coeff(c) for m, c in table.items() if c}
        return p

    @classmethod
    def constant(cls, c: Rat) -> "RatPoly":
        c = as_rational(c)
        return cls._raw({(0, 0): c}) if c else cls._raw({})

    @classmethod
    def monomial(cls, deg_x: int, deg_y: int, coeff: Rat = 1) -> "RatPoly":
        if deg_x < 0 or deg_y < 0:
            raise ValueError("monomial degrees must be nonnegative")
        c = as_rational(coeff)
        return cls._raw({(deg_x, deg_y): c}) if c else cls._raw({})

    @property
    def terms(self) -> dict[Monomial, Rat]:
        """Copy of the term table."""
        return dict(self._terms)

    def items(self) -> Iterable[tuple[Monomial, Rat]]:
        """Terms in canonical order (lexicographic by (deg_x, deg_y), descending)."""
        for mono in sorted(self._terms, reverse=True):
            yield mono, self._terms[mono]

    @property
    def deg_x(self) -> int:
        """Largest x-exponent, -1 for the zero polynomial."""
        return max((m[0] for m in self._terms), default=-1)

    @property
    def deg_y(self) -> int:
        return max((m[1] for m in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def constant_value(self) -> Rat | None:
        """The scalar value if this polynomial is constant, else None."""
        if not self._terms:
            return 0
        if len(self._terms) == 1 and (0, 0) in self._terms:
            return self._terms[(0, 0)]
        return None

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: RatPolyLike) -> "RatPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        table = dict(self._terms)
        for mono, c in other._terms.items():
            acc = table.get(mono, 0) + c
            if acc:
                table[mono] = acc
            else:
                table.pop(mono, None)
        return RatPoly._raw(table)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly._raw({m: -c for m, c in self._terms.items()})

    def __sub__(self, other: RatPolyLike) -> "RatPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: RatPolyLike) -> "RatPoly":
        other = _coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other: RatPolyLike) -> "RatPoly":
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self.scale(other)
        if not isinstance(other, RatPoly):
            return NotImplemented
        table: dict[Monomial, Rat] = {}
        for (i1, j1), c1 in self._terms.items():
            for (i2, j2), c2 in other._terms.items():
                mono = (i1 + i2, j1 + j2)
                table[mono] = table.get(mono, 0) + c1 * c2
        return RatPoly._raw(table)

    __rmul__ = __mul__

    def scale(self, c: Rat) -> "RatPoly":
        """Multiply every coefficient by the exact rational c."""
        c = as_rational(c)
        if not c:
            return RatPoly._raw({})
        return RatPoly._raw({m: v * c for m, v in self._terms.items()})

    def __pow__(self, e: int) -> "RatPoly":
        if not isinstance(e, int) or isinstance(e, bool):
            raise TypeError("exponent must be an int")
        if e < 0:
            raise ValueError("exponent must be nonnegative")
        result = RatPoly._raw({(0, 0): 1})
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def subst(self, px: RatPolyLike, py: RatPolyLike) -> "RatPoly":
        """Substitute x := px, y := py, evaluated exactly.

        Horner accumulation over x-degree; powers of py are built once.
        """
        px = _coerce_strict(px)
        py = _coerce_strict(py)
        if not self._terms:
            return RatPoly._raw({})
        # coefficient of x^i as a map j -> c
        by_x: dict[int, dict[int, Rat]] = {}
        max_j = 0
        for (i, j), c in self._terms.items():
            by_x.setdefault(i, {})[j] = c
            max_j = max(max_j, j)
        py_pows = [RatPoly._raw({(0, 0): 1})]
        for _ in range(max_j):
            py_pows.append(py_pows[-1] * py)

        def x_coeff(i: int) -> "RatPoly":
            acc = RatPoly._raw({})
            for j, c in by_x.get(i, {}).items():
                acc = acc + py_pows[j].scale(c)
            return acc

        top = max(by_x)
        result = x_coeff(top)
        for i in range(top - 1, -1, -1):
            result = result * px + x_coeff(i)
        return result

    def eval_at(self, x0: Rat, y0: Rat) -> Rat:
        """Exact rational value at the point (x0, y0)."""
        x0 = as_rational(x0)
        y0 = as_rational(y0)
        xp: dict[int, Rat] = {0: 1}
        yp: dict[int, Rat] = {0: 1}

        def power(cache: dict[int, Rat], base: Rat, e: int) -> Rat:
            if e not in cache:
                cache[e] = base ** e
            return cache[e]

        total: Rat = 0
        for (i, j), c in self._terms.items():
            total += c * power(xp, x0, i) * power(yp, y0, j)
        return _norm_coeff(total)

    # -- comparison and rendering -------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, RatPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return self._terms == RatPoly.constant(other)._terms
        return NotImplemented

    __hash__ = None  # mutable-dict backed; not hashable

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"RatPoly({self.render()!r})"

    def render(self) -> str:
        """Canonical text form, e.g. "x^2 + 2*y" or "1/2*x^2 - y"."""
        if not self._terms:
            return "0"
        pieces: list[str] = []
        for mono, c in self.items():
            body = _render_term(mono, abs(c))
            if not pieces:
                pieces.append(f"-{body}" if c < 0 else body)
            else:
                pieces.append(f"- {body}" if c < 0 else f"+ {body}")
        return " ".join(pieces)


def _render_term(mono: Monomial, coeff: Rat) -> str:
    i, j = mono
    factors = []
    if i:
        factors.append("x" if i == 1 else f"x^{i}")
    if j:
        factors.append("y" if j == 1 else f"y^{j}")
    if not factors:
        return str(coeff)
    if coeff == 1:
        return "*".join(factors)
    return "*".join([str(coeff)] + factors)


def _coerce(value: RatPolyLike) -> "RatPoly":
    if isinstance(value, RatPoly):
        return value
    if isinstance(value, (int, Fraction)) and not isinstance(value, bool):
        return RatPoly.constant(value)
    return NotImplemented


def _coerce_strict(value: RatPolyLike) -> "RatPoly":
    p = _coerce(value)
    if p is NotImplemented:
        raise TypeError(f"cannot interpret {value!r} as a polynomial")
    return p


ZERO = RatPoly()
ONE = RatPoly.constant(1)
X = RatPoly.monomial(1, 0)
Y = RatPoly.monomial(0, 1)
