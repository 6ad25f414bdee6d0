"""Exact verification of the eight binomial-sum identities.

Each check builds its left-hand side as an explicit binomial sum over
k, builds the right-hand side from recurrence polynomials, and compares
exactly.  The checks, with D = x^2 + 4*y:

  ex1  (n>=1): sum_{k<=n/2} C(n-k,k) * n/(n-k) * x^(n-2k) * y^k  ==  L_n
  ex2  (n>=0): sum_{k<=n/2} C(n,2k) * D^k * x^(n-2k) / (2k+1)  ==  2^n/(n+1) * F_{n+1}
  ex3  (n>=0): (n+1) * sum_{k<=(n-1)/2} C(n,2k+1) * D^(k+1) * x^(n-2k-1) / (k+1)
               ==  2^(n+1) * L_{n+1} - 2*x^(n+1)
  ex4  (n>=0): sum_{k<=n/2} C(n-k,k) * 2^(n-2k) * y^k  ==  F_{n+1}(2, y)
  ex5a (n>=0): sum_{k<=n/2} C(n,2k) * D^k * x^(n-2k)  ==  2^(n-1) * L_n
  ex5b (n>=0): 2 * sum_{k<=n/2} C(n,2k) * L_{2k} * x^(n-2k)  ==  L_n + L_n(3x, y-2x^2)
  ex6a (n>=0): sum_{k<=(n-1)/2} C(n,2k+1) * D^k * x^(n-2k-1)  ==  2^(n-1) * F_n
  ex6b (n>=1): 2y * sum_{k<=(n-1)/2} C(n,2k+1) * F_{2k} * x^(n-2k-1)
               ==  -(F_{n+1} - (y-2x^2)*F_{n-1}(3x, y-2x^2) - x*F_n(3x, y-2x^2))

Summation bounds follow the empty-sum convention: an upper bound below
the lower bound contributes 0 (floor((n-1)/2) = -1 at n = 0).
"""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Sequence

from .lucascore import compose_fib, compose_luc, fib, luc
from .ratpoly import RatPoly, X, Y, ZERO, binomial
from .report import IdentityReport

__all__ = [
    "GouldSum",
    "IdentityReport",
    "ALL_CHECK_NAMES",
    "check_ex1",
    "check_ex2",
    "check_ex3",
    "check_ex4",
    "check_ex5a",
    "check_ex5b",
    "check_ex6a",
    "check_ex6b",
    "verify_range",
]

_DISC = X * X + Y.scale(4)
_SUBST_X = RatPoly.monomial(1, 0, 3)          # 3x
_SUBST_Y = Y - RatPoly.monomial(2, 0, 2)      # y - 2x^2


@dataclass(frozen=True)
class GouldSum:
    """Binomial sum over k = lower..upper with the empty-sum convention."""

    upper: int
    term: Callable[[int], RatPoly]
    lower: int = 0

    def value(self) -> RatPoly:
        acc = ZERO
        for k in range(self.lower, self.upper + 1):
            acc = acc + self.term(k)
        return acc


def check_ex1(n: int) -> IdentityReport:
    """Weighted diagonal sum equal to the Lucas polynomial."""
    if n < 1:
        raise ValueError("ex1 requires n >= 1")
    lhs = GouldSum(
        n // 2,
        lambda k: RatPoly.monomial(n - 2 * k, k, binomial(n - k, k) * Fraction(n, n - k)),
    ).value()
    return IdentityReport.from_sides("ex1", n, lhs, luc(n))


def check_ex2(n: int) -> IdentityReport:
    """Even-index discriminant sum against 2^n/(n+1) * F_{n+1}."""
    if n < 0:
        raise ValueError("ex2 requires n >= 0")

    def term(k: int) -> RatPoly:
        c = Fraction(binomial(n, 2 * k), 2 * k + 1)
        return (_DISC ** k) * RatPoly.monomial(n - 2 * k, 0, c)

    lhs = GouldSum(n // 2, term).value()
    rhs = fib(n + 1).scale(Fraction(2 ** n, n + 1))
    return IdentityReport.from_sides("ex2", n, lhs, rhs)


def check_ex3(n: int) -> IdentityReport:
    """Odd-index discriminant sum against 2^(n+1)*L_{n+1} - 2*x^(n+1)."""
    if n < 0:
        raise ValueError("ex3 requires n >= 0")

    def term(k: int) -> RatPoly:
        c = Fraction(binomial(n, 2 * k + 1), k + 1)
        return (_DISC ** (k + 1)) * RatPoly.monomial(n - 2 * k - 1, 0, c)

    lhs = GouldSum((n - 1) // 2, term).value().scale(n + 1)
    rhs = luc(n + 1).scale(2 ** (n + 1)) - RatPoly.monomial(n + 1, 0, 2)
    return IdentityReport.from_sides("ex3", n, lhs, rhs)


def check_ex4(n: int) -> IdentityReport:
    """Diagonal sum in powers of 2 equal to F_{n+1}(2, y)."""
    if n < 0:
        raise ValueError("ex4 requires n >= 0")
    lhs = GouldSum(
        n // 2,
        lambda k: RatPoly.monomial(0, k, binomial(n - k, k) * 2 ** (n - 2 * k)),
    ).value()
    rhs = fib(n + 1).subst(RatPoly.constant(2), Y)
    return IdentityReport.from_sides("ex4", n, lhs, rhs)


def check_ex5a(n: int) -> IdentityReport:
    """Even-index discriminant sum equal to 2^(n-1) * L_n."""
    if n < 0:
        raise ValueError("ex5a requires n >= 0")
    lhs = GouldSum(
        n // 2,
        lambda k: (_DISC ** k) * RatPoly.monomial(n - 2 * k, 0, binomial(n, 2 * k)),
    ).value()
    rhs = luc(n).scale(Fraction(2) ** (n - 1))
    return IdentityReport.from_sides("ex5a", n, lhs, rhs)


def check_ex5b(n: int) -> IdentityReport:
    """Lucas-weighted even sum against L_n + L_n(3x, y - 2x^2)."""
    if n < 0:
        raise ValueError("ex5b requires n >= 0")
    lhs = GouldSum(
        n // 2,
        lambda k: luc(2 * k) * RatPoly.monomial(n - 2 * k, 0, binomial(n, 2 * k)),
    ).value().scale(2)
    rhs = luc(n) + luc(n).subst(_SUBST_X, _SUBST_Y)
    return IdentityReport.from_sides("ex5b", n, lhs, rhs)


def check_ex6a(n: int) -> IdentityReport:
    """Odd-index discriminant sum equal to 2^(n-1) * F_n."""
    if n < 0:
        raise ValueError("ex6a requires n >= 0")
    lhs = GouldSum(
        (n - 1) // 2,
        lambda k: (_DISC ** k) * RatPoly.monomial(n - 2 * k - 1, 0, binomial(n, 2 * k + 1)),
    ).value()
    rhs = fib(n).scale(Fraction(2) ** (n - 1))
    return IdentityReport.from_sides("ex6a", n, lhs, rhs)


def check_ex6b(n: int) -> IdentityReport:
    """Fibonacci-weighted odd sum against the (3x, y - 2x^2) substitution form."""
    if n < 1:
        raise ValueError("ex6b requires n >= 1")
    lhs = GouldSum(
        (n - 1) // 2,
        lambda k: fib(2 * k) * RatPoly.monomial(n - 2 * k - 1, 1, 2 * binomial(n, 2 * k + 1)),
    ).value()
    rhs = -(
        fib(n + 1)
        - _SUBST_Y * fib(n - 1).subst(_SUBST_X, _SUBST_Y)
        - X * fib(n).subst(_SUBST_X, _SUBST_Y)
    )
    return IdentityReport.from_sides("ex6b", n, lhs, rhs)


# name -> (check, minimum admissible n)
_CHECKS: dict[str, tuple[Callable[[int], IdentityReport], int]] = {
    "ex1": (check_ex1, 1),
    "ex2": (check_ex2, 0),
    "ex3": (check_ex3, 0),
    "ex4": (check_ex4, 0),
    "ex5a": (check_ex5a, 0),
    "ex5b": (check_ex5b, 0),
    "ex6a": (check_ex6a, 0),
    "ex6b": (check_ex6b, 1),
}

_COMPOSE: dict[str, Callable[[int, int], IdentityReport]] = {
    "remark_fib": compose_fib,
    "remark_luc": compose_luc,
}

ALL_CHECK_NAMES: tuple[str, ...] = tuple(_CHECKS) + tuple(_COMPOSE)


def min_admissible_n(name: str) -> int:
    if name in _CHECKS:
        return _CHECKS[name][1]
    if name in _COMPOSE:
        return 0
    raise ValueError(f"unknown identity check {name!r}")


def _map_ordered(fn, args: Sequence, parallelism: int | None) -> list:
    if parallelism and parallelism > 1 and len(args) > 1:
        with ThreadPoolExecutor(max_workers=parallelism) as pool:
            return list(pool.map(fn, args))
    return [fn(a) for a in args]


def verify_range(
    name: str, n_max: int, parallelism: int | None = None
) -> list[IdentityReport]:
    """Run the named check for every admissible n <= n_max, in order.

    The composition checks iterate the full (n, k) grid with
    0 <= n <= n_max and 1 <= k <= n_max.  Evaluation may fan out over a
    thread pool; the report order is deterministic either way.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    if name in _CHECKS:
        check, n_min = _CHECKS[name]
        return _map_ordered(check, range(n_min, n_max + 1), parallelism)
    if name in _COMPOSE:
        compose = _COMPOSE[name]
        grid = [(n, k) for n in range(0, n_max + 1) for k in range(1, n_max + 1)]
        return _map_ordered(lambda nk: compose(*nk), grid, parallelism)
    raise ValueError(f"unknown identity check {name!r}")


def verify_many(
    names: Iterable[str], n_max: int, parallelism: int | None = None
) -> list[IdentityReport]:
    """verify_range over several checks, reports concatenated in name order."""
    out: list[IdentityReport] = []
    for name in names:
        out.extend(verify_range(name, n_max, parallelism))
    return out
