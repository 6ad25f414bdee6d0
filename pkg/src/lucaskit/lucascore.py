"""Bivariate Fibonacci and Lucas polynomials.

F_n = x*F_{n-1} + y*F_{n-2} with F_0 = 0, F_1 = 1;
L_n = x*L_{n-1} + y*L_{n-2} with L_0 = 2, L_1 = x.

Three independent construction routes are provided and cross-checked:
the recurrence (fib/luc, memoized), fast doubling (fib_fast/luc_fast,
O(log n) ring operations), and the closed Binet forms over the
extension ring (binet_check).  The composition identities

    F_n(L_k, (-1)^(k+1) y^k) * F_k = F_{k n}
    L_n(L_k, (-1)^(k+1) y^k)       = L_{k n}

are verified exactly by compose_fib/compose_luc.
"""
from __future__ import annotations

import enum
import threading
from typing import TypeVar

from .extring import TWO_ALPHA, TWO_BETA
from .ratpoly import ONE, RatPoly, X, Y, ZERO, Rat
from .report import IdentityReport


class SequenceKind(enum.Enum):
    FIB = "fib"
    LUC = "luc"


_CACHE_LOCK = threading.Lock()
_FIB: list[RatPoly] = [ZERO, ONE]
_LUC: list[RatPoly] = [RatPoly.constant(2), X]


def _extend(cache: list[RatPoly], n: int) -> None:
    # Append-only under the lock; entries are immutable so reads are free.
    with _CACHE_LOCK:
        while len(cache) <= n:
            cache.append(X * cache[-1] + Y * cache[-2])


def fib(n: int) -> RatPoly:
    """n-th bivariate Fibonacci polynomial, via the recurrence."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n >= len(_FIB):
        _extend(_FIB, n)
    return _FIB[n]


def luc(n: int) -> RatPoly:
    """n-th bivariate Lucas polynomial, via the recurrence."""
    if n < 0:
        raise ValueError("index must be nonnegative")
    if n >= len(_LUC):
        _extend(_LUC, n)
    return _LUC[n]


# -- fast doubling ----------------------------------------------------------

R = TypeVar("R")  # any commutative ring value: RatPoly, int or Fraction


def _fib_pair(n: int, x: R, y: R, one: R, zero: R) -> tuple[R, R]:
    """(F_n, F_{n+1}) over an arbitrary commutative ring, by doubling.

    Uses F_{2m} = F_m * L_m, F_{2m+1} = F_{m+1} * L_m - (-y)^m and
    L_m = 2*F_{m+1} - x*F_m, carrying (-y)^m alongside the pair.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    a, b, p = zero, one, one  # F_0, F_1, (-y)^0
    for bit in bin(n)[2:] if n else "":
        l = b + b - x * a
        f_even = a * l
        f_odd = b * l - p
        p = p * p
        if bit == "1":
            a, b = f_odd, x * f_odd + y * f_even
            p = p * (zero - y)
        else:
            a, b = f_even, f_odd
    return a, b


def fib_fast(n: int) -> RatPoly:
    """Same polynomial as fib(n), in O(log n) ring operations."""
    return _fib_pair(n, X, Y, ONE, ZERO)[0]


def luc_fast(n: int) -> RatPoly:
    """Same polynomial as luc(n), in O(log n) ring operations."""
    a, b = _fib_pair(n, X, Y, ONE, ZERO)
    return b + b - X * a


def fib_value(n: int, x0: Rat, y0: Rat) -> Rat:
    """F_n(x0, y0) by the same doubling scheme, specialized at a point."""
    return _fib_pair(n, x0, y0, 1, 0)[0]


def luc_value(n: int, x0: Rat, y0: Rat) -> Rat:
    a, b = _fib_pair(n, x0, y0, 1, 0)
    return b + b - x0 * a


# -- Binet cross-check -------------------------------------------------------

def binet_check(kind: SequenceKind, n: int) -> bool:
    """Exact comparison of extension-ring root powers with the recurrence.

    Both roots are carried doubled (2a = x+s, 2b = x-s), so the closed
    forms read (2a)^n + (2b)^n = 2^n * L_n and
    (2a)^n - (2b)^n = 2^n * F_n * s.
    """
    if n < 0:
        raise ValueError("index must be nonnegative")
    pu = TWO_ALPHA ** n
    pv = TWO_BETA ** n
    two_n = 2 ** n
    if kind is SequenceKind.LUC:
        s = pu + pv
        return s.b.is_zero() and s.a == luc(n).scale(two_n)
    d = pu - pv
    return d.a.is_zero() and d.b == fib(n).scale(two_n)


# -- composition identities ---------------------------------------------------

def _compose_py(k: int) -> RatPoly:
    # (-1)^(k+1) * y^k
    sign = 1 if k % 2 == 1 else -1
    return RatPoly.monomial(0, k, sign)


def compose_fib(n: int, k: int) -> IdentityReport:
    """Check F_n(L_k, (-1)^(k+1) y^k) * F_k == F_{k n} exactly.

    The quotient form F_{k n} / F_k is checked multiplied through, so no
    polynomial division is needed.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 1:
        raise ValueError("k must be positive")
    lhs = fib(n).subst(luc(k), _compose_py(k)) * fib(k)
    rhs = fib(k * n)
    return IdentityReport.from_sides("remark_fib", n, lhs, rhs, aux_k=k)


def compose_luc(n: int, k: int) -> IdentityReport:
    """Check L_n(L_k, (-1)^(k+1) y^k) == L_{k n} exactly."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 1:
        raise ValueError("k must be positive")
    lhs = luc(n).subst(luc(k), _compose_py(k))
    rhs = luc(k * n)
    return IdentityReport.from_sides("remark_luc", n, lhs, rhs, aux_k=k)
