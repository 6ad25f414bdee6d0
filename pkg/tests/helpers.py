"""Independent integer-recurrence oracles shared by the tests."""
from __future__ import annotations


def recurrence_numbers(a0: int, a1: int, x0: int, y0: int, count: int) -> list[int]:
    """First `count` values of a_n = x0*a_{n-1} + y0*a_{n-2}."""
    out = [a0, a1]
    while len(out) < count:
        out.append(x0 * out[-1] + y0 * out[-2])
    return out[:count]


def fibonacci_numbers(count: int) -> list[int]:
    return recurrence_numbers(0, 1, 1, 1, count)


def lucas_numbers(count: int) -> list[int]:
    return recurrence_numbers(2, 1, 1, 1, count)


def pell_numbers(count: int) -> list[int]:
    return recurrence_numbers(0, 1, 2, 1, count)
