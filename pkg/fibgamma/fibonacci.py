#!/usr/bin/env python3
"""
Arbitrary-precision Fibonacci numbers and the cube-sum identities.

F_0 = 0, F_1 = 1, F_n = F_{n-1} + F_{n-2}. Everything here is a pure function
of its arguments on Python integers, so values never overflow and can be
shared freely between threads or processes.

Design Principles:
- Fast doubling for single values: O(log n) big-integer multiplications
- Sliding recurrence for ranges: one addition per step after a single seed
- Closed forms are evaluated in integers; every division is checked exact
- The naive recurrence and direct summations stay around as oracles
"""

import logging
from enum import Enum
from typing import Iterator, Tuple

from .errors import DomainError, exact_div

logger = logging.getLogger(__name__)

FibIndex = int
BigNat = int


class Parity(Enum):
    """Parity of a Fibonacci number."""
    EVEN = 'even'
    ODD = 'odd'

    def __str__(self) -> str:
        return self.value


def _check_index(n: int, minimum: int = 0) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"index must be an integer, got {n!r}")
    if n < minimum:
        raise DomainError(f"index must be >= {minimum}, got {n}")


def fib_pair(n: FibIndex) -> Tuple[BigNat, BigNat]:
    """
    Return (F_n, F_{n+1}) by fast doubling.

    Walks the bits of n from the top, using
    F_2k = F_k (2 F_{k+1} - F_k) and F_2k+1 = F_k^2 + F_{k+1}^2.
    """
    _check_index(n)
    a, b = 0, 1
    for bit in bin(n)[2:]:
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == '1':
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fib(n: FibIndex) -> BigNat:
    """Return F_n exactly."""
    return fib_pair(n)[0]


def fib_pow(n: FibIndex, k: int) -> BigNat:
    """Return F_n ** k."""
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f"exponent must be a positive integer, got {k!r}")
    return fib(n) ** k


def fib_iterative(n: FibIndex) -> BigNat:
    """F_n by the plain recurrence. Linear time; used as an oracle."""
    _check_index(n)
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def fib_pairs(n_from: FibIndex, n_to: FibIndex) -> Iterator[Tuple[int, BigNat, BigNat]]:
    """
    Yield (n, F_n, F_{n+1}) for n_from <= n <= n_to.

    Seeds once with fast doubling, then slides the window forward.
    """
    _check_index(n_from)
    if n_to < n_from:
        return
    a, b = fib_pair(n_from)
    for n in range(n_from, n_to + 1):
        yield n, a, b
        a, b = b, a + b


def fib_parity(n: FibIndex) -> Parity:
    """F_n is even exactly when n is a multiple of 3."""
    _check_index(n)
    return Parity.EVEN if n % 3 == 0 else Parity.ODD


def cassini(n: FibIndex) -> int:
    """Return F_{n-1} F_{n+1} - F_n^2, which is (-1)^n."""
    _check_index(n, 1)
    prev, cur = fib_pair(n - 1)
    nxt = prev + cur
    return prev * nxt - cur * cur


def fib_triple_identity(n: FibIndex) -> Tuple[BigNat, BigNat]:
    """Return both sides of F_3n = 5 F_n^3 + 3 (-1)^n F_n."""
    _check_index(n, 1)
    f = fib(n)
    sign = -1 if n % 2 else 1
    return fib(3 * n), 5 * f ** 3 + 3 * sign * f


def sum_cubes(n: FibIndex) -> BigNat:
    """
    Sum of F_k^3 for k = 1..n via the closed form.

    (F_{3n+3} + F_{3n}) / 4 - F_{n+1}^3 - F_n^3 + 1/2, evaluated as
    (F_{3n+3} + F_{3n} + 2) / 4 - F_{n+1}^3 - F_n^3.
    """
    _check_index(n, 1)
    f3n, f3n1 = fib_pair(3 * n)
    f3n3 = f3n1 + (f3n1 + f3n)  # F_{3n+3} = F_{3n+2} + F_{3n+1}
    fn, fn1 = fib_pair(n)
    quarter = exact_div(f3n3 + f3n + 2, 4, f"sum of cubes closed form at n={n}")
    return quarter - fn1 ** 3 - fn ** 3


def alt_sum_cubes(n: FibIndex) -> int:
    """
    Sum of (-1)^k F_k^3 for k = 1..n via the closed form.

    ((-1)^n F_{3n+3} + (-1)^{n+1} F_{3n}) / 4 - (-1)^n F_{n+1}^3
    - (-1)^{n+1} F_n^3 + 1/2.
    """
    _check_index(n, 1)
    s = -1 if n % 2 else 1
    f3n, f3n1 = fib_pair(3 * n)
    f3n3 = f3n1 + (f3n1 + f3n)
    fn, fn1 = fib_pair(n)
    quarter = exact_div(
        s * f3n3 - s * f3n + 2, 4, f"alternating sum of cubes closed form at n={n}"
    )
    return quarter - s * fn1 ** 3 + s * fn ** 3


def sum_cubes_direct(n: FibIndex) -> BigNat:
    """Direct summation oracle for sum_cubes."""
    _check_index(n, 1)
    return sum(f ** 3 for _, f, _ in fib_pairs(1, n))


def alt_sum_cubes_direct(n: FibIndex) -> int:
    """Direct summation oracle for alt_sum_cubes."""
    _check_index(n, 1)
    return sum((-1) ** k * f ** 3 for k, f, _ in fib_pairs(1, n))
