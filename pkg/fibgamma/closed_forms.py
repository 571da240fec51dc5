#!/usr/bin/env python3
"""
Explicit solutions of the pair for (F_n^i, F_{n+1}^i), i = 1, 2, 3.

    linear   i = 1, n >= 3   six identities selected by n mod 6
    squared  i = 2, n >= 2   three cases selected by n mod 6
    cubed    i = 3, n >= 3   (alternating) sums of cubes, or the recurrence
                             x_n = F_n^3 - x_{n-1} - 1, y_n = y_{n-1} + F_{n-1}^3

Every result can be checked against the general solver. The identity helpers
return (label, lhs, rhs) triples with both sides doubled where the published
form has a /2, so they compare as plain integers.
"""

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Iterator, List, Tuple

from .errors import ContradictionError, DomainError, exact_div
from .fibonacci import (
    alt_sum_cubes,
    alt_sum_cubes_direct,
    fib_pair,
    sum_cubes,
    sum_cubes_direct,
)
from .solver import CoprimePair, PairSolution, solve_pair

logger = logging.getLogger(__name__)

Identity = Tuple[str, int, int]


class Family(Enum):
    """Exponent family with its smallest supported n."""
    LINEAR = 'linear'
    SQUARED = 'squared'
    CUBED = 'cubed'

    def __str__(self) -> str:
        return self.value

    @property
    def exponent(self) -> int:
        return {'linear': 1, 'squared': 2, 'cubed': 3}[self.value]

    @property
    def min_n(self) -> int:
        return {'linear': 3, 'squared': 2, 'cubed': 3}[self.value]


@dataclass(frozen=True)
class ClosedFormResult:
    """Solution of the pair for (F_n^i, F_{n+1}^i) read off a closed form."""
    family: Family
    n: int
    gamma: int
    x: int
    y: int

    def pair(self) -> CoprimePair:
        fn, fn1 = fib_pair(self.n)
        i = self.family.exponent
        return CoprimePair(fn ** i, fn1 ** i)

    def as_solution(self) -> PairSolution:
        return PairSolution(self.gamma, self.x, self.y)

    def check(self) -> 'ClosedFormResult':
        """Re-substitute into the defining equation; raise on mismatch."""
        pair = self.pair()
        if self.x < 0 or self.y < 0:
            raise ContradictionError(f"{self.family} n={self.n}: negative solution {self}")
        if pair.evaluate(self.x, self.y) + self.gamma - 1 != pair.target:
            raise ContradictionError(
                f"{self.family} n={self.n}: ({self.x}, {self.y}) with gamma={self.gamma} "
                f"does not solve the pair"
            )
        return self

    def __str__(self) -> str:
        return f"gamma={self.gamma} x={self.x} y={self.y}"


def _check_n(family: Family, n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int):
        raise DomainError(f"index must be an integer, got {n!r}")
    if n < family.min_n:
        raise DomainError(f"{family} closed form needs n >= {family.min_n}, got {n}")


def _half(value: int, what: str) -> int:
    return exact_div(value, 2, what)


def closed_solution_linear(n: int) -> ClosedFormResult:
    """
    Solution for (F_n, F_{n+1}), n >= 3.

    Gamma is 1 for n = 0, 1, 2 (mod 6) and 2 for n = 3, 4, 5 (mod 6). When
    n = 1 (mod 3), x = (F_n - 1)/2 and y = (F_{n-2} - 1)/2; otherwise
    x = y = (F_{n-1} - 1)/2.
    """
    _check_n(Family.LINEAR, n)
    fm1, fn = fib_pair(n - 1)
    if n % 3 == 1:
        x = _half(fn - 1, f"(F_{n} - 1)/2")
        y = _half(fn - fm1 - 1, f"(F_{n - 2} - 1)/2")
    else:
        x = y = _half(fm1 - 1, f"(F_{n - 1} - 1)/2")
    gamma = 1 if n % 6 in (0, 1, 2) else 2
    return ClosedFormResult(Family.LINEAR, n, gamma, x, y)


def closed_solution_squared(n: int) -> ClosedFormResult:
    """Solution for (F_n^2, F_{n+1}^2), n >= 2, split by n mod 6."""
    _check_n(Family.SQUARED, n)
    fm1, fn = fib_pair(n - 1)
    sq, prev_sq = fn * fn, fm1 * fm1
    r = n % 6
    if r == 1:
        gamma = 2
        x = _half(sq - 3, f"(F_{n}^2 - 3)/2")
        y = _half(sq - prev_sq - 1, f"(F_{n}^2 - F_{n - 1}^2 - 1)/2")
    elif r == 4:
        gamma = 2
        x = _half(sq + 1, f"(F_{n}^2 + 1)/2")
        y = _half(sq - prev_sq - 1, f"(F_{n}^2 - F_{n - 1}^2 - 1)/2")
    else:
        gamma = 1
        x = sq - _half(prev_sq + 1, f"(F_{n - 1}^2 + 1)/2")
        y = _half(prev_sq - 1, f"(F_{n - 1}^2 - 1)/2")
    return ClosedFormResult(Family.SQUARED, n, gamma, x, y)


def closed_solution_cubed(n: int) -> ClosedFormResult:
    """
    Solution for (F_n^3, F_{n+1}^3), n >= 3, from sums of cubes.

    Odd n: x = sum_{k<=n} (-1)^{k-1} F_k^3, y = sum_{2<=k<=n-1} F_k^3, gamma 1.
    Even n: x = sum_{k<=n} (-1)^k F_k^3 - 1, same y, gamma 2.
    Sums go through the closed forms, so the cost stays logarithmic in n.
    """
    _check_n(Family.CUBED, n)
    y = sum_cubes(n - 1) - 1
    if n % 2:
        return ClosedFormResult(Family.CUBED, n, 1, -alt_sum_cubes(n), y)
    return ClosedFormResult(Family.CUBED, n, 2, alt_sum_cubes(n) - 1, y)


def cubed_recurrence_step(prev: ClosedFormResult) -> ClosedFormResult:
    """Advance a cubed solution from n-1 to n: x_n = F_n^3 - x_{n-1} - 1, y_n = y_{n-1} + F_{n-1}^3."""
    if prev.family is not Family.CUBED:
        raise DomainError(f"recurrence step needs a cubed result, got {prev.family}")
    if prev.n < Family.CUBED.min_n:
        raise DomainError(f"recurrence step needs n >= 3, got {prev.n}")
    fm1, fn = fib_pair(prev.n)
    return ClosedFormResult(
        Family.CUBED,
        prev.n + 1,
        3 - prev.gamma,
        fn ** 3 - prev.x - 1,
        prev.y + fm1 ** 3,
    )


def cubed_chain(n_to: int) -> Iterator[ClosedFormResult]:
    """Yield the cubed solutions for n = 3..n_to by repeated recurrence steps."""
    if n_to < Family.CUBED.min_n:
        return
    current = closed_solution_cubed(Family.CUBED.min_n)
    yield current
    while current.n < n_to:
        current = cubed_recurrence_step(current)
        yield current


_SOLVERS = {
    Family.LINEAR: closed_solution_linear,
    Family.SQUARED: closed_solution_squared,
    Family.CUBED: closed_solution_cubed,
}


def closed_solution(family: Family, n: int) -> ClosedFormResult:
    """Dispatch to the closed form of the given family."""
    return _SOLVERS[Family(family)](n)


def matches_solver(result: ClosedFormResult) -> bool:
    """True when the closed form agrees with solve_pair on the same pair."""
    return solve_pair(result.pair()) == result.as_solution()


def linear_identity(n: int) -> Identity:
    """The mod-6 identity behind closed_solution_linear, both sides doubled."""
    result = closed_solution_linear(n)
    fn, fn1 = fib_pair(n)
    lhs = 2 * (result.gamma - 1) + 2 * result.x * fn + 2 * result.y * fn1
    rhs = (fn - 1) * (fn1 - 1)
    return f"linear identity n={n} (n mod 6 = {n % 6})", lhs, rhs


def squared_identities(n: int) -> List[Identity]:
    """
    The squared-family identities at n >= 2, doubled to stay integral.

    The first holds for odd n, the second for even n, the third for all n.
    """
    _check_n(Family.SQUARED, n)
    fm1, fn = fib_pair(n - 1)
    fn1 = fm1 + fn
    sq, prev_sq, next_sq = fn * fn, fm1 * fm1, fn1 * fn1
    rhs = (sq - 1) * (next_sq - 1)
    identities = []
    if n % 2:
        lhs = 2 + (sq - 3) * sq + (sq - prev_sq - 1) * next_sq
        identities.append((f"odd-n squared identity n={n}", lhs, rhs))
    else:
        lhs = 2 + (sq + 1) * sq + (sq - prev_sq - 1) * next_sq
        identities.append((f"even-n squared identity n={n}", lhs, rhs))
    lhs = (2 * sq - prev_sq - 1) * sq + (prev_sq - 1) * next_sq
    identities.append((f"universal squared identity n={n}", lhs, rhs))
    return identities


def cubed_identities(m: int, direct: bool = False) -> List[Identity]:
    """
    The two cubed-family identities at m >= 2 (n = 2m - 1 and n = 2m).

    With direct=True the sums of cubes are added up term by term instead of
    going through their closed forms, making the check independent of them.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise DomainError(f"cubed identities need m >= 2, got {m!r}")
    total = sum_cubes_direct if direct else sum_cubes
    alternating = alt_sum_cubes_direct if direct else alt_sum_cubes

    f_odd, f_even = fib_pair(2 * m - 1)
    f_next = f_odd + f_even
    c_odd, c_even, c_next = f_odd ** 3, f_even ** 3, f_next ** 3

    lhs_odd = 2 * (-alternating(2 * m - 1) * c_odd + (total(2 * m - 2) - 1) * c_even)
    rhs_odd = (c_odd - 1) * (c_even - 1)
    lhs_even = 2 + 2 * ((alternating(2 * m) - 1) * c_even + (total(2 * m - 1) - 1) * c_next)
    rhs_even = (c_even - 1) * (c_next - 1)
    return [
        (f"odd cubed identity m={m}", lhs_odd, rhs_odd),
        (f"even cubed identity m={m}", lhs_even, rhs_even),
    ]


def squared_observations(n: int) -> List[Identity]:
    """
    Regularities of the squared-family solutions, checked on solver output.

    F_n^2 - x - y = 1 when n is not 1 mod 3; 2x - F_n^2 is 1 when n = 4 mod 6
    and -3 when n = 1 mod 6.
    """
    _check_n(Family.SQUARED, n)
    fn, fn1 = fib_pair(n)
    sq = fn * fn
    solution = solve_pair(CoprimePair(sq, fn1 * fn1))
    if n % 3 != 1:
        return [(f"F_n^2 - x - y at n={n}", sq - solution.x - solution.y, 1)]
    expected = 1 if n % 6 == 4 else -3
    return [(f"2x - F_n^2 at n={n}", 2 * solution.x - sq, expected)]
