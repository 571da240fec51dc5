#!/usr/bin/env python3
"""
Exact solver and classifier for the Diophantine pairs over coprime (a, b).

For coprime a, b exactly one of

    a x + b y     = (a-1)(b-1)/2
    a x + b y + 1 = (a-1)(b-1)/2

has a nonnegative integral solution, and it is unique. Gamma(a, b) is 1 or 2
according to which one. This module also solves the shifted pair (targets
moved up by a + b, solved in positive integers) and the asymmetric positive
pair a x + b y = (a+1)b/2 +- 1.

Design Principles:
- Canonical residues: x = t * a^{-1} mod b, then y follows; O(log) per call
- Brute force exists only as an independent oracle at test scale
- Pairs are ordered; Gamma(a, b) is never assumed equal to Gamma(b, a)
- Non-coprime input is an error, never silently reduced
"""

import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import List, Optional, Tuple

from .errors import ContradictionError, DomainError, exact_div

logger = logging.getLogger(__name__)

BRUTE_FORCE_LIMIT = 10 ** 8


def _check_positive(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise DomainError(f"{name} must be positive, got {value}")


@dataclass(frozen=True)
class CoprimePair:
    """Ordered pair (a, b) of positive coprime integers; x multiplies a."""
    a: int
    b: int

    def __post_init__(self):
        _check_positive('a', self.a)
        _check_positive('b', self.b)
        if math.gcd(self.a, self.b) != 1:
            raise DomainError(
                f"({self.a}, {self.b}) is not coprime: gcd = {math.gcd(self.a, self.b)}"
            )

    @property
    def target(self) -> int:
        """T = (a-1)(b-1)/2."""
        return exact_div((self.a - 1) * (self.b - 1), 2, "target (a-1)(b-1)/2")

    def evaluate(self, x: int, y: int) -> int:
        """Return a x + b y."""
        return self.a * x + self.b * y


@dataclass(frozen=True)
class PairSolution:
    """Gamma plus the unique (x, y) with a x + b y + (gamma - 1) equal to the target."""
    gamma: int
    x: int
    y: int

    def shifted(self, dx: int = 1, dy: int = 1) -> 'PairSolution':
        return PairSolution(self.gamma, self.x + dx, self.y + dy)

    def __str__(self) -> str:
        return f"gamma={self.gamma} x={self.x} y={self.y}"


class Equation(Enum):
    """Which equation of the positive pair is solvable."""
    PLUS = 'plus'    # a x + b y = k + 1
    MINUS = 'minus'  # a x + b y = k - 1

    def __str__(self) -> str:
        return self.value

    @property
    def offset(self) -> int:
        return 1 if self is Equation.PLUS else -1


@dataclass(frozen=True)
class PositivePairSolution:
    """Unique positive solution of a x + b y = k +- 1 with k = (a+1)b/2."""
    equation: Equation
    x: int
    y: int
    k: int

    @property
    def target(self) -> int:
        return self.k + self.equation.offset

    def __str__(self) -> str:
        return f"equation={self.equation} x={self.x} y={self.y}"


def ext_gcd(a: int, b: int) -> Tuple[int, int, int]:
    """
    Extended Euclid: return (g, u, v) with g = gcd(a, b) and u a + v b = g.

    Iterative, so depth does not grow with the size of the inputs.
    """
    _check_positive('a', a)
    _check_positive('b', b)
    old_r, r = a, b
    old_u, u = 1, 0
    old_v, v = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_u, u = u, old_u - q * u
        old_v, v = v, old_v - q * v
    return old_r, old_u, old_v


def mod_inverse(a: int, m: int) -> int:
    """Inverse of a modulo m in [0, m). m = 1 gives 0."""
    g, u, _ = ext_gcd(a, m)
    if g != 1:
        raise DomainError(f"{a} has no inverse modulo {m}")
    return u % m


def solve_target(pair: CoprimePair, t: int) -> Optional[Tuple[int, int]]:
    """
    Canonical nonnegative representation t = a x + b y with 0 <= x < b.

    x is the least nonnegative residue of t * a^{-1} mod b, so y is the
    largest y any solution can have; if it is negative there is no
    nonnegative solution at all. For t < a b the answer is also unique.
    When b = 1 the residue is always 0 and y = t.
    """
    if t < 0:
        raise DomainError(f"target must be nonnegative, got {t}")
    x = (t * mod_inverse(pair.a, pair.b)) % pair.b
    rest = t - pair.a * x
    if rest < 0:
        return None
    return x, exact_div(rest, pair.b, "canonical residue")


def solve_target_positive(pair: CoprimePair, t: int) -> Optional[Tuple[int, int]]:
    """Canonical positive representation t = a x + b y with 1 <= x <= b and y >= 1."""
    if t < 0:
        raise DomainError(f"target must be nonnegative, got {t}")
    x = ((t * mod_inverse(pair.a, pair.b) - 1) % pair.b) + 1
    rest = t - pair.a * x
    if rest < pair.b:
        return None
    return x, exact_div(rest, pair.b, "canonical residue")


def _choose(pair: CoprimePair, first, second, what: str) -> PairSolution:
    if first is not None and second is not None:
        raise ContradictionError(
            f"{what}: both equations solvable for ({pair.a}, {pair.b}): {first}, {second}"
        )
    if first is None and second is None:
        raise ContradictionError(
            f"{what}: neither equation solvable for ({pair.a}, {pair.b})"
        )
    if first is not None:
        return PairSolution(1, *first)
    return PairSolution(2, *second)


def solve_pair(pair: CoprimePair) -> PairSolution:
    """Solve a x + b y = T or a x + b y + 1 = T; exactly one succeeds."""
    t = pair.target
    first = solve_target(pair, t)
    second = solve_target(pair, t - 1) if t >= 1 else None
    solution = _choose(pair, first, second, "nonnegative pair")
    logger.debug("solve_pair(%d, %d) -> %s", pair.a, pair.b, solution)
    return solution


def gamma(pair: CoprimePair) -> int:
    """Gamma(a, b) in {1, 2}."""
    return solve_pair(pair).gamma


def solve_shifted_pair(pair: CoprimePair) -> PairSolution:
    """
    Solve the pair with targets T + a + b and T + a + b - 1 in positive integers.

    Positive solutions of the shifted equations are exactly the nonnegative
    solutions of the original pair moved by (1, 1), so the result must agree
    with solve_pair; a disagreement raises ContradictionError.
    """
    t = pair.target + pair.a + pair.b
    first = solve_target_positive(pair, t)
    second = solve_target_positive(pair, t - 1)
    solution = _choose(pair, first, second, "shifted pair")
    expected = solve_pair(pair).shifted()
    if solution != expected:
        raise ContradictionError(
            f"shifted pair for ({pair.a}, {pair.b}) gave {solution}, expected {expected}"
        )
    return solution


def solve_positive_pair(a: int, b: int) -> PositivePairSolution:
    """
    Solve a x + b y = (a+1)b/2 + 1 or a x + b y = (a+1)b/2 - 1 in positive integers.

    Requires a odd, b >= 2, gcd(a, b) = 1. With k = (a+1)b/2, pick r1, r2 in
    [1, b-1] with a r1 = k + 1 and a r2 = k - 1 (mod b); then r1 + r2 = b and
    the cofactors satisfy s1 + s2 = 1, so exactly one s is positive.
    """
    pair = CoprimePair(a, b)
    if a % 2 == 0:
        raise DomainError(f"a must be odd for the positive pair, got {a}")
    if b < 2:
        raise DomainError(f"b must be at least 2 for the positive pair, got {b}")

    k = exact_div((a + 1) * b, 2, "k = (a+1)b/2")
    if k % b:
        raise ContradictionError(f"k = {k} is not a multiple of b = {b}")

    inverse = mod_inverse(a, b)
    r1 = ((k + 1) * inverse) % b
    r2 = ((k - 1) * inverse) % b
    if not (1 <= r1 <= b - 1 and 1 <= r2 <= b - 1):
        raise ContradictionError(f"residues ({r1}, {r2}) out of [1, {b - 1}]")
    s1 = exact_div(k + 1 - a * r1, b, "s1")
    s2 = exact_div(k - 1 - a * r2, b, "s2")

    if r1 + r2 != b:
        raise ContradictionError(f"r1 + r2 = {r1 + r2} != b = {b} for ({a}, {b})")
    if s1 + s2 != 1:
        raise ContradictionError(f"s1 + s2 = {s1 + s2} != 1 for ({a}, {b})")

    if s1 > 0:
        return PositivePairSolution(Equation.PLUS, r1, s1, k)
    return PositivePairSolution(Equation.MINUS, r2, s2, k)


def brute_force_oracle(a: int, b: int, t: int, positive: bool = False) -> List[Tuple[int, int]]:
    """
    Every (x, y) with a x + b y = t, by enumerating x.

    Nonnegative mode takes x, y >= 0; positive mode takes x, y >= 1.
    Results are sorted by x. Only meant for a b <= BRUTE_FORCE_LIMIT.
    """
    _check_positive('a', a)
    _check_positive('b', b)
    if t < 0:
        raise DomainError(f"target must be nonnegative, got {t}")
    if a * b > BRUTE_FORCE_LIMIT or t // a > BRUTE_FORCE_LIMIT:
        raise DomainError(
            f"brute force refused for ({a}, {b}, {t}): range exceeds {BRUTE_FORCE_LIMIT}"
        )
    low = 1 if positive else 0
    solutions = []
    for x in range(low, t // a + 1):
        rest = t - a * x
        if rest % b == 0 and rest // b >= low:
            solutions.append((x, rest // b))
    return solutions
