#!/usr/bin/env python3
"""
Tests for arbitrary-precision Fibonacci numbers and the cube-sum identities.
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import math

import pytest

from fibgamma.errors import DomainError
from fibgamma.fibonacci import (
    Parity,
    alt_sum_cubes,
    alt_sum_cubes_direct,
    cassini,
    fib,
    fib_iterative,
    fib_pair,
    fib_pairs,
    fib_parity,
    fib_pow,
    fib_triple_identity,
    sum_cubes,
    sum_cubes_direct,
)


class TestFib:
    """Fast doubling against known values and the recurrence."""

    @pytest.mark.parametrize("n, expected", [
        (0, 0), (1, 1), (2, 1), (7, 13), (12, 144), (20, 6765),
        (100, 354224848179261915075),
    ])
    def test_known_values(self, n, expected):
        assert fib(n) == expected

    def test_pair_is_consecutive(self):
        for n in range(0, 60):
            assert fib_pair(n) == (fib_iterative(n), fib_iterative(n + 1))

    def test_matches_recurrence(self):
        for n in range(2, 501):
            assert fib(n) == fib(n - 1) + fib(n - 2)

    def test_consecutive_terms_coprime(self):
        for n, f, g in fib_pairs(2, 500):
            assert math.gcd(f, g) == 1

    def test_large_index_is_exact(self):
        """F_1000 has 209 digits and ends in ...875."""
        value = fib(1000)
        assert len(str(value)) == 209
        assert value % 1000 == 875

    def test_negative_index_rejected(self):
        with pytest.raises(DomainError):
            fib(-1)

    def test_against_sympy(self):
        sympy = pytest.importorskip("sympy")
        for n in (0, 1, 50, 333, 1024):
            assert fib(n) == int(sympy.fibonacci(n))


class TestFibPairs:
    """The sliding window used by scans."""

    def test_window_matches_fast_doubling(self):
        for n, f, g in fib_pairs(40, 80):
            assert (f, g) == fib_pair(n)

    def test_empty_range(self):
        assert list(fib_pairs(10, 9)) == []

    def test_first_rows(self):
        assert list(fib_pairs(0, 3)) == [(0, 0, 1), (1, 1, 1), (2, 1, 2), (3, 2, 3)]


class TestFibPow:
    """Powers feeding the table columns."""

    @pytest.mark.parametrize("n, k, expected", [
        (10, 2, 3025),
        (8, 3, 9261),
        (11, 4, 62742241),
        (5, 1, 5),
    ])
    def test_values(self, n, k, expected):
        assert fib_pow(n, k) == expected

    def test_quartic_beyond_hundred(self):
        assert fib_pow(120, 4) == fib(120) ** 4

    def test_zero_exponent_rejected(self):
        with pytest.raises(DomainError):
            fib_pow(5, 0)


class TestParity:
    """F_n is even exactly when 3 divides n."""

    @pytest.mark.parametrize("n, expected", [
        (0, Parity.EVEN), (6, Parity.EVEN), (7, Parity.ODD), (8, Parity.ODD),
    ])
    def test_examples(self, n, expected):
        assert fib_parity(n) is expected

    def test_against_values(self):
        for n, f, _ in fib_pairs(0, 3000):
            assert (fib_parity(n) is Parity.EVEN) == (f % 2 == 0)

    def test_str(self):
        assert str(Parity.EVEN) == 'even'


class TestCassini:
    """F_{n-1} F_{n+1} - F_n^2 = (-1)^n."""

    @pytest.mark.parametrize("n, expected", [(1, -1), (2, 1), (9, -1)])
    def test_examples(self, n, expected):
        assert cassini(n) == expected

    def test_range(self):
        for n in range(1, 1001):
            assert cassini(n) == (-1) ** n

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            cassini(0)


class TestTripleIdentity:
    """F_3n = 5 F_n^3 + 3 (-1)^n F_n."""

    def test_examples(self):
        assert fib_triple_identity(2) == (8, 8)
        assert fib_triple_identity(3) == (34, 34)
        lhs, rhs = fib_triple_identity(10)
        assert lhs == rhs == fib(30)

    def test_range(self):
        for n in range(1, 1001):
            lhs, rhs = fib_triple_identity(n)
            assert lhs == rhs


class TestCubeSums:
    """Closed forms for the (alternating) sums of cubes."""

    @pytest.mark.parametrize("n, expected", [(1, 1), (2, 2), (3, 10), (4, 37)])
    def test_sum_examples(self, n, expected):
        assert sum_cubes(n) == expected

    @pytest.mark.parametrize("n, expected", [(1, -1), (2, 0), (3, -8), (4, 19)])
    def test_alternating_examples(self, n, expected):
        assert alt_sum_cubes(n) == expected

    def test_large_values_against_direct_summation(self):
        assert sum_cubes(300) == sum_cubes_direct(300)
        assert alt_sum_cubes(200) == alt_sum_cubes_direct(200)

    def test_range_against_running_sums(self):
        total = alternating = 0
        for n, f, _ in fib_pairs(1, 1000):
            total += f ** 3
            alternating += (-1) ** n * f ** 3
            assert sum_cubes(n) == total
            assert alt_sum_cubes(n) == alternating

    def test_zero_rejected(self):
        with pytest.raises(DomainError):
            sum_cubes(0)
        with pytest.raises(DomainError):
            alt_sum_cubes(0)
