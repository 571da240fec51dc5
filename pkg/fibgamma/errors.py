#!/usr/bin/env python3
"""
Exception hierarchy for fibgamma.

Library code raises; only the command-line front end turns these into
exit codes (1 for DomainError, 2 for ContradictionError).
"""


class FibGammaError(Exception):
    """Base class for all fibgamma errors."""


class DomainError(FibGammaError, ValueError):
    """Input outside the domain of an operation (bad pair, bad index, ...)."""


class ContradictionError(FibGammaError, RuntimeError):
    """
    A theorem-violation guard fired.

    Raised when an exact computation disagrees with a proven statement:
    both (or neither) targets solvable, a division that must be exact is not,
    a closed form disagreeing with the solver. None of these should ever
    happen; if one does, the arithmetic is wrong, not the theorem.
    """


def exact_div(numerator: int, denominator: int, what: str = "value") -> int:
    """Divide exactly or raise ContradictionError."""
    q, r = divmod(numerator, denominator)
    if r:
        raise ContradictionError(
            f"{what}: {numerator} is not divisible by {denominator}"
        )
    return q
