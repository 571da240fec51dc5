"""
fibgamma - exact solver and explorer for a pair of Diophantine equations.

For coprime a, b exactly one of a x + b y = (a-1)(b-1)/2 and
a x + b y + 1 = (a-1)(b-1)/2 has a nonnegative integral solution; Gamma(a, b)
records which. This package solves and classifies the pair for any coprime
(a, b), gives the closed forms for consecutive Fibonacci numbers, their
squares and cubes, and scans Gamma(F_n^i, F_{n+1}^j) for everything else.
"""

__version__ = "0.1.0"

from .errors import (
    FibGammaError,
    DomainError,
    ContradictionError,
)

from .fibonacci import (
    Parity,
    fib,
    fib_pair,
    fib_pairs,
    fib_pow,
    fib_parity,
    cassini,
    fib_triple_identity,
    sum_cubes,
    alt_sum_cubes,
)

from .solver import (
    CoprimePair,
    PairSolution,
    PositivePairSolution,
    Equation,
    ext_gcd,
    mod_inverse,
    solve_target,
    solve_pair,
    gamma,
    solve_shifted_pair,
    solve_positive_pair,
    brute_force_oracle,
)

from .closed_forms import (
    Family,
    ClosedFormResult,
    closed_solution,
    closed_solution_linear,
    closed_solution_squared,
    closed_solution_cubed,
    cubed_recurrence_step,
)

from .explorer import (
    ScanRecord,
    PositiveScanRecord,
    PeriodReport,
    TableFormat,
    scan,
    iter_scan,
    scan_parallel,
    detect_period,
    difference_probe,
    emit_table,
)

__all__ = [
    # Errors
    "FibGammaError",
    "DomainError",
    "ContradictionError",

    # Fibonacci numbers
    "Parity",
    "fib",
    "fib_pair",
    "fib_pairs",
    "fib_pow",
    "fib_parity",
    "cassini",
    "fib_triple_identity",
    "sum_cubes",
    "alt_sum_cubes",

    # Solver
    "CoprimePair",
    "PairSolution",
    "PositivePairSolution",
    "Equation",
    "ext_gcd",
    "mod_inverse",
    "solve_target",
    "solve_pair",
    "gamma",
    "solve_shifted_pair",
    "solve_positive_pair",
    "brute_force_oracle",

    # Closed forms
    "Family",
    "ClosedFormResult",
    "closed_solution",
    "closed_solution_linear",
    "closed_solution_squared",
    "closed_solution_cubed",
    "cubed_recurrence_step",

    # Explorer
    "ScanRecord",
    "PositiveScanRecord",
    "PeriodReport",
    "TableFormat",
    "scan",
    "iter_scan",
    "scan_parallel",
    "detect_period",
    "difference_probe",
    "emit_table",

    "__version__",
]
