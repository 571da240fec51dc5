#!/usr/bin/env python3
"""
Command-line front end for fibgamma.

Every subcommand maps to one `_cmd_*` method on CommandExecutor, which calls
into the library and returns a CommandResult. Tables are streamed straight to
the output stream; single values come back as text.

Exit codes:
    0  success
    1  domain error or bad usage
    2  contradiction (a theorem-violation guard fired or a suite failed)
"""

import argparse
import logging
import re
import sys
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, TextIO

from rich.console import Console
from rich.logging import RichHandler

from . import __version__
from .closed_forms import Family, closed_solution, matches_solver
from .errors import ContradictionError, DomainError, FibGammaError
from .explorer import (
    MIN_PERIOD_SEQUENCE,
    PositiveScanRecord,
    ScanRecord,
    Sequence as BaseSequence,
    TableFormat,
    compare_gammas,
    detect_period,
    difference_probe,
    iter_positive_scan,
    iter_scan,
    monotonicity_probe,
    scan_parallel,
    write_table,
)
from .fibonacci import fib, fib_pow
from .known_tables import KNOWN_TABLES
from .solver import (
    CoprimePair,
    brute_force_oracle,
    gamma,
    solve_pair,
    solve_positive_pair,
    solve_shifted_pair,
)
from .verify import SUITE_ALIASES, SUITES, run_suites

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_CONTRADICTION = 2

TABLE_FAMILIES = {
    'linear': (1, 1),
    'squared': (2, 2),
    'cubed': (3, 3),
    'quartic': (4, 4),
    'mixed': (2, 3),
}

_DECIMAL = re.compile(r'^[0-9]+$')


@dataclass
class CliConfig:
    """Settings for one invocation, built from the parsed flags."""
    fmt: TableFormat = TableFormat.TEXT
    verbosity: int = 0
    workers: int = 1
    progress_every: int = 50


@dataclass
class Command:
    """A parsed subcommand and its arguments."""
    name: str
    args: Dict[str, Any] = field(default_factory=dict)

    def __str__(self) -> str:
        parts = [self.name]
        parts.extend(f"--{k}={v}" for k, v in sorted(self.args.items()) if v is not None)
        return ' '.join(parts)


@dataclass
class CommandResult:
    """Outcome of a command: text for stdout, error text for stderr, exit code."""
    data: Any = None
    text: Optional[str] = None
    exit_code: int = EXIT_OK
    error: Optional[str] = None


def decimal(value: str) -> int:
    """argparse type: exact nonnegative decimal integer of any size."""
    if not _DECIMAL.match(value):
        raise argparse.ArgumentTypeError(f"not a nonnegative decimal integer: {value!r}")
    return int(value)


def positive_decimal(value: str) -> int:
    number = decimal(value)
    if number < 1:
        raise argparse.ArgumentTypeError(f"must be positive: {value!r}")
    return number


class CommandExecutor:
    """Runs Commands against the library, writing streamed output to `out`."""

    def __init__(self, config: Optional[CliConfig] = None, out: Optional[TextIO] = None):
        self.config = config or CliConfig()
        self.out = out if out is not None else sys.stdout

    def execute(self, command: Command) -> CommandResult:
        method = getattr(self, '_cmd_' + command.name.replace('-', '_'), None)
        if method is None:
            return CommandResult(error=f"fibgamma: unknown command {command.name!r}",
                                 exit_code=EXIT_DOMAIN)
        logger.debug("executing %s", command)
        try:
            return method(**command.args)
        except ContradictionError as exc:
            return CommandResult(error=f"fibgamma: contradiction: {exc}",
                                 exit_code=EXIT_CONTRADICTION)
        except FibGammaError as exc:
            return CommandResult(error=f"fibgamma: {exc}", exit_code=EXIT_DOMAIN)

    def _cmd_fib(self, n: int, pow: Optional[int] = None) -> CommandResult:
        value = fib(n) if pow is None else fib_pow(n, pow)
        return CommandResult(value, str(value))

    def _cmd_gamma(self, a: int, b: int) -> CommandResult:
        value = gamma(CoprimePair(a, b))
        return CommandResult(value, str(value))

    def _cmd_solve(self, a: int, b: int, shifted: bool = False) -> CommandResult:
        pair = CoprimePair(a, b)
        solution = solve_shifted_pair(pair) if shifted else solve_pair(pair)
        return CommandResult(solution, str(solution))

    def _cmd_positive(self, a: int, b: int) -> CommandResult:
        solution = solve_positive_pair(a, b)
        return CommandResult(solution, str(solution))

    def _cmd_brute(self, a: int, b: int, t: int, positive: bool = False) -> CommandResult:
        solutions = brute_force_oracle(a, b, t, positive=positive)
        text = '\n'.join(f"x={x} y={y}" for x, y in solutions) or 'no solutions'
        return CommandResult(solutions, text)

    def _cmd_closed_form(self, family: str, n: int, check: bool = False) -> CommandResult:
        result = closed_solution(Family(family), n).check()
        if check and not matches_solver(result):
            raise ContradictionError(f"{family} closed form at n={n} disagrees with the solver")
        return CommandResult(result, str(result))

    def _cmd_table(self, family: Optional[str] = None, i: Optional[int] = None,
                   j: Optional[int] = None, n_from: Optional[int] = None,
                   n_to: Optional[int] = None) -> CommandResult:
        if family is not None:
            if i is not None or j is not None:
                raise DomainError("use either --family or --i/--j, not both")
            i, j = TABLE_FAMILIES[family]
        elif i is None or j is None:
            raise DomainError("table needs --family or both --i and --j")
        known = KNOWN_TABLES.get((i, j))
        if n_from is None:
            n_from = known[0][0] if known else 2
        if n_to is None:
            n_to = known[-1][0] if known else n_from + 11
        records = iter_scan(i, j, n_from, n_to, progress_every=self.config.progress_every)
        write_table(records, self.config.fmt, self.out)
        return CommandResult()

    def _cmd_scan(self, i: int, j: int, n_from: int, n_to: int,
                  detect: bool = False, differences: bool = False,
                  monotonicity: bool = False, compare: Optional[List[int]] = None,
                  positive: bool = False, sequence: str = 'fibonacci') -> CommandResult:
        base = BaseSequence(sequence)
        if positive:
            rows = list(iter_positive_scan(i, j, n_from, n_to, base))
            write_table(rows, self.config.fmt, self.out, PositiveScanRecord.columns)
            skipped = (n_to - n_from + 1) - len(rows)
            return self._reports([f"skipped: {skipped} rows outside the positive-pair hypotheses"])

        rows_wanted = n_to - n_from + 1
        if detect and 0 < rows_wanted < MIN_PERIOD_SEQUENCE:
            raise DomainError(f"--detect-period needs at least {MIN_PERIOD_SEQUENCE} rows, "
                              f"got {rows_wanted}")
        probing = detect or differences or monotonicity or compare
        if self.config.workers > 1:
            records = scan_parallel(i, j, n_from, n_to, self.config.workers, base)
        elif probing:
            records = list(iter_scan(i, j, n_from, n_to, base, self.config.progress_every))
        else:
            records = iter_scan(i, j, n_from, n_to, base, self.config.progress_every)
        write_table(records, self.config.fmt, self.out, ScanRecord.columns)
        if not probing:
            return CommandResult()

        lines = []
        if detect:
            lines.append(str(detect_period([r.gamma for r in records], start=n_from)))
        if differences:
            lines.extend(f"y_{n + 1} - x_{n} = {d}" for n, d in difference_probe(records))
        if monotonicity:
            report = monotonicity_probe(records)
            lines.append("x decreases at n=" + (','.join(map(str, report.x_decreases)) or 'none'))
            lines.append("y decreases at n=" + (','.join(map(str, report.y_decreases)) or 'none'))
        if compare:
            other = list(iter_scan(compare[0], compare[1], n_from, n_to, base, 0))
            lines.append(str(compare_gammas(records, other)))
        return self._reports(lines)

    def _reports(self, lines: List[str]) -> CommandResult:
        """Reports follow a text table on stdout; with CSV/JSON they go to stderr."""
        text = '\n'.join(lines)
        if self.config.fmt is TableFormat.TEXT:
            return CommandResult(lines, text)
        return CommandResult(lines, error=text)

    def _cmd_verify(self, suites: Optional[List[str]] = None,
                    max_n: Optional[int] = None) -> CommandResult:
        reports = run_suites(suites or ['all'], max_n)
        text = '\n'.join(str(r) for r in reports)
        failed = [r.name for r in reports if not r.ok]
        if failed:
            return CommandResult(reports, text, EXIT_CONTRADICTION,
                                 error=f"fibgamma: failed suites: {', '.join(failed)}")
        return CommandResult(reports, text)


class _Parser(argparse.ArgumentParser):
    """ArgumentParser that reports usage errors with exit code 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_DOMAIN, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog='fibgamma',
        description='Exact solver and explorer for Gamma(a, b) over Fibonacci powers',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog='''
Examples:
  fibgamma fib 100                          F_100
  fibgamma solve 27 125                     gamma=2 x=18 y=9
  fibgamma positive 3 4                     equation=minus x=1 y=1
  fibgamma closed-form --family cubed 8     gamma=2 x=7469 y=2870
  fibgamma table --family squared --from 2 --to 13 --format csv
  fibgamma scan --i 4 --j 4 --from 2 --to 40 --detect-period --differences
  fibgamma verify --suite squared --max 500
''')
    parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
    parser.add_argument('-v', '--verbose', action='count', default=0,
                        help='log progress to stderr (-vv for debug)')
    sub = parser.add_subparsers(dest='command', metavar='COMMAND', required=True)

    p = sub.add_parser('fib', help='Fibonacci number F_N (or F_N^K)')
    p.add_argument('n', type=decimal, metavar='N')
    p.add_argument('--pow', type=positive_decimal, metavar='K')

    p = sub.add_parser('gamma', help='Gamma(A, B) for coprime A, B')
    p.add_argument('a', type=positive_decimal, metavar='A')
    p.add_argument('b', type=positive_decimal, metavar='B')

    p = sub.add_parser('solve', help='unique solution of the pair for (A, B)')
    p.add_argument('a', type=positive_decimal, metavar='A')
    p.add_argument('b', type=positive_decimal, metavar='B')
    p.add_argument('--shifted', action='store_true',
                   help='targets raised by A + B, solved in positive integers')

    p = sub.add_parser('positive', help='positive pair A x + B y = (A+1)B/2 +- 1')
    p.add_argument('a', type=positive_decimal, metavar='A')
    p.add_argument('b', type=positive_decimal, metavar='B')

    p = sub.add_parser('brute', help='enumerate all solutions of A x + B y = T')
    p.add_argument('a', type=positive_decimal, metavar='A')
    p.add_argument('b', type=positive_decimal, metavar='B')
    p.add_argument('t', type=decimal, metavar='T')
    p.add_argument('--positive', action='store_true', help='require x, y >= 1')

    p = sub.add_parser('closed-form', help='closed-form solution for a Fibonacci family')
    p.add_argument('--family', required=True, choices=[f.value for f in Family])
    p.add_argument('n', type=decimal, metavar='N')
    p.add_argument('--check', action='store_true', help='cross-check against the solver')

    formats = [f.value for f in TableFormat]

    p = sub.add_parser('table', help='Gamma table for a family or exponent pair')
    p.add_argument('--family', choices=sorted(TABLE_FAMILIES))
    p.add_argument('--i', type=positive_decimal, dest='i')
    p.add_argument('--j', type=positive_decimal, dest='j')
    p.add_argument('--from', type=decimal, dest='n_from', metavar='N')
    p.add_argument('--to', type=decimal, dest='n_to', metavar='M')
    p.add_argument('--format', choices=formats, default='text')

    p = sub.add_parser('scan', help='scan Gamma(F_n^I, F_{n+1}^J) and probe patterns')
    p.add_argument('--i', type=positive_decimal, dest='i', required=True)
    p.add_argument('--j', type=positive_decimal, dest='j', required=True)
    p.add_argument('--from', type=decimal, dest='n_from', metavar='N', required=True)
    p.add_argument('--to', type=decimal, dest='n_to', metavar='M', required=True)
    p.add_argument('--format', choices=formats, default='text')
    p.add_argument('--detect-period', action='store_true', dest='detect')
    p.add_argument('--differences', action='store_true', help='y_{n+1} - x_n')
    p.add_argument('--monotonicity', action='store_true', help='where x_n or y_n decrease')
    p.add_argument('--compare', type=positive_decimal, nargs=2, metavar=('I2', 'J2'),
                   help='compare the Gamma column with another exponent pair')
    p.add_argument('--positive', action='store_true',
                   help='scan the positive pair instead (rows with even a are skipped)')
    p.add_argument('--sequence', choices=[s.value for s in BaseSequence], default='fibonacci')
    p.add_argument('--workers', type=positive_decimal, default=1)

    p = sub.add_parser('verify', help='run verification suites')
    p.add_argument('--suite', action='append', dest='suites',
                   choices=['all'] + list(SUITES) + list(SUITE_ALIASES), metavar='SUITE',
                   help=f"one of: all, {', '.join(SUITES)} (repeatable; default all); "
                        + 'aliases: ' + ', '.join(f"{k}={v}" for k, v in SUITE_ALIASES.items()))
    p.add_argument('--max', type=decimal, dest='max_n', metavar='N',
                   help="upper bound; each suite has its own default")
    return parser


GLOBAL_OPTIONS = ('command', 'verbose', 'format', 'workers')


def parse_command(argv: Optional[Sequence[str]] = None):
    """Parse argv into (Command, CliConfig)."""
    namespace = build_parser().parse_args(argv)
    config = CliConfig(
        fmt=TableFormat(getattr(namespace, 'format', 'text')),
        verbosity=namespace.verbose,
        workers=getattr(namespace, 'workers', 1),
    )
    args = {k: v for k, v in vars(namespace).items() if k not in GLOBAL_OPTIONS}
    return Command(namespace.command, args), config


def configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity <= 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    handler = RichHandler(console=Console(stderr=True), show_time=False,
                          show_path=False, markup=False)
    logging.basicConfig(level=level, format='%(message)s', handlers=[handler], force=True)


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the exit code."""
    if hasattr(sys, 'set_int_max_str_digits'):
        sys.set_int_max_str_digits(0)
    command, config = parse_command(argv)
    configure_logging(config.verbosity)

    result = CommandExecutor(config).execute(command)
    if result.text:
        print(result.text)
    if result.error:
        print(result.error, file=sys.stderr)
    return result.exit_code


if __name__ == '__main__':
    sys.exit(main())
