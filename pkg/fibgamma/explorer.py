#!/usr/bin/env python3
"""
Scanning Gamma(F_n^i, F_{n+1}^j) over ranges of n.

This module regenerates the published tables, scans arbitrary exponent
pairs, looks for eventual periodicity in the Gamma column and probes the
cross-differences y_{n+1} - x_n. It only gathers evidence; it proves nothing.

Design Principles:
- Streaming: records are produced by generators and written as they arrive
- One seed per scan: consecutive terms advance by the recurrence
- Self-checking: every record is re-substituted before it is written
- Honest reports: no period is claimed without three full repetitions
"""

import csv
import io
import json
import logging
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from typing import IO, Dict, Iterable, Iterator, List, Optional, Sequence as Seq, Tuple

from rich import box
from rich.console import Console
from rich.table import Table

from .errors import ContradictionError, DomainError
from .fibonacci import fib_pairs
from .solver import CoprimePair, Equation, solve_pair, solve_positive_pair

logger = logging.getLogger(__name__)

MIN_PERIOD_REPETITIONS = 3
MIN_PERIOD_SEQUENCE = 9


class Sequence(Enum):
    """Base sequence u_n whose consecutive powers are scanned."""
    FIBONACCI = 'fibonacci'
    NATURAL = 'natural'

    def __str__(self) -> str:
        return self.value

    def pairs(self, n_from: int, n_to: int) -> Iterator[Tuple[int, int, int]]:
        """Yield (n, u_n, u_{n+1}) for n_from <= n <= n_to."""
        if self is Sequence.FIBONACCI:
            yield from fib_pairs(n_from, n_to)
        else:
            for n in range(n_from, n_to + 1):
                yield n, n, n + 1


class TableFormat(Enum):
    """Output formats for tables."""
    TEXT = 'text'
    CSV = 'csv'
    JSON = 'json'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class ScanRecord:
    """One row of a Gamma(u_n^i, u_{n+1}^j) table."""
    n: int
    i: int
    j: int
    a: int
    b: int
    x: int
    y: int
    gamma: int

    columns = ('n', 'a', 'b', 'x', 'y', 'gamma')

    @property
    def target(self) -> int:
        return (self.a - 1) * (self.b - 1) // 2

    def check(self) -> 'ScanRecord':
        """Re-substitute into a x + b y + (gamma - 1) = (a-1)(b-1)/2."""
        if self.x < 0 or self.y < 0 or self.gamma not in (1, 2):
            raise ContradictionError(f"malformed record at n={self.n}: {self}")
        if self.a * self.x + self.b * self.y + self.gamma - 1 != self.target:
            raise ContradictionError(f"record at n={self.n} does not solve its pair")
        return self

    def as_row(self) -> Dict[str, object]:
        return {'n': self.n, 'a': self.a, 'b': self.b,
                'x': self.x, 'y': self.y, 'gamma': self.gamma}


@dataclass(frozen=True)
class PositiveScanRecord:
    """One row of a positive-pair table over (u_n^i, u_{n+1}^j)."""
    n: int
    i: int
    j: int
    a: int
    b: int
    equation: Equation
    x: int
    y: int

    columns = ('n', 'a', 'b', 'x', 'y', 'equation')

    def check(self) -> 'PositiveScanRecord':
        k = (self.a + 1) * self.b // 2
        if self.x < 1 or self.y < 1 or self.a * self.x + self.b * self.y != k + self.equation.offset:
            raise ContradictionError(f"positive record at n={self.n} does not solve its pair")
        return self

    def as_row(self) -> Dict[str, object]:
        return {'n': self.n, 'a': self.a, 'b': self.b,
                'x': self.x, 'y': self.y, 'equation': str(self.equation)}


class PeriodStatus(Enum):
    FOUND = 'found'
    NONE_FOUND = 'none-found'

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class PeriodReport:
    """Outcome of a period search over a Gamma sequence indexed from `start`."""
    status: PeriodStatus
    offset: Optional[int]
    period: Optional[int]
    pattern: Tuple[int, ...]
    verified_upto: int

    @property
    def found(self) -> bool:
        return self.status is PeriodStatus.FOUND

    def __str__(self) -> str:
        if not self.found:
            return f"period: none-found (checked up to n={self.verified_upto})"
        pattern = ','.join(str(g) for g in self.pattern)
        return (f"period: found offset={self.offset} period={self.period} "
                f"pattern=[{pattern}] verified_upto={self.verified_upto}")


@dataclass(frozen=True)
class ConjectureReport:
    """Comparison of two Gamma columns at equal n. An observation, not a proof."""
    checked: int
    disagreements: Tuple[int, ...]

    @property
    def holds(self) -> bool:
        return not self.disagreements

    def __str__(self) -> str:
        if self.holds:
            return f"conjecture: gamma columns agree on all {self.checked} rows"
        listed = ','.join(str(n) for n in self.disagreements)
        return (f"conjecture: gamma columns disagree on {len(self.disagreements)} "
                f"of {self.checked} rows (n={listed})")


@dataclass(frozen=True)
class MonotonicityReport:
    """Indices n where x_n < x_{n-1} or y_n < y_{n-1}."""
    x_decreases: Tuple[int, ...]
    y_decreases: Tuple[int, ...]

    @property
    def monotone(self) -> bool:
        return not self.x_decreases and not self.y_decreases


def _check_exponent(name: str, value: int) -> None:
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise DomainError(f"exponent {name} must be a positive integer, got {value!r}")


def _check_range(n_from: int, n_to: int) -> None:
    if n_from < 2:
        raise DomainError(f"scan must start at n >= 2, got {n_from}")
    if n_to < n_from:
        raise DomainError(f"empty scan range [{n_from}, {n_to}]")


def iter_scan(i: int, j: int, n_from: int, n_to: int,
              sequence: Sequence = Sequence.FIBONACCI,
              progress_every: int = 50) -> Iterator[ScanRecord]:
    """Yield one ScanRecord per n in [n_from, n_to], in order of n."""
    _check_exponent('i', i)
    _check_exponent('j', j)
    _check_range(n_from, n_to)
    count = 0
    for n, u, v in Sequence(sequence).pairs(n_from, n_to):
        a, b = u ** i, v ** j
        solution = solve_pair(CoprimePair(a, b))
        count += 1
        if progress_every and count % progress_every == 0:
            logger.info("scan i=%d j=%d: %d rows (n=%d)", i, j, count, n)
        yield ScanRecord(n, i, j, a, b, solution.x, solution.y, solution.gamma)


def scan(i: int, j: int, n_from: int, n_to: int,
         sequence: Sequence = Sequence.FIBONACCI) -> List[ScanRecord]:
    """Materialised iter_scan."""
    return list(iter_scan(i, j, n_from, n_to, sequence))


def _scan_chunk(job: Tuple[int, int, int, int, str]) -> List[ScanRecord]:
    i, j, n_from, n_to, sequence = job
    return list(iter_scan(i, j, n_from, n_to, Sequence(sequence), progress_every=0))


def scan_parallel(i: int, j: int, n_from: int, n_to: int, workers: int = 2,
                  sequence: Sequence = Sequence.FIBONACCI) -> List[ScanRecord]:
    """
    Same rows as scan(), computed over disjoint chunks in a process pool.

    Each chunk seeds its own window, so chunks are independent; results are
    merged by n.
    """
    _check_exponent('i', i)
    _check_exponent('j', j)
    _check_range(n_from, n_to)
    if workers <= 1:
        return scan(i, j, n_from, n_to, sequence)

    total = n_to - n_from + 1
    chunk = max(1, -(-total // (workers * 4)))
    jobs = [(i, j, start, min(start + chunk - 1, n_to), Sequence(sequence).value)
            for start in range(n_from, n_to + 1, chunk)]
    logger.info("parallel scan: %d chunks on %d workers", len(jobs), workers)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(_scan_chunk, jobs))
    return sorted((r for part in parts for r in part), key=lambda r: r.n)


def iter_positive_scan(i: int, j: int, n_from: int, n_to: int,
                       sequence: Sequence = Sequence.FIBONACCI) -> Iterator[PositiveScanRecord]:
    """
    Positive-pair rows over (u_n^i, u_{n+1}^j).

    Rows where u_n^i is even or u_{n+1}^j < 2 are outside the positive pair's
    hypotheses and are skipped (logged at DEBUG).
    """
    _check_exponent('i', i)
    _check_exponent('j', j)
    _check_range(n_from, n_to)
    for n, u, v in Sequence(sequence).pairs(n_from, n_to):
        a, b = u ** i, v ** j
        if a % 2 == 0 or b < 2:
            logger.debug("positive scan: skipping n=%d (a=%d, b=%d)", n, a, b)
            continue
        solution = solve_positive_pair(a, b)
        yield PositiveScanRecord(n, i, j, a, b, solution.equation, solution.x, solution.y)


def detect_period(gammas: Seq[int], start: int = 0,
                  offset_hint: Optional[int] = None) -> PeriodReport:
    """
    Smallest (offset, period), ordered lexicographically, such that the tail
    from offset repeats with that period at least three full times.

    `start` is the n of gammas[0]; offsets in the report are values of n.
    `offset_hint`, when given, is the earliest n the search may report.
    """
    seq = list(gammas)
    length = len(seq)
    if length < MIN_PERIOD_SEQUENCE:
        raise DomainError(
            f"period detection needs at least {MIN_PERIOD_SEQUENCE} values, got {length}"
        )
    earliest = 0 if offset_hint is None else max(0, offset_hint - start)
    verified_upto = start + length - 1

    best: Optional[Tuple[int, int]] = None
    for period in range(1, length // MIN_PERIOD_REPETITIONS + 1):
        # earliest index from which seq[k] == seq[k + period] holds to the end
        offset = 0
        for k in range(length - period - 1, -1, -1):
            if seq[k] != seq[k + period]:
                offset = k + 1
                break
        offset = max(offset, earliest)
        if length - offset < MIN_PERIOD_REPETITIONS * period:
            continue
        if best is None or (offset, period) < best:
            best = (offset, period)

    if best is None:
        return PeriodReport(PeriodStatus.NONE_FOUND, None, None, (), verified_upto)
    offset, period = best
    return PeriodReport(PeriodStatus.FOUND, start + offset, period,
                        tuple(seq[offset:offset + period]), verified_upto)


def _check_contiguous(records: Seq[ScanRecord]) -> None:
    for prev, cur in zip(records, records[1:]):
        if cur.n != prev.n + 1:
            raise DomainError(f"records are not contiguous: n={prev.n} then n={cur.n}")
        if (cur.i, cur.j) != (prev.i, prev.j):
            raise DomainError(
                f"records mix exponents ({prev.i}, {prev.j}) and ({cur.i}, {cur.j})"
            )


def difference_probe(records: Seq[ScanRecord]) -> List[Tuple[int, int]]:
    """Return (n, y_{n+1} - x_n) for each consecutive pair of records."""
    records = list(records)
    _check_contiguous(records)
    return [(prev.n, cur.y - prev.x) for prev, cur in zip(records, records[1:])]


def compare_gammas(left: Seq[ScanRecord], right: Seq[ScanRecord]) -> ConjectureReport:
    """Compare the Gamma columns of two scans at every n present in both."""
    right_by_n = {r.n: r.gamma for r in right}
    shared = [r for r in left if r.n in right_by_n]
    disagreements = tuple(r.n for r in shared if r.gamma != right_by_n[r.n])
    return ConjectureReport(len(shared), disagreements)


def monotonicity_probe(records: Seq[ScanRecord]) -> MonotonicityReport:
    """Report where x_n or y_n fall below their predecessor."""
    records = list(records)
    _check_contiguous(records)
    pairs = list(zip(records, records[1:]))
    return MonotonicityReport(
        tuple(cur.n for prev, cur in pairs if cur.x < prev.x),
        tuple(cur.n for prev, cur in pairs if cur.y < prev.y),
    )


def write_table(records: Iterable, fmt: TableFormat, stream: IO[str],
                columns: Tuple[str, ...] = ScanRecord.columns) -> int:
    """
    Write records to a text stream as CSV or JSON; return the row count.

    CSV has a header row and '\\n'-terminated rows. JSON is an array of
    objects, one per line. Each record is self-checked before it is written.
    """
    fmt = TableFormat(fmt)
    if fmt is TableFormat.TEXT:
        rows = list(records)
        stream.write(render_text_table(rows, columns))
        return len(rows)

    count = 0
    if fmt is TableFormat.CSV:
        writer = csv.writer(stream, lineterminator='\n')
        writer.writerow(columns)
        for record in records:
            record.check()
            writer.writerow([record.as_row()[c] for c in columns])
            count += 1
        return count

    stream.write('[')
    for record in records:
        record.check()
        row = record.as_row()
        stream.write(',' if count else '')
        stream.write('\n  ' + json.dumps({c: row[c] for c in columns}))
        count += 1
    stream.write('\n]\n' if count else ']\n')
    return count


def emit_table(records: Iterable, fmt: TableFormat = TableFormat.CSV) -> bytes:
    """Render records as CSV or JSON bytes."""
    records = list(records)
    columns = records[0].columns if records else ScanRecord.columns
    buffer = io.StringIO()
    write_table(records, fmt, buffer, columns)
    return buffer.getvalue().encode('utf-8')


def render_text_table(records: Seq, columns: Tuple[str, ...] = ScanRecord.columns) -> str:
    """Aligned plain-text table, right-justified numbers, no colour."""
    table = Table(box=box.SIMPLE_HEAD, show_edge=False, pad_edge=False)
    for column in columns:
        table.add_column(column, justify='right', no_wrap=True)
    for record in records:
        record.check()
        row = record.as_row()
        table.add_row(*(str(row[c]) for c in columns))

    buffer = io.StringIO()
    console = Console(file=buffer, width=100_000, color_system=None,
                      force_terminal=False, highlight=False, emoji=False)
    console.print(table)
    lines = [line.rstrip() for line in buffer.getvalue().splitlines()]
    return '\n'.join(line for line in lines if line) + '\n'
