#!/usr/bin/env python3
"""
Tests for the fibgamma command line: output, formats and exit codes.
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import csv
import io
import json

import pytest

from fibgamma import __version__, cli, verify
from fibgamma.cli import (
    EXIT_CONTRADICTION,
    EXIT_DOMAIN,
    EXIT_OK,
    CliConfig,
    Command,
    CommandExecutor,
    main,
    parse_command,
)
from fibgamma.errors import ContradictionError
from fibgamma.explorer import TableFormat
from fibgamma.verify import SuiteReport


def run(capsys, *argv):
    """Run the CLI and return (exit code, stdout, stderr)."""
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestSingleValues:
    """Subcommands that print one result."""

    def test_fib(self, capsys):
        assert run(capsys, 'fib', '0') == (EXIT_OK, '0\n', '')
        assert run(capsys, 'fib', '100')[1] == '354224848179261915075\n'
        assert run(capsys, 'fib', '10', '--pow', '2')[1] == '3025\n'

    def test_fib_large_index(self, capsys):
        code, out, _ = run(capsys, 'fib', '20000')
        assert code == EXIT_OK
        assert len(out.strip()) == 4180

    def test_gamma(self, capsys):
        assert run(capsys, 'gamma', '169', '441')[1] == '2\n'

    def test_solve(self, capsys):
        assert run(capsys, 'solve', '27', '125')[1] == 'gamma=2 x=18 y=9\n'
        assert run(capsys, 'solve', '9', '25', '--shifted')[1] == 'gamma=2 x=6 y=3\n'

    def test_positive(self, capsys):
        assert run(capsys, 'positive', '3', '4')[1] == 'equation=minus x=1 y=1\n'

    def test_brute(self, capsys):
        assert run(capsys, 'brute', '2', '3', '12')[1] == 'x=0 y=4\nx=3 y=2\nx=6 y=0\n'
        assert run(capsys, 'brute', '9', '25', '96')[1] == 'no solutions\n'

    def test_closed_form(self, capsys):
        code, out, _ = run(capsys, 'closed-form', '--family', 'cubed', '8', '--check')
        assert (code, out) == (EXIT_OK, 'gamma=2 x=7469 y=2870\n')

    def test_version(self, capsys):
        with pytest.raises(SystemExit) as exc:
            main(['--version'])
        assert exc.value.code == 0
        assert __version__ in capsys.readouterr().out


class TestTables:
    """table and scan output."""

    def test_table_csv(self, capsys):
        code, out, _ = run(capsys, 'table', '--family', 'squared', '--format', 'csv')
        lines = out.splitlines()
        assert code == EXIT_OK
        assert lines[0] == 'n,a,b,x,y,gamma'
        assert lines[1] == '2,1,4,0,0,1'
        assert len(lines) == 13

    def test_table_json(self, capsys):
        out = run(capsys, 'table', '--family', 'cubed', '--format', 'json')[1]
        rows = json.loads(out)
        assert rows[-1] == {'n': 8, 'a': 9261, 'b': 39304, 'x': 7469, 'y': 2870, 'gamma': 2}

    def test_table_text(self, capsys):
        out = run(capsys, 'table', '--family', 'quartic')[1]
        assert out.splitlines()[-1].split() == \
            ['11', '62742241', '429981696', '19385711', '28542388', '2']

    def test_table_by_exponents(self, capsys):
        out = run(capsys, 'table', '--i', '5', '--j', '3', '--format', 'csv')[1]
        assert [line.split(',')[0] for line in out.splitlines()[1:]] == \
            [str(n) for n in range(2, 14)]

    def test_csv_round_trip(self, capsys):
        out = run(capsys, 'table', '--i', '4', '--j', '4', '--from', '2', '--to', '40',
                  '--format', 'csv')[1]
        rows = list(csv.DictReader(io.StringIO(out)))
        assert len(rows) == 39
        for row in rows:
            a, b, x, y, g = (int(row[k]) for k in ('a', 'b', 'x', 'y', 'gamma'))
            assert 2 * (a * x + b * y + g - 1) == (a - 1) * (b - 1)

    def test_deterministic(self, capsys):
        argv = ('table', '--family', 'mixed', '--format', 'json')
        assert run(capsys, *argv) == run(capsys, *argv)

    def test_scan_differences(self, capsys):
        out = run(capsys, 'scan', '--i', '4', '--j', '4', '--from', '2', '--to', '11',
                  '--differences')[1]
        assert 'y_4 - x_3 = 1' in out
        assert 'y_5 - x_4 = -1' in out

    def test_scan_period_on_stdout(self, capsys):
        out = run(capsys, 'scan', '--i', '2', '--j', '2', '--from', '2', '--to', '37',
                  '--detect-period')[1]
        assert out.splitlines()[-1] == \
            'period: found offset=2 period=3 pattern=[1,1,2] verified_upto=37'

    def test_scan_reports_go_to_stderr_with_csv(self, capsys):
        code, out, err = run(capsys, 'scan', '--i', '4', '--j', '4', '--from', '2',
                             '--to', '11', '--format', 'csv', '--detect-period',
                             '--monotonicity')
        assert code == EXIT_OK
        assert out.splitlines()[0] == 'n,a,b,x,y,gamma'
        assert 'period: found offset=3 period=3 pattern=[2,1,2] verified_upto=11' in err
        assert 'x decreases at n=5,8,11' in err

    def test_short_detect_period_writes_nothing(self, capsys):
        code, out, err = run(capsys, 'scan', '--i', '2', '--j', '2', '--from', '2',
                             '--to', '6', '--detect-period')
        assert code == EXIT_DOMAIN
        assert out == ''
        assert 'at least 9 rows, got 5' in err

    def test_scan_positive(self, capsys):
        code, out, _ = run(capsys, 'scan', '--i', '2', '--j', '2', '--from', '2',
                           '--to', '10', '--positive', '--format', 'csv')
        assert code == EXIT_OK
        assert out.splitlines()[0] == 'n,a,b,x,y,equation'
        assert len(out.splitlines()) == 7

    def test_scan_compare(self, capsys):
        out = run(capsys, 'scan', '--i', '2', '--j', '3', '--from', '2', '--to', '10',
                  '--compare', '2', '2')[1]
        assert 'conjecture: gamma columns agree on all 9 rows' in out

    def test_scan_workers(self, capsys):
        base = ('scan', '--i', '3', '--j', '4', '--from', '2', '--to', '30', '--format', 'csv')
        assert run(capsys, *base)[1] == run(capsys, *base, '--workers', '2')[1]


class TestVerify:
    """verify output and its exit code."""

    def test_passing_suites(self, capsys):
        code, out, _ = run(capsys, 'verify', '--suite', 'cassini', '--suite', 'sums',
                           '--max', '50')
        assert code == EXIT_OK
        assert out.splitlines() == ['cassini: 50/50 passed', 'sums: 100/100 passed']

    @pytest.mark.parametrize("alias, name", [
        ('thm12', 'squared'),
        ('thm15', 'cubed'),
        ('thm42', 'positive'),
    ])
    def test_theorem_aliases(self, capsys, alias, name):
        code, out, _ = run(capsys, 'verify', '--suite', alias, '--max', '10')
        assert code == EXIT_OK
        assert out.startswith(f'{name}: ')
        assert out == run(capsys, 'verify', '--suite', name, '--max', '10')[1]

    def test_tables_note_printed_erratum(self, capsys):
        code, out, _ = run(capsys, 'verify', '--suite', 'tables')
        assert code == EXIT_OK
        assert out.startswith('tables: 38/38 passed; note: (4, 4) row n=11')

    def test_failing_suite_exits_2(self, capsys, monkeypatch):
        monkeypatch.setitem(verify.SUITES, 'cassini',
                            (lambda n: SuiteReport('cassini', 3, 2, 'n=2'), 3))
        code, out, err = run(capsys, 'verify', '--suite', 'cassini')
        assert code == EXIT_CONTRADICTION
        assert 'first counterexample: n=2' in out
        assert 'failed suites: cassini' in err


class TestExitCodes:
    """Errors map to exit codes 1 and 2."""

    def test_non_coprime_is_domain_error(self, capsys):
        code, out, err = run(capsys, 'gamma', '4', '6')
        assert code == EXIT_DOMAIN
        assert out == ''
        assert 'fibgamma:' in err

    def test_positive_rejects_even_a(self, capsys):
        assert run(capsys, 'positive', '4', '9')[0] == EXIT_DOMAIN

    def test_closed_form_below_domain(self, capsys):
        assert run(capsys, 'closed-form', '--family', 'linear', '2')[0] == EXIT_DOMAIN

    def test_table_needs_family_or_exponents(self, capsys):
        assert run(capsys, 'table')[0] == EXIT_DOMAIN

    @pytest.mark.parametrize("argv", [
        ['frobnicate'],
        ['fib', '-3'],
        ['fib', '1e3'],
        ['gamma', '0', '5'],
        [],
    ])
    def test_usage_errors_exit_1(self, capsys, argv):
        with pytest.raises(SystemExit) as exc:
            main(argv)
        assert exc.value.code == EXIT_DOMAIN

    def test_contradiction_exits_2(self, capsys, monkeypatch):
        def broken(pair):
            raise ContradictionError("both targets solvable")
        monkeypatch.setattr(cli, 'gamma', broken)
        code, out, err = run(capsys, 'gamma', '2', '3')
        assert code == EXIT_CONTRADICTION
        assert 'contradiction' in err


class TestParsing:
    """parse_command and CommandExecutor without the console."""

    def test_parse(self):
        command, config = parse_command(['-vv', 'scan', '--i', '2', '--j', '3', '--from', '2',
                                         '--to', '9', '--format', 'json', '--workers', '3'])
        assert command.name == 'scan'
        assert command.args['n_from'] == 2 and command.args['n_to'] == 9
        assert (config.fmt, config.verbosity, config.workers) == (TableFormat.JSON, 2, 3)

    def test_executor_streams_to_out(self):
        out = io.StringIO()
        executor = CommandExecutor(CliConfig(fmt=TableFormat.CSV), out)
        result = executor.execute(Command('table', {'family': 'cubed'}))
        assert result.exit_code == EXIT_OK
        assert out.getvalue().splitlines()[2] == '3,8,27,8,1,1'

    def test_unknown_command(self):
        result = CommandExecutor().execute(Command('nope'))
        assert result.exit_code == EXIT_DOMAIN
