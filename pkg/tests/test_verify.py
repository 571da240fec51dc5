#!/usr/bin/env python3
"""
Tests for the verification suites.
"""

import sys
import os
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

import pytest

from fibgamma.errors import DomainError
from fibgamma.verify import SUITE_ALIASES, SUITES, SuiteReport, run_suite, run_suites


class TestSuites:
    """Each suite passes at modest bounds."""

    @pytest.mark.parametrize("name, bound", [
        ('cassini', 200),
        ('parity', 300),
        ('triple', 200),
        ('sums', 200),
        ('recurrence', 100),
        ('dichotomy', 25),
        ('shift', 25),
        ('squared', 60),
        ('cubed', 40),
        ('positive', 25),
        ('linear', 60),
        ('observations', 60),
        ('tables', 0),
        ('periodicity', 40),
    ])
    def test_suite_passes(self, name, bound):
        report = run_suite(name, bound)
        assert report.name == name
        assert report.checked > 0
        assert report.ok, str(report)
        assert report.counterexample is None

    def test_default_bounds_are_registered(self):
        assert all(default >= 0 for _, default in SUITES.values())

    def test_tables_cover_every_reference_row(self):
        assert run_suite('tables').checked == 12 + 7 + 10 + 9

    def test_periodicity_raises_small_bounds(self):
        assert run_suite('periodicity', 5).ok

    def test_tables_note_the_printed_quartic_gamma(self):
        report = run_suite('tables')
        assert report.ok
        assert report.notes == ('(4, 4) row n=11 prints gamma=1, exact value 2',)
        assert str(report).endswith('; note: (4, 4) row n=11 prints gamma=1, exact value 2')

    def test_periodicity_covers_quartic_family(self):
        assert run_suite('periodicity', 20).checked == 5

    def test_positive_bound_includes_odd_max(self):
        # a in {1, 3, 5}: 4 + 3 + 3 coprime pairs with 2 <= b <= 5
        assert run_suite('positive', 5).checked == 10
        assert run_suite('positive', 3).checked == 3

    @pytest.mark.slow
    def test_default_dichotomy(self):
        assert run_suite('dichotomy').ok


class TestRunSuites:
    """Selection and expansion of suite names."""

    def test_all_expands_in_order(self):
        reports = run_suites(['all'], 12)
        assert [r.name for r in reports] == list(SUITES)
        assert all(r.ok for r in reports)

    def test_explicit_order_is_kept(self):
        reports = run_suites(['sums', 'cassini'], 10)
        assert [r.name for r in reports] == ['sums', 'cassini']

    @pytest.mark.parametrize("alias, name", sorted(SUITE_ALIASES.items()))
    def test_alias_runs_named_suite(self, alias, name):
        report = run_suite(alias, 10)
        assert report.name == name
        assert report == run_suite(name, 10)

    def test_aliases_are_not_expanded_by_all(self):
        assert not set(SUITE_ALIASES) & set(SUITES)

    def test_unknown_suite(self):
        with pytest.raises(DomainError):
            run_suite('nope')

    def test_negative_bound(self):
        with pytest.raises(DomainError):
            run_suite('cassini', -1)


class TestSuiteReport:
    """Report formatting."""

    def test_passing(self):
        report = SuiteReport('cassini', 10, 10)
        assert report.ok
        assert str(report) == 'cassini: 10/10 passed'

    def test_failing(self):
        report = SuiteReport('sums', 4, 3, 'n=2')
        assert not report.ok
        assert str(report) == 'sums: 3/4 passed; first counterexample: n=2'

    def test_notes_follow_counts(self):
        report = SuiteReport('tables', 2, 2, notes=('printed gamma differs',))
        assert report.ok
        assert str(report) == 'tables: 2/2 passed; note: printed gamma differs'
