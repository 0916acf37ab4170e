"""
Tests for exact arithmetic helpers.
"""

import sys
from fractions import Fraction
from math import comb
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from gbounds.core.arith import binom, ceil_rat, floor_rat, ratio_sweep, ratio_table
from gbounds.core.errors import InvalidParameterError


class TestBinom:
    """Test cases for the binomial convention."""

    def test_in_range(self):
        """Test ordinary values."""
        assert binom(5, 2) == 10
        assert binom(7, 0) == 1
        assert binom(7, 7) == 1

    def test_pascal_triangle(self):
        """Test every row up to 64 against the Pascal recurrence."""
        row = [1]
        for a in range(65):
            assert [binom(a, b) for b in range(a + 1)] == row
            row = [1] + [x + y for x, y in zip(row, row[1:])] + [1]

    @pytest.mark.parametrize("a, b", [(3, 4), (3, -1), (-2, 1), (-1, -1)])
    def test_out_of_range_is_zero(self, a, b):
        """Test the zero convention."""
        assert binom(a, b) == 0


class TestRounding:
    """Test cases for exact floor and ceiling."""

    def test_positive(self):
        """Test a positive non-integer."""
        assert floor_rat(Fraction(7, 2)) == 3
        assert ceil_rat(Fraction(7, 2)) == 4

    def test_negative(self):
        """Test a negative non-integer."""
        assert floor_rat(Fraction(-7, 2)) == -4
        assert ceil_rat(Fraction(-7, 2)) == -3

    def test_integer(self):
        """Test that integers are their own floor and ceiling."""
        assert floor_rat(Fraction(2)) == 2
        assert ceil_rat(Fraction(2)) == 2


class TestRatioTable:
    """Test cases for C(s, t) / C(n, t) tables."""

    @pytest.mark.parametrize("n, t", [(5, 2), (9, 0), (9, 9), (12, 5)])
    def test_matches_binomials(self, n, t):
        """Test every entry against math.comb."""
        table = ratio_table(n, t)
        for s in range(n + 1):
            assert table[s] == Fraction(comb(s, t), comb(n, t))

    def test_negative_index_reads_zero(self):
        """Test the s < 0 convention."""
        assert ratio_table(6, 2)[-3] == 0

    def test_invalid(self):
        """Test t outside [0, n]."""
        with pytest.raises(InvalidParameterError):
            ratio_table(4, 5)


class TestRatioSweep:
    """Test cases for incremental ratio columns."""

    def test_agrees_with_tables(self):
        """Test every column of a sweep against the per-t table."""
        n = 11
        support = {0, 2, 5, 7, 10, 11}
        columns = list(ratio_sweep(n, support, 1, n))
        assert [c.t for c in columns] == list(range(1, n + 1))
        for column in columns:
            table = ratio_table(n, column.t)
            for s in support:
                assert column[s] == table[s]

    def test_support_filtered(self):
        """Test that values outside 0..n are dropped."""
        [column] = list(ratio_sweep(4, {-1, 2, 9}, 1, 1))
        assert set(column.values) == {2}
        assert column[-1] == 0

    def test_weighted_sum(self):
        """Test the count-weighted sum of a column."""
        [column] = list(ratio_sweep(6, {3, 5}, 2, 2))
        total = column.weighted_sum({3: 2, 5: 1, -4: 7})
        assert total == 2 * Fraction(3, 15) + Fraction(10, 15)

    def test_columns_are_independent(self):
        """Test that yielded columns are not mutated by later steps."""
        columns = list(ratio_sweep(5, {4}, 0, 3))
        assert [c[4] for c in columns] == [1, Fraction(4, 5), Fraction(6, 10), Fraction(4, 10)]

    def test_invalid_range(self):
        """Test a range beyond n."""
        with pytest.raises(InvalidParameterError):
            list(ratio_sweep(4, {1}, 0, 5))
