"""Tests for count tables of fixed-length representations."""

import pytest

from jordanum import (
    J2_MINUS_ONE,
    J2_PLUS_ONE,
    LaurentTable,
    NumberSystem,
    count_reps,
    count_table,
    count_table_j2m1,
    count_table_j2p1,
    jn_minus_one_system,
    min_length_j2m1,
    min_length_j2p1,
)
from jordanum.counting import iter_count_tables
from jordanum.errors import InvalidInputError
from jordanum.oracle import brute_force_counts


class TestLaurentTable:
    """Test the sparse polynomial container."""

    def test_one(self):
        one = LaurentTable.one()
        assert one.coefficients == {(0, 0): 1}
        assert one.length == 0
        assert one.mass == 1

    def test_multiply(self):
        left = LaurentTable({(0, 1): 1, (0, -1): 1}, 1)
        right = LaurentTable({(1, 1): 1, (-1, -1): 1}, 1)
        product = left * right
        assert product.coefficients == {(1, 2): 1, (-1, 0): 1, (1, 0): 1, (-1, -2): 1}
        assert product.length == 2

    def test_zero_entries_dropped(self):
        assert len(LaurentTable({(0, 0): 0, (1, 1): 2})) == 1

    def test_rejects_negative(self):
        with pytest.raises(InvalidInputError):
            LaurentTable({(0, 0): -1})

    def test_rows_and_csv(self):
        table = count_table_j2m1(2)
        assert table.rows() == [(1, -1, 1), (0, 0, 1), (1, 0, 1), (0, 1, 1)]
        lines = table.to_csv().splitlines()
        assert lines[0] == "a,b,count"
        assert len(lines) == len(table) + 1

    def test_report(self):
        report = count_table_j2p1(3).report(J2_PLUS_ONE)
        assert report.k == 3
        assert report.mass == 8
        assert sum(row.count for row in report.rows) == 8
        assert report.to_dict()["schema"] == 1


class TestCountTables:
    """Test the tables against known values and the enumeration oracle."""

    def test_j2p1_small(self):
        assert count_table_j2p1(1).coefficients == {(0, 1): 1, (0, -1): 1}
        assert count_table_j2p1(2).coefficient(0, 0) == 0
        assert count_table_j2p1(6).coefficient(13, 2) == 1

    def test_j2m1_small(self):
        assert count_table_j2m1(1).coefficients == {(0, 0): 1, (0, 1): 1}
        assert count_table_j2m1(5).coefficient(0, 0) == 2
        assert count_table_j2m1(6).coefficient(3, 1) >= 1

    @pytest.mark.parametrize(
        "system,a,b,k,expected",
        [
            (J2_PLUS_ONE, 0, 1, 1, 1),
            (J2_PLUS_ONE, 0, 0, 2, 0),
            (J2_MINUS_ONE, 0, 0, 5, 2),
        ],
    )
    def test_count_reps(self, system: NumberSystem, a: int, b: int, k: int, expected: int):
        assert count_reps(system, a, b, k) == expected

    def test_unsupported_system(self):
        with pytest.raises(InvalidInputError):
            count_table(jn_minus_one_system(3), 2)
        with pytest.raises(InvalidInputError):
            count_table(jn_minus_one_system(3), 0)
        with pytest.raises(InvalidInputError):
            count_table(J2_PLUS_ONE, -1)

    @pytest.mark.parametrize("system", [J2_PLUS_ONE, J2_MINUS_ONE])
    def test_mass(self, system: NumberSystem):
        for k, table in enumerate(iter_count_tables(system, 40)):
            assert table.length == k
            assert table.mass == 2**k

    @pytest.mark.parametrize("system", [J2_PLUS_ONE, J2_MINUS_ONE])
    def test_against_enumeration(self, system: NumberSystem):
        for k in range(17):
            table = count_table(system, k)
            assert dict(brute_force_counts(system, k)) == table.coefficients

    def test_j2p1_symmetry(self):
        table = count_table_j2p1(9)
        for (a, b), count in table.coefficients.items():
            assert table.coefficient(-a, -b) == count

    def test_j2p1_support(self):
        for k in range(12):
            for a, b in count_table_j2p1(k).coefficients:
                assert abs(b) <= k
                assert abs(a) <= k * (k - 1) // 2

    @pytest.mark.parametrize(
        "system,formula", [(J2_PLUS_ONE, min_length_j2p1), (J2_MINUS_ONE, min_length_j2m1)]
    )
    def test_nothing_below_min_length(self, system: NumberSystem, formula):
        tables = list(iter_count_tables(system, 10))
        for a in range(-8, 9):
            for b in range(-3, 4):
                shortest = formula(a, b)
                for k in range(min(shortest, 11)):
                    assert tables[k].coefficient(a, b) == 0
                if shortest <= 10:
                    assert tables[shortest].coefficient(a, b) >= 1
