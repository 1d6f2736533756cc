"""Tests for number systems, exact evaluation and the norm bounds."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from jordanum import (
    DigitWord,
    JordanPower,
    NumberSystem,
    evaluate,
    evaluate_fast_j2m1,
    evaluate_fast_j2p1,
    jn_minus_one_system,
    jordan_power_entry,
    length_lower_bound,
    negate_word_j2p1,
    norm_bound_constant,
)
from jordanum.core import norm_bound_coefficient, parity_split, parity_stats, sup_norm
from jordanum.errors import InvalidInputError
from jordanum.lib.matrix import jordan_block, mat_pow
from jordanum.word import Letter


class TestNumberSystem:
    """Test system construction and selectors."""

    def test_named_systems(self, j2p1: NumberSystem, j2m1: NumberSystem):
        assert NumberSystem.from_name("j2p1") is j2p1
        assert NumberSystem.from_name("J2M1") == j2m1
        assert j2p1.digits == (Letter.P, Letter.M)
        assert j2m1.digits == (Letter.P, Letter.Z)

    def test_jn_selector(self):
        system = NumberSystem.from_name("j4m1")
        assert system.dimension == 4
        assert system.eigenvalue == -1
        assert system == jn_minus_one_system(4)

    @pytest.mark.parametrize("name", ["j3p1", "foo", "j0m1", "j2", ""])
    def test_unknown_selector(self, name: str):
        with pytest.raises(InvalidInputError):
            NumberSystem.from_name(name)

    def test_invalid_systems(self):
        with pytest.raises(InvalidInputError):
            NumberSystem(2, 2, (Letter.P,))
        with pytest.raises(InvalidInputError):
            NumberSystem(2, 1, (Letter.P, Letter.P))
        with pytest.raises(InvalidInputError):
            NumberSystem(2, 1, ())

    def test_check_vector(self, j2p1: NumberSystem):
        assert j2p1.check_vector([3, 4]) == (3, 4)
        with pytest.raises(InvalidInputError):
            j2p1.check_vector((1, 2, 3))


class TestJordanPower:
    """Test the binomial closed form for powers of a Jordan block."""

    @pytest.mark.parametrize(
        "n,sign,k,i,j,expected",
        [
            (2, 1, 5, 0, 1, 5),
            (2, -1, 3, 0, 1, 3),
            (4, -1, 6, 0, 3, -20),
            (3, 1, 0, 0, 0, 1),
            (3, 1, 0, 0, 2, 0),
            (3, -1, 4, 2, 0, 0),
        ],
    )
    def test_entries(self, n: int, sign: int, k: int, i: int, j: int, expected: int):
        assert jordan_power_entry(n, sign, k, i, j) == expected

    @pytest.mark.parametrize("sign", [1, -1])
    def test_matches_repeated_multiplication(self, sign: int):
        for k in range(10):
            power = JordanPower(4, sign, k)
            assert power.matrix == mat_pow(jordan_block(4, sign), k)
            assert power.column(3) == tuple(row[3] for row in power.matrix)

    @pytest.mark.parametrize("sign", [1, -1])
    def test_matches_pascal_rows(self, sign: int):
        row = [1]
        for k in range(13):
            for n in range(1, 5):
                for i in range(n):
                    for j in range(n):
                        d = j - i
                        expected = row[d] * sign ** (k - d) if 0 <= d <= k else 0
                        assert jordan_power_entry(n, sign, k, i, j) == expected
            row = [x + y for x, y in zip([0, *row], [*row, 0])]

    @pytest.mark.parametrize("args", [(2, 1, 3, 2, 0), (2, 1, -1, 0, 0), (2, 0, 3, 0, 0)])
    def test_rejects(self, args: tuple[int, ...]):
        with pytest.raises(InvalidInputError):
            jordan_power_entry(*args)


class TestEvaluate:
    """Test exact evaluation and its closed forms."""

    @pytest.mark.parametrize(
        "word,expected",
        [("pp", (1, 2)), ("ppppmm", (13, 2)), ("pppmpm", (11, 2)), ("", (0, 0))],
    )
    def test_j2p1(self, j2p1: NumberSystem, word: str, expected: tuple[int, int]):
        assert evaluate(j2p1, word) == expected

    @pytest.mark.parametrize(
        "word,expected",
        [
            ("ppzpp", (0, 0)),
            ("pzzpzp", (3, 1)),
            ("pppzzpzpz", (-3, -1)),
            ("pz", (1, -1)),
            ("z", (0, 0)),
            ("", (0, 0)),
        ],
    )
    def test_j2m1(self, j2m1: NumberSystem, word: str, expected: tuple[int, int]):
        assert evaluate(j2m1, word) == expected
        assert evaluate_fast_j2m1(word) == expected

    @pytest.mark.parametrize(
        "word,expected", [("pm", (1, 0)), ("mp", (-1, 0)), ("pppmpm", (11, 2))]
    )
    def test_fast_j2p1(self, word: str, expected: tuple[int, int]):
        assert evaluate_fast_j2p1(word) == expected

    def test_empty_word_is_zero(self, j3m1: NumberSystem):
        assert evaluate(j3m1, DigitWord.empty()) == (0, 0, 0)

    def test_foreign_digit(self, j2p1: NumberSystem, j2m1: NumberSystem):
        with pytest.raises(InvalidInputError):
            evaluate(j2p1, "pz")
        with pytest.raises(InvalidInputError):
            evaluate(j2m1, "pm")
        with pytest.raises(InvalidInputError):
            evaluate_fast_j2p1("zp")
        with pytest.raises(InvalidInputError):
            evaluate_fast_j2m1("mp")

    @given(st.text(alphabet="pm", max_size=40))
    def test_fast_j2p1_agrees(self, text: str):
        from jordanum import J2_PLUS_ONE

        assert evaluate_fast_j2p1(text) == evaluate(J2_PLUS_ONE, text)

    @given(st.text(alphabet="pz", max_size=40))
    def test_fast_j2m1_agrees(self, text: str):
        from jordanum import J2_MINUS_ONE

        assert evaluate_fast_j2m1(text) == evaluate(J2_MINUS_ONE, text)

    def test_nested_words_match_flat(self, j3m1: NumberSystem, nested_words: list[str]):
        for text in nested_words:
            word = DigitWord.from_string(text)
            flat = word.to_string()
            assert evaluate(j3m1, word) == evaluate(j3m1, flat)
            assert evaluate_fast_j2m1(word) == evaluate_fast_j2m1(flat)

    def test_long_runs(self, j2p1: NumberSystem, j2m1: NumberSystem):
        assert evaluate(j2p1, "p*40") == (780, 40)
        assert evaluate(j2p1, "p*40") == evaluate_fast_j2p1("p" * 40)
        assert evaluate(j2p1, "(pm)*50") == evaluate_fast_j2p1("pm" * 50)
        assert evaluate(j2m1, "(p z*3)*25 p*37") == evaluate_fast_j2m1("pzzz" * 25 + "p" * 37)

    def test_matrix_sum_definition(self, j3m1: NumberSystem):
        text = "ppzpzzpzp"
        total = [0, 0, 0]
        for i, letter in enumerate(reversed(text)):
            if letter == "p":
                column = JordanPower(3, -1, i).column(2)
                total = [x + y for x, y in zip(total, column)]
        assert evaluate(j3m1, text) == tuple(total)

    @pytest.mark.parametrize("start,count", [(0, 0), (0, 5), (3, 4), (4, 1), (7, 10)])
    def test_parity_split(self, start: int, count: int):
        indices = range(start, start + count)
        even = [i for i in indices if i % 2 == 0]
        odd = [i for i in indices if i % 2]
        assert parity_split(start, count) == (len(even), sum(even), len(odd), sum(odd))

    @pytest.mark.parametrize(
        "text",
        [
            "(pzp)*7 z (pzz (pz)*3)*5 p",
            "z (p (zp)*2)*9 (zzp)*4",
            "((pzp)*3 z)*5 (zp)*11",
            "(p*3 z)*6 (pzzzp)*3 z",
        ],
    )
    def test_parity_stats_on_groups(self, text: str):
        word = DigitWord.from_string(text)
        flat = word.to_string()
        even = [i for i, letter in enumerate(reversed(flat)) if letter == "p" and i % 2 == 0]
        odd = [i for i, letter in enumerate(reversed(flat)) if letter == "p" and i % 2]
        assert parity_stats(word) == (len(even), sum(even), len(odd), sum(odd))
        assert evaluate_fast_j2m1(word) == evaluate_fast_j2m1(flat)

    def test_fast_j2m1_on_progressions(self, j2m1: NumberSystem):
        word = DigitWord.from_progressions([(0, 40), (1, 13), (95, 30)], 160)
        assert evaluate_fast_j2m1(word) == evaluate(j2m1, word.to_string())


class TestNegate:
    """Test the p <-> m exchange."""

    @pytest.mark.parametrize(
        "word,expected", [("ppppmm", "mmmmpp"), ("", ""), ("pm", "mp")]
    )
    def test_negate(self, j2p1: NumberSystem, word: str, expected: str):
        negated = negate_word_j2p1(word)
        assert negated.to_string() == expected
        assert evaluate(j2p1, negated) == tuple(-x for x in evaluate(j2p1, word))

    def test_foreign_digit(self):
        with pytest.raises(InvalidInputError):
            negate_word_j2p1("pz")


class TestNormBound:
    """Test the polynomial growth bound and the resulting length bound."""

    def test_coefficients(self, j2p1: NumberSystem, j3m1: NumberSystem):
        assert norm_bound_coefficient(j2p1) == Fraction(3, 2)
        assert norm_bound_coefficient(j3m1) == Fraction(5, 3)

    def test_anchors(self, j2p1: NumberSystem, j2m1: NumberSystem):
        assert norm_bound_constant(j2p1, 1) >= 1
        assert norm_bound_constant(j2p1, 6) >= sup_norm(evaluate(j2p1, "ppppmm"))
        assert norm_bound_constant(j2m1, 5) >= sup_norm(evaluate(j2m1, "pzzzz"))
        assert evaluate(j2m1, "pzzzz") == (-4, 1)

    def test_rejects_empty_length(self, j2p1: NumberSystem):
        with pytest.raises(InvalidInputError):
            norm_bound_constant(j2p1, 0)

    def test_length_lower_bound(self, j2p1: NumberSystem):
        assert length_lower_bound(j2p1, (0, 0)) == 0
        assert length_lower_bound(j2p1, (13, 2)) <= 6
        assert length_lower_bound(j2p1, (600, 0)) == 20
