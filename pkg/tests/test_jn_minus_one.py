"""Tests for the constructive representations in J_n(-1) with digits {p, z}."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jordanum import (
    DigitWord,
    bezout,
    build_ladder,
    combine_words,
    evaluate,
    full_representation,
    fullness_certificate,
    jn_minus_one_system,
    lower_unit_word,
    pad_even,
)
from jordanum.errors import InvalidInputError, ResourceLimitError


class TestPadEven:
    """Test padding to even length."""

    @pytest.mark.parametrize("text,expected", [("p", "zp"), ("zp", "zp"), ("", ""), ("ppz", "zppz")])
    def test_pad(self, text: str, expected: str):
        assert pad_even(DigitWord.from_string(text)).to_string() == expected

    @given(st.text(alphabet="pz", max_size=15), st.integers(min_value=1, max_value=4))
    def test_value_preserved(self, text: str, n: int):
        system = jn_minus_one_system(n)
        word = DigitWord.from_string(text)
        padded = pad_even(word)
        assert padded.length % 2 == 0
        assert evaluate(system, padded) == evaluate(system, word)


class TestBezout:
    """Test the normalized Bezout coefficients."""

    @pytest.mark.parametrize(
        "t,u,expected", [(3, 5, (2, -1)), (1, 1, (1, 0)), (5, 7, (3, -2)), (-3, 5, (-2, -1))]
    )
    def test_values(self, t: int, u: int, expected: tuple[int, int]):
        assert bezout(t, u) == expected

    @given(st.integers(min_value=-200, max_value=200), st.integers(min_value=-200, max_value=200))
    def test_identity(self, t: int, u: int):
        from math import gcd

        if t == 0 or u == 0 or gcd(t, u) != 1:
            with pytest.raises(InvalidInputError):
                bezout(t, u)
            return
        x, y = bezout(t, u)
        assert x * t + y * u == 1
        assert x != 0

    def test_rejects(self):
        with pytest.raises(InvalidInputError):
            bezout(2, 4)
        with pytest.raises(InvalidInputError):
            bezout(0, 1)


class TestCombine:
    """Test combining two even-length words for a target coordinate."""

    def test_zero_total(self):
        unit = DigitWord.from_string("zp")
        assert combine_words(unit, unit, 0, 2, n=2).length == 0

    @pytest.mark.parametrize("total", [1, 3, -1, -4])
    def test_unit_words(self, total: int):
        unit = DigitWord.from_string("zp")
        word = combine_words(unit, unit, total, 2, n=2)
        assert evaluate(jn_minus_one_system(2), word)[1] == total

    def test_coprime_pair(self):
        system = jn_minus_one_system(2)
        t = DigitWord.from_string("zzpzzp")
        u = DigitWord.from_string("zzpzzzzp")
        assert evaluate(system, t) == (3, 0)
        assert evaluate(system, u) == (5, 0)
        for total in (1, 2, -1, 7):
            assert evaluate(system, combine_words(t, u, total, 1, n=2)) == (total, 0)

    def test_rejects_odd_length(self):
        with pytest.raises(InvalidInputError):
            combine_words(DigitWord.from_string("p"), DigitWord.from_string("zp"), 1, 2, n=2)

    def test_rejects_wrong_shape(self):
        with pytest.raises(InvalidInputError):
            combine_words(DigitWord.from_string("zp"), DigitWord.from_string("zp"), 1, 1, n=2)

    def test_rejects_coordinate(self):
        with pytest.raises(InvalidInputError):
            combine_words(DigitWord.from_string("zp"), DigitWord.from_string("zp"), 1, 3, n=2)

    @settings(max_examples=50, deadline=None)
    @given(st.text(alphabet="pz", min_size=1, max_size=10), st.integers(min_value=0, max_value=6))
    def test_shift_parity_law(self, text: str, offset: int):
        # an even-length word with zeros after coordinate 1 keeps its coordinate
        # at even offsets and flips it at odd ones
        system = jn_minus_one_system(3)
        word = pad_even(DigitWord.from_string(text))
        value = evaluate(system, word)
        shifted = evaluate(system, word + DigitWord.of("z", offset))
        if value[1:] == (0, 0):
            assert shifted == (value[0] * (-1) ** offset, 0, 0)


class TestLadder:
    """Test the unit word ladder."""

    def test_lower_unit_word(self):
        word = lower_unit_word(DigitWord.from_string("zp"), 1, n=2)
        assert word.length == 22
        assert evaluate(jn_minus_one_system(2), word) == (1, 0)

    def test_lower_rejects(self):
        with pytest.raises(InvalidInputError):
            lower_unit_word(DigitWord.from_string("p"), 1, n=2)
        with pytest.raises(InvalidInputError):
            lower_unit_word(DigitWord.from_string("zp"), 2, n=2)
        with pytest.raises(InvalidInputError):
            lower_unit_word(DigitWord.from_string("pz"), 1, n=2)

    def test_dimension_one(self):
        ladder = build_ladder(1)
        assert ladder.rung(1).to_string() == "zp"

    @pytest.mark.parametrize(
        "n,lengths", [(2, (22, 2)), (3, (1082, 22, 2)), (4, (2346862, 1082, 22, 2))]
    )
    def test_lengths(self, n: int, lengths: tuple[int, ...]):
        assert build_ladder(n).lengths == lengths

    @pytest.mark.parametrize("n", [2, 3, 4])
    def test_unit_shape(self, n: int):
        system = jn_minus_one_system(n)
        ladder = build_ladder(n)
        for j in range(1, n + 1):
            value = evaluate(system, ladder.rung(j))
            assert value[j - 1] == 1
            assert all(x == 0 for x in value[j:])

    @settings(max_examples=60, deadline=None)
    @given(st.data())
    def test_unit_words_add_at_their_coordinate(self, data: st.DataObject):
        n = data.draw(st.integers(min_value=1, max_value=4))
        j = data.draw(st.integers(min_value=1, max_value=n))
        copies = data.draw(st.integers(min_value=0, max_value=3))
        text = data.draw(st.text(alphabet="pz", max_size=12))

        system = jn_minus_one_system(n)
        high = build_ladder(n).rung(j).repeat(copies)
        low = pad_even(DigitWord.from_string(text))
        high_value, low_value = evaluate(system, high), evaluate(system, low)
        combined = evaluate(system, high + low)

        assert high_value[j - 1] == copies
        assert combined[j:] == low_value[j:]
        assert combined[j - 1] == low_value[j - 1] + high_value[j - 1]

    def test_rejects_dimension(self):
        with pytest.raises(InvalidInputError):
            build_ladder(0)
        with pytest.raises(InvalidInputError):
            build_ladder(2).rung(3)


class TestFullRepresentation:
    """Test representations of arbitrary targets."""

    def test_zero(self):
        assert full_representation(2, (0, 0)).length == 0

    @pytest.mark.parametrize(
        "n,target", [(2, (0, 1)), (2, (-3, 2)), (3, (2, -1, 3)), (4, (1, -1, 0, 2)), (1, (-5,))]
    )
    def test_targets(self, n: int, target: tuple[int, ...]):
        word = full_representation(n, target)
        assert evaluate(jn_minus_one_system(n), word) == target

    def test_wrong_dimension(self):
        with pytest.raises(InvalidInputError):
            full_representation(3, (1, 2))


class TestCertificate:
    """Test exhaustive certificates over boxes."""

    @pytest.mark.parametrize(
        "n,box,targets", [(2, 3, 49), (1, 5, 11), (3, 1, 27), (3, 2, 125), (4, 1, 81)]
    )
    def test_boxes(self, n: int, box: int, targets: int):
        report = fullness_certificate(n, box)
        assert report.targets == targets
        assert report.dimension == n
        assert report.max_length > 0

    def test_limits(self):
        with pytest.raises(ResourceLimitError):
            fullness_certificate(5, 1)
        with pytest.raises(ResourceLimitError):
            fullness_certificate(2, 6)
        with pytest.raises(InvalidInputError):
            fullness_certificate(0, 1)
