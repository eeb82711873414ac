"""Tests for region words, control pairs and the bit helpers behind them."""

from __future__ import annotations

import pytest

from regional_control.core import ControlPair, RegionWord, as_region_word, null_control
from regional_control.exceptions import InvalidWordError
from regional_control.utils import code_to_bits, format_code, parse_bits, width_mask


def test_leftmost_cell_is_most_significant_bit() -> None:
    """The canonical encoding reads the word left to right as a binary number."""
    word = RegionWord.from_text("011100")
    assert word.code == 28
    assert RegionWord.from_code(28, 6) == word
    assert str(word) == "011100"
    assert len(word) == 6 and word[1] == 1


def test_from_text_enforces_expected_length() -> None:
    """A length mismatch must raise InvalidWordError naming the word."""
    with pytest.raises(InvalidWordError, match="must have length 4"):
        RegionWord.from_text("011", length=4)


def test_non_binary_text_is_rejected() -> None:
    """Only 0 and 1 characters are valid symbols."""
    with pytest.raises(InvalidWordError):
        RegionWord.from_text("0120")
    with pytest.raises(InvalidWordError):
        parse_bits(101)  # type: ignore[arg-type]


def test_symbols_are_validated_on_construction() -> None:
    """RegionWord rejects symbols outside {0, 1}, including booleans."""
    with pytest.raises(InvalidWordError):
        RegionWord((0, 2))
    with pytest.raises(InvalidWordError):
        RegionWord((True, False))  # type: ignore[arg-type]


def test_control_index_encoding_orders_left_then_right() -> None:
    """Index is enc(left) * 2**r + enc(right)."""
    pair = ControlPair.from_text("1", "0")
    assert pair.index == 2
    assert ControlPair.from_index(1, 1) == ControlPair((0,), (1,))
    assert ControlPair.from_index(0b1101, 2) == ControlPair((1, 1), (0, 1))
    assert str(ControlPair.from_index(3, 1)) == "(1,1)"


def test_control_pair_rejects_mismatched_sides_and_bad_index() -> None:
    """Both control words must share the radius and the index must be in range."""
    with pytest.raises(InvalidWordError):
        ControlPair((0,), (0, 1))
    with pytest.raises(InvalidWordError):
        ControlPair((), ())
    with pytest.raises(InvalidWordError):
        ControlPair.from_index(4, 1)
    with pytest.raises(InvalidWordError, match="length 2"):
        ControlPair.from_text("0", "1", radius=2)


def test_null_control_and_coercion_helpers() -> None:
    """null_control is all zeros; as_region_word accepts text, tuples and words."""
    assert null_control(2) == ControlPair((0, 0), (0, 0))
    word = RegionWord.from_text("10")
    assert as_region_word("10") == word
    assert as_region_word((1, 0)) == word
    assert as_region_word(word) is word


def test_bit_helpers_agree() -> None:
    """Decoding, formatting and masks use the same bit order."""
    assert code_to_bits(5, 4) == (0, 1, 0, 1)
    assert format_code(5, 4) == "0101"
    assert format_code(0, 0) == ""
    assert width_mask(3) == 7
    with pytest.raises(InvalidWordError):
        code_to_bits(16, 4)
