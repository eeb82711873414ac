"""Bit helpers shared by words, rules and the evolution kernel."""

from __future__ import annotations

from collections.abc import Iterable, Sequence

from ..exceptions import InvalidWordError


def width_mask(width: int) -> int:
    """Return the integer with the ``width`` lowest bits set."""
    return (1 << width) - 1


def parse_bits(text: str, *, field_name: str = "word") -> tuple[int, ...]:
    """
    Parse a binary string read left to right into a tuple of symbols.

    :param text: Candidate such as ``"011100"``; the empty string is allowed.
    :param field_name: Friendly label used in validation errors.
    :raises InvalidWordError: If ``text`` is not a string of ``0``/``1``.
    """
    if not isinstance(text, str):
        raise InvalidWordError(f"{field_name} must be a string, got {type(text)!r}")
    stripped = text.strip()
    if any(char not in "01" for char in stripped):
        raise InvalidWordError(f"{field_name} must contain only 0 and 1, got {text!r}")
    return tuple(int(char) for char in stripped)


def bits_to_code(symbols: Iterable[int]) -> int:
    """Encode symbols with the leftmost cell as most significant bit."""
    code = 0
    for symbol in symbols:
        code = (code << 1) | symbol
    return code


def code_to_bits(code: int, width: int) -> tuple[int, ...]:
    """Decode ``code`` into ``width`` symbols, leftmost first."""
    if code < 0 or code >> width:
        raise InvalidWordError(f"code {code} does not fit in {width} bits")
    return tuple((code >> (width - 1 - index)) & 1 for index in range(width))


def format_bits(symbols: Sequence[int]) -> str:
    """Render symbols as a binary string."""
    return "".join(str(symbol) for symbol in symbols)


def format_code(code: int, width: int) -> str:
    """Render ``code`` as a ``width``-character binary string."""
    return format(code, f"0{width}b") if width else ""


__all__ = [
    "width_mask",
    "parse_bits",
    "bits_to_code",
    "code_to_bits",
    "format_bits",
    "format_code",
]
