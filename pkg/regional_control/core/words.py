"""Finite words over the Boolean alphabet: region contents and boundary controls."""

from __future__ import annotations

from collections.abc import Iterator, Sequence
from dataclasses import dataclass

from ..exceptions import InvalidWordError
from ..utils import bits_to_code, code_to_bits, format_bits, parse_bits, width_mask
from ..validation import validate_symbols


@dataclass(frozen=True, slots=True)
class RegionWord:
    """
    Contents of the controlled region, leftmost cell first.

    The canonical integer encoding treats the leftmost cell as the most
    significant bit, so ``RegionWord.from_text("011100").code == 28``. The
    textual form is the binary string read left to right.
    """

    symbols: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "symbols", validate_symbols(self.symbols))

    @classmethod
    def from_text(cls, text: str, *, length: int | None = None) -> RegionWord:
        """
        Parse ``text`` such as ``"011100"``.

        :param length: Expected length; ``None`` accepts any.
        :raises InvalidWordError: On non-binary characters or a length mismatch.
        """
        symbols = parse_bits(text)
        if length is not None and len(symbols) != length:
            raise InvalidWordError(f"word {text!r} must have length {length}, got {len(symbols)}")
        return cls(symbols)

    @classmethod
    def from_code(cls, code: int, length: int) -> RegionWord:
        """Decode ``code`` into a word of ``length`` cells."""
        return cls(code_to_bits(code, length))

    @classmethod
    def zeros(cls, length: int) -> RegionWord:
        return cls((0,) * length)

    @property
    def length(self) -> int:
        return len(self.symbols)

    @property
    def code(self) -> int:
        return bits_to_code(self.symbols)

    def __len__(self) -> int:
        return len(self.symbols)

    def __iter__(self) -> Iterator[int]:
        return iter(self.symbols)

    def __getitem__(self, index: int) -> int:
        return self.symbols[index]

    def __str__(self) -> str:
        return format_bits(self.symbols)


@dataclass(frozen=True, slots=True)
class ControlPair:
    """
    Boundary control written on the ``r`` cells left and right of the region.

    The index encoding is ``enc(left) * 2**r + enc(right)``, which enumerates
    control pairs in the order ``(0…0, 0…0), (0…0, 0…1), …, (1…1, 1…1)``.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]

    def __post_init__(self) -> None:
        left = validate_symbols(self.left, field_name="left control")
        right = validate_symbols(self.right, field_name="right control", length=len(left))
        if not left:
            raise InvalidWordError("control words must have length >= 1")
        object.__setattr__(self, "left", left)
        object.__setattr__(self, "right", right)

    @classmethod
    def from_index(cls, index: int, radius: int) -> ControlPair:
        """Decode a control index for a rule of the given radius."""
        if not 0 <= index < 1 << (2 * radius):
            raise InvalidWordError(
                f"control index must be in [0, {1 << (2 * radius)}), got {index}"
            )
        return cls(
            code_to_bits(index >> radius, radius),
            code_to_bits(index & width_mask(radius), radius),
        )

    @classmethod
    def from_text(cls, left: str, right: str, *, radius: int | None = None) -> ControlPair:
        """Parse a control from its two binary strings."""
        pair = cls(
            parse_bits(left, field_name="left control"),
            parse_bits(right, field_name="right control"),
        )
        if radius is not None and pair.radius != radius:
            raise InvalidWordError(f"control words must have length {radius}, got {pair.radius}")
        return pair

    @property
    def radius(self) -> int:
        return len(self.left)

    @property
    def index(self) -> int:
        return (bits_to_code(self.left) << self.radius) | bits_to_code(self.right)

    def __str__(self) -> str:
        return f"({format_bits(self.left)},{format_bits(self.right)})"


def null_control(radius: int) -> ControlPair:
    """Return the all-zero control pair for ``radius``."""
    return ControlPair((0,) * radius, (0,) * radius)


def as_region_word(value: RegionWord | str | Sequence[int]) -> RegionWord:
    """Coerce text, symbol sequences or words into a :class:`RegionWord`."""
    if isinstance(value, RegionWord):
        return value
    if isinstance(value, str):
        return RegionWord.from_text(value)
    return RegionWord(tuple(value))


__all__ = ["RegionWord", "ControlPair", "null_control", "as_region_word"]
