"""Low-level validation helpers for configuration and runtime values."""

from __future__ import annotations

from collections.abc import Sequence

from ..exceptions import (
    InvalidConfigurationError,
    InvalidRuleError,
    InvalidWordError,
    ResourceLimitError,
)


def validate_dimension(
    value: object,
    *,
    field_name: str,
    min_value: int = 0,
    max_value: int | None = None,
) -> int:
    """
    Validate integer sizes, bounds and horizons.

    :param value: Object expected to be an ``int``.
    :param field_name: Friendly label used in validation errors.
    :param min_value: Minimum inclusive value.
    :param max_value: Maximum inclusive value (``None`` for unbounded).
    :raises InvalidConfigurationError: If value is not an ``int`` or out
        of bounds.
    """
    if not isinstance(value, int) or isinstance(value, bool):
        raise InvalidConfigurationError(f"{field_name} must be an integer, got {type(value)!r}")
    if value < min_value:
        raise InvalidConfigurationError(f"{field_name} must be >= {min_value}, got {value}")
    if max_value is not None and value > max_value:
        raise InvalidConfigurationError(f"{field_name} must be <= {max_value}, got {value}")
    return value


def validate_symbols(
    symbols: Sequence[int],
    *,
    field_name: str = "word",
    length: int | None = None,
) -> tuple[int, ...]:
    """
    Ensure ``symbols`` is a sequence over ``{0, 1}`` of the expected length.

    :raises InvalidWordError: On a non-binary symbol or a length mismatch.
    """
    result = tuple(symbols)
    for symbol in result:
        if symbol not in (0, 1) or isinstance(symbol, bool):
            raise InvalidWordError(f"{field_name} must contain only 0 and 1, got {symbol!r}")
    if length is not None and len(result) != length:
        raise InvalidWordError(f"{field_name} must have length {length}, got {len(result)}")
    return result


def validate_neighborhood(symbols: Sequence[int], *, radius: int) -> tuple[int, ...]:
    """
    Validate a neighborhood word of length ``2 * radius + 1``.

    :raises InvalidRuleError: If the length does not match the rule's radius.
    """
    expected = 2 * radius + 1
    if len(symbols) != expected:
        raise InvalidRuleError(
            f"neighborhood must have length {expected} for radius {radius}, got {len(symbols)}"
        )
    return validate_symbols(symbols, field_name="neighborhood")


def ensure_within_cap(requested: int, allowed: int, *, limit_name: str) -> int:
    """
    Raise :class:`ResourceLimitError` when ``requested`` exceeds ``allowed``.

    :returns: ``requested`` unchanged so callers can chain the check.
    """
    if requested > allowed:
        raise ResourceLimitError(limit_name, requested, allowed)
    return requested


__all__ = [
    "validate_dimension",
    "validate_symbols",
    "validate_neighborhood",
    "ensure_within_cap",
]
