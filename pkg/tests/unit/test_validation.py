"""Tests for low-level validation helpers."""

from __future__ import annotations

import pytest

from regional_control.exceptions import (
    InvalidConfigurationError,
    InvalidRuleError,
    InvalidWordError,
    ResourceLimitError,
    ValidationError,
)
from regional_control.validation import (
    ensure_within_cap,
    validate_dimension,
    validate_neighborhood,
    validate_symbols,
)


def test_validate_dimension_enforces_bounds() -> None:
    """Dimensions must be ints within the specified range."""
    assert validate_dimension(10, field_name="n", min_value=1, max_value=20) == 10
    with pytest.raises(InvalidConfigurationError, match="n must be >= 1, got 0"):
        validate_dimension(0, field_name="n", min_value=1)
    with pytest.raises(InvalidConfigurationError, match="n must be <= 20, got 30"):
        validate_dimension(30, field_name="n", min_value=1, max_value=20)
    with pytest.raises(InvalidConfigurationError):
        validate_dimension("10", field_name="n")


def test_validate_symbols_checks_alphabet_and_length() -> None:
    """Symbols must be 0/1 and match the expected length when given."""
    assert validate_symbols([0, 1, 1]) == (0, 1, 1)
    with pytest.raises(InvalidWordError):
        validate_symbols([0, 2])
    with pytest.raises(InvalidWordError, match="length 2"):
        validate_symbols([0, 1, 1], length=2)


def test_validate_neighborhood_uses_the_radius() -> None:
    """Neighborhoods have 2r + 1 cells."""
    assert validate_neighborhood((1, 0, 1, 1, 0), radius=2) == (1, 0, 1, 1, 0)
    with pytest.raises(InvalidRuleError):
        validate_neighborhood((1, 0), radius=1)


def test_ensure_within_cap_reports_the_limit() -> None:
    """Exceeding a cap raises ResourceLimitError carrying its name and sizes."""
    assert ensure_within_cap(5, 5, limit_name="n_cap") == 5
    with pytest.raises(ResourceLimitError) as excinfo:
        ensure_within_cap(6, 5, limit_name="n_cap")
    assert excinfo.value.limit_name == "n_cap"
    assert str(excinfo.value) == "n_cap exceeded: requested 6, allowed 5"


def test_validation_errors_share_a_base_class() -> None:
    """Malformed input is always a ValidationError and a ValueError."""
    for error in (InvalidRuleError, InvalidWordError, InvalidConfigurationError):
        assert issubclass(error, ValidationError)
        assert issubclass(error, ValueError)
    assert not issubclass(ResourceLimitError, ValidationError)
