"""Runtime validation helpers used across the project."""

from .validators import (
    ensure_within_cap,
    validate_dimension,
    validate_neighborhood,
    validate_symbols,
)

__all__ = [
    "validate_dimension",
    "validate_symbols",
    "validate_neighborhood",
    "ensure_within_cap",
]
