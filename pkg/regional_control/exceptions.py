"""Custom exception hierarchy for the controllability toolkit."""

from __future__ import annotations


class ValidationError(ValueError):
    """Base class for validation-related failures."""


class InvalidRuleError(ValidationError):
    """Raised when a rule spec, rule table or neighborhood is malformed."""


class InvalidWordError(ValidationError):
    """Raised when a region word or control pair fails validation."""


class InvalidConfigurationError(ValidationError):
    """Raised when configuration objects contain invalid values."""


class ResourceLimitError(RuntimeError):
    """
    Raised when a request would exceed one of the configured caps.

    Args:
        limit_name: Name of the :class:`AnalysisConfig` field that was hit.
        requested: Size the operation would have needed.
        allowed: The configured cap.
    """

    def __init__(self, limit_name: str, requested: int, allowed: int) -> None:
        super().__init__(f"{limit_name} exceeded: requested {requested}, allowed {allowed}")
        self.limit_name = limit_name
        self.requested = requested
        self.allowed = allowed


class PreconditionError(RuntimeError):
    """Raised when an analysis is invoked on an object that violates its precondition."""


__all__ = [
    "ValidationError",
    "InvalidRuleError",
    "InvalidWordError",
    "InvalidConfigurationError",
    "ResourceLimitError",
    "PreconditionError",
]
