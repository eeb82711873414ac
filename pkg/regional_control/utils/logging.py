"""Lightweight logging helpers."""

from __future__ import annotations

import logging
import time
from collections.abc import Iterator, MutableMapping
from contextlib import contextmanager
from typing import Final

_DEFAULT_LOGGER_NAME: Final[str] = "regional_control"


def get_logger(name: str | None = None) -> logging.Logger:
    """Return a namespaced logger for the toolkit."""
    return logging.getLogger(name or _DEFAULT_LOGGER_NAME)


def configure_basic_logging(level: int = logging.INFO) -> None:
    """Configure root logging if it has not been configured yet."""
    if logging.getLogger().handlers:
        return
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")


@contextmanager
def log_elapsed(
    label: str,
    timings: MutableMapping[str, float] | None = None,
    *,
    logger: logging.Logger | None = None,
) -> Iterator[None]:
    """
    Time the enclosed block and log the duration at DEBUG level.

    :param label: Key used both in the log line and in ``timings``.
    :param timings: Optional mapping receiving the elapsed milliseconds.
    :param logger: Logger to write to (defaults to the package logger).
    """
    start = time.perf_counter()
    try:
        yield
    finally:
        elapsed_ms = (time.perf_counter() - start) * 1000.0
        if timings is not None:
            timings[label] = round(elapsed_ms, 3)
        (logger or get_logger()).debug("%s took %.1f ms", label, elapsed_ms)


__all__ = ["get_logger", "configure_basic_logging", "log_elapsed"]
