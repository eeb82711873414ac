"""Pytest configuration for the regional controllability test suite."""

from __future__ import annotations

import os
from collections.abc import Callable
from typing import Any

import pytest
from PySide6.QtGui import QGuiApplication

from regional_control.api.config import AnalysisConfig
from regional_control.core import Rule, wolfram_rule

# Force headless Qt in CI and local terminals that lack a display server.
os.environ.setdefault("QT_QPA_PLATFORM", "offscreen")


@pytest.fixture(scope="session")
def qapp() -> QGuiApplication:
    """
    Provide a single GUI application instance for the entire test session.

    Only ``QImage`` is used, so a ``QGuiApplication`` is enough; an existing
    instance created by pytest-qt is reused.
    """
    existing = QGuiApplication.instance()
    if isinstance(existing, QGuiApplication):
        return existing
    return QGuiApplication([])


@pytest.fixture(name="rule")
def fixture_rule() -> Callable[[int], Rule]:
    """Return a helper that builds radius-1 rules by Wolfram code."""
    return wolfram_rule


@pytest.fixture(name="config_factory")
def fixture_config_factory() -> Callable[..., AnalysisConfig]:
    """Return a helper that builds :class:`AnalysisConfig` instances."""

    def _factory(**overrides: Any) -> AnalysisConfig:
        return AnalysisConfig(**overrides)

    return _factory


@pytest.fixture(name="fixtures_dir")
def fixture_fixtures_dir() -> str:
    """Directory holding checked-in regression fixtures."""
    return os.path.join(os.path.dirname(__file__), "regression", "fixtures")
