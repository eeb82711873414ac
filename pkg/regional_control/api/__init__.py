"""Public configuration surface."""

from .config import DEFAULT_CONFIG, THREADS_ENV_VAR, AnalysisConfig, resolve_config

__all__ = ["AnalysisConfig", "DEFAULT_CONFIG", "THREADS_ENV_VAR", "resolve_config"]
