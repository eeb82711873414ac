from __future__ import annotations

import os
from collections.abc import Mapping
from dataclasses import dataclass, fields
from typing import Final

from ..exceptions import InvalidConfigurationError
from ..validation import validate_dimension

THREADS_ENV_VAR: Final[str] = "REGIONAL_CONTROL_THREADS"

# Lower bounds for every numeric field; upper bounds where a larger value
# would overflow the int64 word encoding.
_BOUNDS: Final[dict[str, tuple[int, int | None]]] = {
    "n_cap": (1, 40),
    "table_cap": (8, None),
    "seed_width_cap": (1, 40),
    "graph_entry_cap": (2, None),
    "index_cap": (1, None),
    "index_vertex_cap": (1, None),
    "horizon_cap": (0, None),
    "context_cap": (1, None),
    "strip_width_cap": (1, 40),
    "certify_iteration_cap": (1, None),
    "blocking_horizon": (0, None),
    "periodicity_bound": (0, None),
    "workers": (1, 256),
}


@dataclass(frozen=True, slots=True)
class AnalysisConfig:
    """
    Caps, horizons and the thread-count hint shared by every analysis.

    Every value is validated eagerly with :func:`validate_dimension` so a
    configuration built from CLI flags or environment variables fails fast
    with a message naming the offending field. Operations that would exceed a
    cap raise :class:`~regional_control.exceptions.ResourceLimitError`
    instead of silently truncating their search.

    Args:
        n_cap: Largest region length accepted by ``build_graph``.
        table_cap: Largest composed rule table (entries).
        seed_width_cap: Largest seed width enumerated by the trace module.
        graph_entry_cap: Largest successor table (vertices x controls).
        index_cap: Largest M explored by ``primitivity_index``.
        index_vertex_cap: Largest vertex count for which Boolean powers are
            materialised.
        horizon_cap: Largest T accepted by exact-time synthesis.
        context_cap: Largest context enumeration per time step in the
            blocking checkers.
        strip_width_cap: Largest word length for the set-iteration certificate.
        certify_iteration_cap: Distinct reachable sets visited by the
            certificate before it gives up with ``UNKNOWN``.
        blocking_horizon: Default ``t_max`` for blocking checks.
        periodicity_bound: Default ``m_max``/``p_max`` for eventual periodicity.
        workers: Thread-count hint for chunked enumeration.

    Raises:
        InvalidConfigurationError: For any non-integer or out-of-range value.

    Example:
        >>> AnalysisConfig(n_cap=12, workers=4)
    """

    n_cap: int = 16
    table_cap: int = 1 << 25
    seed_width_cap: int = 26
    graph_entry_cap: int = 1 << 24
    index_cap: int = 4096
    index_vertex_cap: int = 4096
    horizon_cap: int = 1024
    context_cap: int = 1 << 24
    strip_width_cap: int = 20
    certify_iteration_cap: int = 4096
    blocking_horizon: int = 6
    periodicity_bound: int = 4
    workers: int = 1

    def __post_init__(self) -> None:
        """Validate every field against its bounds."""
        for definition in fields(self):
            min_value, max_value = _BOUNDS[definition.name]
            validated = validate_dimension(
                getattr(self, definition.name),
                field_name=definition.name,
                min_value=min_value,
                max_value=max_value,
            )
            object.__setattr__(self, definition.name, validated)

    @classmethod
    def from_environment(
        cls,
        environ: Mapping[str, str] | None = None,
        **overrides: int,
    ) -> AnalysisConfig:
        """
        Build a config honouring the ``REGIONAL_CONTROL_THREADS`` hint.

        :param environ: Mapping to read from (defaults to ``os.environ``).
        :param overrides: Field values that take precedence over the defaults.
        :raises InvalidConfigurationError: If the variable is not an integer.
        """
        source = os.environ if environ is None else environ
        raw = source.get(THREADS_ENV_VAR)
        if raw is not None and "workers" not in overrides:
            try:
                overrides["workers"] = int(raw)
            except ValueError as exc:
                raise InvalidConfigurationError(
                    f"{THREADS_ENV_VAR} must be an integer, got {raw!r}"
                ) from exc
        return cls(**overrides)


DEFAULT_CONFIG: Final[AnalysisConfig] = AnalysisConfig()


def resolve_config(config: AnalysisConfig | None) -> AnalysisConfig:
    """Return ``config`` or the module default."""
    return DEFAULT_CONFIG if config is None else config


__all__ = ["AnalysisConfig", "DEFAULT_CONFIG", "THREADS_ENV_VAR", "resolve_config"]
