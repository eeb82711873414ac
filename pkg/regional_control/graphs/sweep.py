"""Per-``n`` controllability and primitivity evidence for one rule."""

from __future__ import annotations

from dataclasses import dataclass

from ..api.config import AnalysisConfig, resolve_config
from ..core import RegionWord, Rule
from ..exceptions import InvalidConfigurationError
from ..utils import get_logger, map_items
from ..validation import ensure_within_cap, validate_dimension
from .components import scc, unreachable_pair
from .primitivity import is_primitive
from .transition_graph import TransitionGraph, build_graph

LOGGER = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class SweepEntry:
    """Verdicts for ``G_n`` at a single ``n``."""

    n: int
    vertex_count: int
    scc_count: int
    regionally_controllable: bool
    period: int | None
    primitive: bool
    primitivity_index: int | None
    index_capped: bool
    witness: tuple[RegionWord, RegionWord] | None = None


@dataclass(frozen=True, slots=True)
class SweepReport:
    """
    Finite-level evidence for chain transitivity and chain mixing.

    The two flags say every ``n`` in ``[n_min, n_max]`` passed; they support
    the all-``n`` properties only up to ``n_max`` and never prove them.
    """

    rule_name: str
    n_min: int
    n_max: int
    entries: tuple[SweepEntry, ...]

    @property
    def chain_transitive_supported(self) -> bool:
        return all(entry.regionally_controllable for entry in self.entries)

    @property
    def chain_mixing_supported(self) -> bool:
        return all(entry.primitive for entry in self.entries)

    @property
    def support_label(self) -> str:
        return f"supported up to n_max={self.n_max}"


def analyze_graph(
    graph: TransitionGraph,
    *,
    config: AnalysisConfig | None = None,
    with_index: bool = True,
) -> SweepEntry:
    """Collect the SCC, period and primitivity verdicts of one built graph."""
    components = scc(graph)
    pair = unreachable_pair(components)
    primitivity = is_primitive(graph, config=config, with_index=with_index)
    return SweepEntry(
        n=graph.n,
        vertex_count=graph.vertex_count,
        scc_count=components.count,
        regionally_controllable=pair is None,
        period=primitivity.period,
        primitive=primitivity.primitive,
        primitivity_index=primitivity.index,
        index_capped=primitivity.index_capped,
        witness=None if pair is None else (graph.word(pair[0]), graph.word(pair[1])),
    )


def sweep(
    rule: Rule,
    n_min: int,
    n_max: int,
    *,
    config: AnalysisConfig | None = None,
    with_index: bool = True,
) -> SweepReport:
    """
    Build and analyse ``G_n`` for every ``n`` in ``[n_min, n_max]``.

    Levels run concurrently when ``config.workers > 1``; resource errors from
    any level propagate.

    :raises InvalidConfigurationError: If the range is empty or starts below 1.
    :raises ResourceLimitError: If ``n_max`` exceeds ``n_cap``.
    """
    resolved = resolve_config(config)
    validate_dimension(n_min, field_name="n_min", min_value=1)
    validate_dimension(n_max, field_name="n_max", min_value=1)
    if n_max < n_min:
        raise InvalidConfigurationError(f"n_max must be >= n_min, got {n_min}..{n_max}")
    ensure_within_cap(n_max, resolved.n_cap, limit_name="n_cap")

    def _level(n: int) -> SweepEntry:
        graph = build_graph(rule, n, config=resolved)
        return analyze_graph(graph, config=resolved, with_index=with_index)

    entries = tuple(map_items(_level, list(range(n_min, n_max + 1)), workers=resolved.workers))
    LOGGER.debug("Swept %s over n=%d..%d", rule.name, n_min, n_max)
    return SweepReport(rule.name, n_min, n_max, entries)


__all__ = ["SweepEntry", "SweepReport", "analyze_graph", "sweep"]
