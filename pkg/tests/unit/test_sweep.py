"""Tests for per-n sweeps and their finite-level summaries."""

from __future__ import annotations

from collections.abc import Callable

import pytest

from regional_control.api.config import AnalysisConfig
from regional_control.core import Rule
from regional_control.exceptions import InvalidConfigurationError, ResourceLimitError
from regional_control.graphs import analyze_graph, build_graph, sweep


def test_identity_sweep_counts_components(rule: Callable[[int], Rule]) -> None:
    """Rule 204 has 2**n components at every level and no chain transitivity."""
    report = sweep(rule(204), 1, 4)
    assert [entry.scc_count for entry in report.entries] == [2, 4, 8, 16]
    assert not any(entry.regionally_controllable for entry in report.entries)
    assert not report.chain_transitive_supported
    assert not report.chain_mixing_supported
    first = report.entries[0].witness
    assert first is not None and (str(first[0]), str(first[1])) == ("0", "1")


def test_shift_sweep_supports_chain_mixing(rule: Callable[[int], Rule]) -> None:
    """Rule 170 is primitive at every level with index n."""
    report = sweep(rule(170), 1, 4)
    assert [entry.primitivity_index for entry in report.entries] == [1, 2, 3, 4]
    assert [entry.period for entry in report.entries] == [1, 1, 1, 1]
    assert report.chain_transitive_supported and report.chain_mixing_supported
    assert report.support_label == "supported up to n_max=4"
    assert report.rule_name == "wolfram:170"


def test_sweep_is_ordered_under_threads(rule: Callable[[int], Rule]) -> None:
    """Levels come back in increasing n whatever the worker count."""
    report = sweep(rule(90), 1, 6, config=AnalysisConfig(workers=3))
    assert [entry.n for entry in report.entries] == [1, 2, 3, 4, 5, 6]
    assert all(entry.regionally_controllable for entry in report.entries)
    assert [entry.vertex_count for entry in report.entries] == [2, 4, 8, 16, 32, 64]


def test_sweep_range_validation(rule: Callable[[int], Rule]) -> None:
    """Empty ranges and ranges beyond n_cap are rejected."""
    with pytest.raises(InvalidConfigurationError, match="n_max must be >= n_min"):
        sweep(rule(90), 4, 2)
    with pytest.raises(InvalidConfigurationError):
        sweep(rule(90), 0, 2)
    with pytest.raises(ResourceLimitError):
        sweep(rule(90), 1, 17)


def test_analyze_graph_without_index(rule: Callable[[int], Rule]) -> None:
    """Skipping the index keeps the primitivity verdict."""
    entry = analyze_graph(build_graph(rule(170), 3), with_index=False)
    assert entry.primitive and entry.primitivity_index is None and not entry.index_capped
