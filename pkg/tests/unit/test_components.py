"""Tests for strongly connected components and the controllability verdict."""

from __future__ import annotations

from collections.abc import Callable

from regional_control.core import Rule
from regional_control.graphs import (
    Digraph,
    build_graph,
    is_regionally_controllable,
    scc,
    unreachable_pair,
)


def test_components_are_numbered_by_smallest_vertex() -> None:
    """Vertex 0 lies in component 0 and ids follow first appearance."""
    result = scc(Digraph.from_edges(4, [(3, 2), (2, 3), (0, 1)]))
    assert result.count == 3
    assert result.labels.tolist() == [0, 1, 2, 2]
    assert result.sizes == (1, 1, 2)
    assert result.condensation == ((0, 1),)
    assert result.sink_components() == (1, 2)
    assert result.members(2).tolist() == [2, 3]
    assert unreachable_pair(result) == (1, 0)


def test_identity_rule_has_one_component_per_word(rule: Callable[[int], Rule]) -> None:
    """Rule 204 never changes the region, so every vertex is its own component."""
    for n in range(1, 5):
        verdict = is_regionally_controllable(build_graph(rule(204), n))
        assert not verdict.controllable
        assert verdict.scc_count == 2**n
    witness = is_regionally_controllable(build_graph(rule(204), 1)).witness
    assert witness is not None
    assert (str(witness[0]), str(witness[1])) == ("0", "1")


def test_garden_of_eden_words_break_controllability(rule: Callable[[int], Rule]) -> None:
    """Under rule 0 only 0…0 has a predecessor."""
    graph = build_graph(rule(0), 2)
    result = scc(graph)
    assert result.count == 4
    assert result.condensation == ((1, 0), (2, 0), (3, 0))
    assert result.sink_components() == (0,)
    verdict = is_regionally_controllable(graph)
    assert verdict.witness is not None
    assert [str(word) for word in verdict.witness] == ["00", "01"]


def test_rule90_is_regionally_controllable(rule: Callable[[int], Rule]) -> None:
    """Every region length up to six is a single component for rule 90."""
    for n in range(1, 7):
        verdict = is_regionally_controllable(build_graph(rule(90), n))
        assert verdict.controllable and verdict.scc_count == 1
        assert verdict.witness is None

