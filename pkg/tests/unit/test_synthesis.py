"""Tests for shortest and exact-time boundary-control synthesis."""

from __future__ import annotations

from collections import deque
from collections.abc import Callable

import pytest

from regional_control.api.config import AnalysisConfig
from regional_control.core import RegionWord, Rule
from regional_control.exceptions import InvalidWordError, ResourceLimitError
from regional_control.graphs import (
    TransitionGraph,
    build_graph,
    synthesize_control,
    synthesize_control_exact_time,
)


def _bfs_distance(graph: TransitionGraph, source: int, target: int) -> int | None:
    """Reference breadth-first distance over the successor table."""
    distance = {source: 0}
    queue = deque([source])
    while queue:
        vertex = queue.popleft()
        for index in range(graph.control_count):
            nxt = graph.successor(vertex, index)
            if nxt not in distance:
                distance[nxt] = distance[vertex] + 1
                queue.append(nxt)
    return distance.get(target)


def test_rule90_reaches_zero_within_three_steps(rule: Callable[[int], Rule]) -> None:
    """The shortest plan from 011100 to 000000 replays to the target in at most three steps."""
    graph = build_graph(rule(90), 6)
    plan = synthesize_control(graph, "011100", "000000")
    assert plan is not None
    assert plan.horizon <= 3
    assert plan.horizon == _bfs_distance(graph, 0b011100, 0)
    assert plan.replay(rule(90)).final == RegionWord.zeros(6)


def test_plan_is_empty_for_identical_words(rule: Callable[[int], Rule]) -> None:
    """Steering a word to itself needs no control."""
    plan = synthesize_control(build_graph(rule(30), 3), "101", "101")
    assert plan is not None and plan.horizon == 0 and plan.steps == ()


def test_unreachable_targets_return_none(rule: Callable[[int], Rule]) -> None:
    """Identity and the null rule leave most targets unreachable."""
    assert synthesize_control(build_graph(rule(204), 2), "01", "10") is None
    assert synthesize_control(build_graph(rule(0), 2), "00", "01") is None


def test_shortest_plans_match_reference_distances(rule: Callable[[int], Rule]) -> None:
    """Every pair of rule 110 at n=4 gets a minimal plan or None exactly when unreachable."""
    graph = build_graph(rule(110), 4)
    for source in range(graph.vertex_count):
        for target in range(graph.vertex_count):
            plan = synthesize_control(graph, graph.word(source), graph.word(target))
            expected = _bfs_distance(graph, source, target)
            if expected is None:
                assert plan is None
                continue
            assert plan is not None and plan.horizon == expected
            assert plan.replay(rule(110)).final == graph.word(target)


def test_exact_time_plan_injects_ones(rule: Callable[[int], Rule]) -> None:
    """Rule 170 fills 000 with ones through the right control in exactly three steps."""
    graph = build_graph(rule(170), 3)
    plan = synthesize_control_exact_time(graph, "000", "111", 3)
    assert plan is not None and plan.horizon == 3
    assert [str(step) for step in plan.steps] == ["(0,1)", "(0,1)", "(0,1)"]
    assert [str(word) for word in plan.replay(rule(170)).words] == ["000", "001", "011", "111"]


def test_exact_time_without_a_path(rule: Callable[[int], Rule]) -> None:
    """Two shifts cannot fill three cells; zero steps only reach the start."""
    graph = build_graph(rule(170), 3)
    assert synthesize_control_exact_time(graph, "000", "111", 2) is None
    assert synthesize_control_exact_time(graph, "000", "111", 0) is None
    empty = synthesize_control_exact_time(graph, "010", "010", 0)
    assert empty is not None and empty.horizon == 0


def test_exact_time_longer_than_shortest(rule: Callable[[int], Rule]) -> None:
    """Plans of a prescribed length replay to the target at exactly that length."""
    graph = build_graph(rule(90), 4)
    plan = synthesize_control_exact_time(graph, "0110", "1001", 7)
    assert plan is not None and plan.horizon == 7
    assert str(plan.replay(rule(90)).final) == "1001"


def test_synthesis_validation(rule: Callable[[int], Rule]) -> None:
    """Words must match n and T must respect horizon_cap."""
    graph = build_graph(rule(170), 3)
    with pytest.raises(InvalidWordError):
        synthesize_control(graph, "00", "111")
    with pytest.raises(ResourceLimitError, match="horizon_cap"):
        synthesize_control_exact_time(
            graph, "000", "111", 3, config=AnalysisConfig(horizon_cap=2)
        )
