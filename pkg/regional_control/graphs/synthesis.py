"""Boundary-control synthesis on the transition graph."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..api.config import AnalysisConfig, resolve_config
from ..core import ControlPair, RegionWord, Rule, Trajectory, as_region_word, evolve_controlled
from ..utils import get_logger
from ..validation import ensure_within_cap, validate_dimension
from .transition_graph import TransitionGraph

LOGGER = get_logger(__name__)

WordLike = RegionWord | str


@dataclass(frozen=True, slots=True)
class ControlPlan:
    """
    Control sequence steering ``initial`` to ``target``.

    Replaying ``steps`` with :func:`evolve_controlled` from ``initial`` ends
    on ``target`` at row ``horizon``.
    """

    initial: RegionWord
    target: RegionWord
    steps: tuple[ControlPair, ...]

    @property
    def horizon(self) -> int:
        return len(self.steps)

    def replay(self, rule: Rule) -> Trajectory:
        return evolve_controlled(rule, self.initial, self.steps)


def _endpoints(graph: TransitionGraph, s0: WordLike, sd: WordLike) -> tuple[int, int]:
    return graph.vertex(as_region_word(s0)), graph.vertex(as_region_word(sd))


def _plan(graph: TransitionGraph, source: int, target: int, controls: list[int]) -> ControlPlan:
    return ControlPlan(
        graph.word(source),
        graph.word(target),
        tuple(graph.control(index) for index in controls),
    )


def synthesize_control(graph: TransitionGraph, s0: WordLike, sd: WordLike) -> ControlPlan | None:
    """
    Shortest control plan from ``s0`` to ``sd``, or ``None`` if ``sd`` is unreachable.

    Breadth-first search level by level; a vertex keeps the parent discovered
    first, scanning the frontier in discovery order and controls by
    increasing index.

    :raises InvalidWordError: If either word does not have length ``n``.
    """
    source, target = _endpoints(graph, s0, sd)
    if source == target:
        return _plan(graph, source, target, [])
    successors = graph.successors
    controls = graph.control_count
    parent = np.full(graph.vertex_count, -1, dtype=np.int64)
    via = np.full(graph.vertex_count, -1, dtype=np.int64)
    visited = np.zeros(graph.vertex_count, dtype=bool)
    visited[source] = True
    frontier = np.array([source], dtype=np.int64)
    depth = 0
    while frontier.size and not visited[target]:
        depth += 1
        reached = successors[frontier].reshape(-1)
        fresh = np.flatnonzero(~visited[reached])
        if not fresh.size:
            break
        vertices, first = np.unique(reached[fresh], return_index=True)
        order = fresh[first]
        parent[vertices] = frontier[order // controls]
        via[vertices] = order % controls
        visited[vertices] = True
        frontier = vertices[np.argsort(order, kind="stable")]
    if not visited[target]:
        LOGGER.debug("Word %s unreachable from %s", graph.word(target), graph.word(source))
        return None
    path: list[int] = []
    vertex = target
    while vertex != source:
        path.append(int(via[vertex]))
        vertex = int(parent[vertex])
    path.reverse()
    LOGGER.debug("Shortest plan of length %d found at depth %d", len(path), depth)
    return _plan(graph, source, target, path)


def _backward_layers(
    successors: npt.NDArray[np.int64], target: int, horizon: int
) -> list[npt.NDArray[np.bool_]]:
    layer = np.zeros(successors.shape[0], dtype=bool)
    layer[target] = True
    layers = [layer]
    for _ in range(horizon):
        layer = np.any(layer[successors], axis=1)
        layers.append(layer)
    layers.reverse()
    return layers


def synthesize_control_exact_time(
    graph: TransitionGraph,
    s0: WordLike,
    sd: WordLike,
    T: int,
    *,
    config: AnalysisConfig | None = None,
) -> ControlPlan | None:
    """
    Control plan of exactly ``T`` steps, or ``None`` when no length-``T`` path exists.

    ``layers[t]`` marks the vertices that reach ``sd`` in exactly ``T - t``
    steps; the forward pass takes the smallest control index staying inside
    the next layer.

    :raises ResourceLimitError: If ``T`` exceeds ``horizon_cap``.
    """
    resolved = resolve_config(config)
    validate_dimension(T, field_name="T")
    ensure_within_cap(T, resolved.horizon_cap, limit_name="horizon_cap")
    source, target = _endpoints(graph, s0, sd)
    layers = _backward_layers(graph.successors, target, T)
    if not layers[0][source]:
        return None
    controls: list[int] = []
    current = source
    for step in range(T):
        options = graph.successors[current]
        choice = int(np.argmax(layers[step + 1][options]))
        controls.append(choice)
        current = int(options[choice])
    return _plan(graph, source, target, controls)


__all__ = ["ControlPlan", "synthesize_control", "synthesize_control_exact_time"]
