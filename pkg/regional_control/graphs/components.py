"""Strongly connected components and the regional-controllability verdict."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import connected_components

from ..core import RegionWord
from ..types import SupportsDigraph
from ..utils import get_logger
from .digraph import Digraph, IndexArray, as_digraph
from .transition_graph import TransitionGraph

LOGGER = get_logger(__name__)


@dataclass(frozen=True, slots=True, eq=False)
class SccResult:
    """
    Partition of the vertices into strongly connected components.

    Component ids are numbered in order of each component's smallest vertex,
    so vertex ``0`` always lies in component ``0``.

    Attributes:
        labels: Component id per vertex.
        count: Number of components.
        sizes: Vertices per component.
        condensation: Sorted edges ``(a, b)`` between distinct components;
            the condensation is acyclic.
    """

    labels: IndexArray
    count: int
    sizes: tuple[int, ...]
    condensation: tuple[tuple[int, int], ...]

    def members(self, component: int) -> IndexArray:
        return np.flatnonzero(self.labels == component).astype(np.int64)

    def sink_components(self) -> tuple[int, ...]:
        """Components without outgoing condensation edges."""
        exits = {source for source, _ in self.condensation}
        return tuple(component for component in range(self.count) if component not in exits)


@dataclass(frozen=True, slots=True)
class ControllabilityVerdict:
    """
    Regional-controllability verdict for one transition graph.

    ``witness`` is ``(v, u)`` with ``u`` unreachable from ``v`` whenever the
    verdict is negative.
    """

    n: int
    controllable: bool
    scc_count: int
    witness: tuple[RegionWord, RegionWord] | None = None


def scc(graph: Digraph | SupportsDigraph) -> SccResult:
    """
    Compute the exact SCC partition and its condensation.

    Uses the iterative strong-components routine of ``scipy.sparse.csgraph``,
    so 2^16-vertex graphs never touch the Python call stack.
    """
    digraph = as_digraph(graph)
    if digraph.vertex_count == 0:
        return SccResult(np.zeros(0, dtype=np.int64), 0, (), ())
    count, raw = connected_components(digraph.adjacency, directed=True, connection="strong")
    _, first_vertex = np.unique(raw, return_index=True)
    order = np.argsort(first_vertex, kind="stable")
    relabel = np.empty(count, dtype=np.int64)
    relabel[order] = np.arange(count, dtype=np.int64)
    labels = relabel[raw]
    labels.setflags(write=False)
    sizes = tuple(int(size) for size in np.bincount(labels, minlength=count))
    source_labels = labels[digraph.sources]
    target_labels = labels[digraph.targets]
    crossing = source_labels != target_labels
    keys = np.unique(source_labels[crossing] * count + target_labels[crossing])
    condensation = tuple((int(key // count), int(key % count)) for key in keys)
    LOGGER.debug("SCC: %d vertices in %d components", digraph.vertex_count, count)
    return SccResult(labels, int(count), sizes, condensation)


def unreachable_pair(result: SccResult) -> tuple[int, int] | None:
    """
    Return ``(v, u)`` with ``u`` unreachable from ``v``, or ``None`` for one component.

    ``v`` is the smallest vertex of the first sink component and ``u`` the
    smallest vertex outside it.
    """
    if result.count <= 1:
        return None
    sink = result.sink_components()[0]
    inside = result.labels == sink
    return int(np.argmax(inside)), int(np.argmax(~inside))


def is_regionally_controllable(graph: TransitionGraph) -> ControllabilityVerdict:
    """
    Decide regional controllability: the whole vertex set must be one SCC.

    Vertices with in-degree 0 (region words no control sequence can produce)
    therefore force a negative verdict.
    """
    result = scc(graph)
    pair = unreachable_pair(result)
    if pair is None:
        return ControllabilityVerdict(graph.n, True, result.count)
    source, target = pair
    return ControllabilityVerdict(
        graph.n,
        False,
        result.count,
        (graph.word(source), graph.word(target)),
    )


__all__ = [
    "SccResult",
    "ControllabilityVerdict",
    "scc",
    "unreachable_pair",
    "is_regionally_controllable",
]
