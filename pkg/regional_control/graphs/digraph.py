"""Deduplicated edge-list digraphs with a sparse adjacency view."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from ..types import SupportsDigraph

IndexArray = npt.NDArray[np.int64]


@dataclass(frozen=True, slots=True, eq=False)
class Digraph:
    """
    Directed graph on ``[0, vertex_count)`` without parallel edges.

    Edges are stored sorted by ``(source, target)``; the Boolean adjacency
    matrix is exposed as a ``scipy.sparse.csr_matrix`` for the csgraph
    routines.
    """

    vertex_count: int
    sources: IndexArray
    targets: IndexArray
    _adjacency: csr_matrix = field(init=False, repr=False)

    def __post_init__(self) -> None:
        sources = np.asarray(self.sources, dtype=np.int64)
        targets = np.asarray(self.targets, dtype=np.int64)
        keys = np.unique(sources * self.vertex_count + targets)
        sources = keys // self.vertex_count if self.vertex_count else keys
        targets = keys % self.vertex_count if self.vertex_count else keys
        sources.setflags(write=False)
        targets.setflags(write=False)
        object.__setattr__(self, "sources", sources)
        object.__setattr__(self, "targets", targets)
        adjacency = csr_matrix(
            (np.ones(keys.size, dtype=np.int8), (sources, targets)),
            shape=(self.vertex_count, self.vertex_count),
        )
        object.__setattr__(self, "_adjacency", adjacency)

    @property
    def edge_count(self) -> int:
        return int(self.sources.size)

    @property
    def adjacency(self) -> csr_matrix:
        return self._adjacency

    def to_digraph(self) -> Digraph:
        return self

    def successors(self, vertex: int) -> IndexArray:
        start, stop = self._adjacency.indptr[vertex], self._adjacency.indptr[vertex + 1]
        return np.asarray(self._adjacency.indices[start:stop], dtype=np.int64)

    def out_degrees(self) -> IndexArray:
        return np.bincount(self.sources, minlength=self.vertex_count).astype(np.int64)

    def in_degrees(self) -> IndexArray:
        return np.bincount(self.targets, minlength=self.vertex_count).astype(np.int64)

    def edge_set(self) -> set[tuple[int, int]]:
        return set(zip(self.sources.tolist(), self.targets.tolist()))

    def induced(self, keep: npt.NDArray[np.bool_]) -> tuple[Digraph, IndexArray]:
        """
        Return the subgraph induced by ``keep`` and the original vertex ids.

        Vertices are renumbered in increasing original order.
        """
        kept = np.flatnonzero(keep).astype(np.int64)
        relabel = np.full(self.vertex_count, -1, dtype=np.int64)
        relabel[kept] = np.arange(kept.size, dtype=np.int64)
        mask = keep[self.sources] & keep[self.targets]
        return (
            Digraph(int(kept.size), relabel[self.sources[mask]], relabel[self.targets[mask]]),
            kept,
        )

    def bfs_depths(self, source: int) -> IndexArray:
        """Breadth-first distances from ``source``; unreachable vertices get ``-1``."""
        distances = shortest_path(
            self._adjacency, method="D", directed=True, unweighted=True, indices=source
        )
        return np.where(np.isinf(distances), -1, distances).astype(np.int64)

    @classmethod
    def from_edges(cls, vertex_count: int, edges: list[tuple[int, int]]) -> Digraph:
        """Build a digraph from explicit ``(source, target)`` pairs."""
        if not edges:
            empty = np.zeros(0, dtype=np.int64)
            return cls(vertex_count, empty, empty)
        pairs = np.asarray(edges, dtype=np.int64)
        return cls(vertex_count, pairs[:, 0], pairs[:, 1])


def as_digraph(graph: Digraph | SupportsDigraph) -> Digraph:
    """Return the deduplicated digraph behind ``graph``."""
    return graph if isinstance(graph, Digraph) else graph.to_digraph()


__all__ = ["Digraph", "IndexArray", "as_digraph"]
