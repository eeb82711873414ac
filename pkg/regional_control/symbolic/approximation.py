"""k-approximation SFTs of the trace and their transitivity and mixing."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..api.config import AnalysisConfig
from ..core import RegionWord, Rule
from ..graphs import Digraph, as_digraph, build_graph, graph_period, is_strongly_connected
from ..types import SupportsDigraph
from ..utils import get_logger
from .trace import BlockArray, TraceBlockLanguage, trace_blocks

LOGGER = get_logger(__name__)


@dataclass(frozen=True, slots=True, eq=False)
class ApproximationSft:
    """
    Vertex-shift presentation of the largest SFT whose ``k``-blocks are the allowed ones.

    For ``k >= 2`` the vertices are the ``(k - 1)``-blocks occurring in an
    allowed block and ``u -> v`` whenever ``u`` and ``v`` overlap in ``k - 2``
    rows and their union is allowed. For ``k = 1`` every allowed symbol may
    follow every other, so the graph is complete on the allowed symbols.

    Attributes:
        language: The allowed blocks.
        vertices: ``(V, max(k - 1, 1))`` array of row codes per vertex.
        digraph: The derived graph on vertex ids.
    """

    language: TraceBlockLanguage
    vertices: BlockArray
    digraph: Digraph

    @property
    def n(self) -> int:
        return self.language.n

    @property
    def k(self) -> int:
        return self.language.k

    def to_digraph(self) -> Digraph:
        return self.digraph

    def vertex_label(self, vertex: int) -> tuple[RegionWord, ...]:
        return tuple(RegionWord.from_code(int(code), self.n) for code in self.vertices[vertex])

    def labelled_edges(self) -> set[tuple[tuple[int, ...], tuple[int, ...]]]:
        """Edges as pairs of row-code tuples."""
        labels = [tuple(int(code) for code in row) for row in self.vertices.tolist()]
        return {
            (labels[source], labels[target])
            for source, target in zip(self.digraph.sources.tolist(), self.digraph.targets.tolist())
        }


@dataclass(frozen=True, slots=True)
class TransitivityVerdict:
    """
    Transitivity in the whole-graph and the essential-graph sense.

    ``essential_empty`` marks an empty subshift: no vertex lies on a
    bi-infinite walk.
    """

    strict: bool
    essential: bool
    essential_empty: bool
    essential_vertex_count: int


@dataclass(frozen=True, slots=True)
class MixingVerdict:
    """Mixing of the essential graph; ``period`` is set when it is strongly connected."""

    mixing: bool
    period: int | None
    essential_empty: bool


@dataclass(frozen=True, slots=True)
class ApproximationComparison:
    """Edge-set comparison between the height-2 approximation and ``G_n``."""

    n: int
    equal: bool
    only_in_approximation: tuple[tuple[int, int], ...] = ()
    only_in_graph: tuple[tuple[int, int], ...] = ()

    def __bool__(self) -> bool:
        return self.equal


def k_approximation(lang: TraceBlockLanguage) -> ApproximationSft:
    """Build the derived graph of the ``k``-approximation of ``lang``."""
    rows = lang.rows
    if lang.k == 1:
        vertices = rows.copy()
        count = int(vertices.shape[0])
        ids = np.arange(count, dtype=np.int64)
        sources, targets = np.repeat(ids, count), np.tile(ids, count)
    else:
        ends = np.concatenate([rows[:, :-1], rows[:, 1:]], axis=0)
        vertices, inverse = np.unique(ends, axis=0, return_inverse=True)
        inverse = np.asarray(inverse, dtype=np.int64).reshape(-1)
        count = int(vertices.shape[0])
        sources, targets = inverse[: rows.shape[0]], inverse[rows.shape[0] :]
    vertices.setflags(write=False)
    LOGGER.debug("k=%d approximation: %d vertices from %d blocks", lang.k, count, len(lang))
    return ApproximationSft(lang, vertices, Digraph(count, sources, targets))


def essential_subgraph(graph: Digraph | SupportsDigraph) -> tuple[Digraph, npt.NDArray[np.int64]]:
    """
    Remove vertices of in-degree or out-degree 0 until none remain.

    Returns the induced subgraph on the surviving vertices and their original ids.
    """
    digraph = as_digraph(graph)
    keep = np.ones(digraph.vertex_count, dtype=bool)
    while True:
        alive = keep[digraph.sources] & keep[digraph.targets]
        out_degree = np.bincount(digraph.sources[alive], minlength=digraph.vertex_count)
        in_degree = np.bincount(digraph.targets[alive], minlength=digraph.vertex_count)
        pruned = keep & (out_degree > 0) & (in_degree > 0)
        if np.array_equal(pruned, keep):
            return digraph.induced(keep)
        keep = pruned


def sft_is_transitive(sft: ApproximationSft | Digraph | SupportsDigraph) -> TransitivityVerdict:
    """Report strict (whole graph) and essential transitivity."""
    digraph = as_digraph(sft)
    essential, kept = essential_subgraph(digraph)
    empty = kept.size == 0
    return TransitivityVerdict(
        strict=is_strongly_connected(digraph),
        essential=not empty and is_strongly_connected(essential),
        essential_empty=empty,
        essential_vertex_count=int(kept.size),
    )


def sft_is_mixing(sft: ApproximationSft | Digraph | SupportsDigraph) -> MixingVerdict:
    """Mixing: the essential graph is strongly connected with period 1."""
    essential, kept = essential_subgraph(sft)
    if kept.size == 0:
        return MixingVerdict(False, None, True)
    if not is_strongly_connected(essential):
        return MixingVerdict(False, None, False)
    period = graph_period(essential)
    return MixingVerdict(period == 1, period, False)


def approximation_equals_graph(
    rule: Rule,
    n: int,
    *,
    config: AnalysisConfig | None = None,
) -> ApproximationComparison:
    """
    Compare the edges of the height-2 approximation with the deduplicated edges of ``G_n``.

    A height-2 block exists exactly when some boundary context produces the
    transition, so the sets coincide for every rule.
    """
    language = trace_blocks(rule, n, 2, config=config)
    approximation = {(int(a), int(b)) for a, b in language.rows.tolist()}
    transitions = build_graph(rule, n, config=config).to_digraph().edge_set()
    return ApproximationComparison(
        n=n,
        equal=approximation == transitions,
        only_in_approximation=tuple(sorted(approximation - transitions)),
        only_in_graph=tuple(sorted(transitions - approximation)),
    )


__all__ = [
    "ApproximationSft",
    "TransitivityVerdict",
    "MixingVerdict",
    "ApproximationComparison",
    "k_approximation",
    "essential_subgraph",
    "sft_is_transitive",
    "sft_is_mixing",
    "approximation_equals_graph",
]
