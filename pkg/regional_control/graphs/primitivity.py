"""Graph period, primitivity and the index of primitivity."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..api.config import AnalysisConfig, resolve_config
from ..exceptions import PreconditionError
from ..types import SupportsDigraph
from ..utils import get_logger
from ..validation import ensure_within_cap, validate_dimension
from .components import scc
from .digraph import Digraph, as_digraph

LOGGER = get_logger(__name__)


@dataclass(frozen=True, slots=True)
class PrimitivityResult:
    """
    Primitivity of the Boolean adjacency matrix of a digraph.

    Attributes:
        strongly_connected: Whether the graph is irreducible.
        period: Gcd of cycle lengths; ``None`` unless strongly connected.
        primitive: ``strongly_connected and period == 1``.
        index: Least ``M`` with an all-positive ``M``-th Boolean power.
        index_capped: ``True`` when a primitive graph's index was not computed
            because it exceeds ``index_cap`` or the graph exceeds
            ``index_vertex_cap``.
    """

    strongly_connected: bool
    period: int | None
    primitive: bool
    index: int | None = None
    index_capped: bool = False


def wielandt_bound(vertex_count: int) -> int:
    """Upper bound ``(V - 1)^2 + 1`` on the index of a primitive ``V x V`` matrix."""
    return (vertex_count - 1) ** 2 + 1


def is_strongly_connected(graph: Digraph | SupportsDigraph) -> bool:
    """Irreducibility: one component carrying at least one edge."""
    digraph = as_digraph(graph)
    if digraph.vertex_count == 0 or digraph.edge_count == 0:
        return False
    return scc(digraph).count == 1


def _period(digraph: Digraph) -> int:
    depths = digraph.bfs_depths(0)
    gaps = np.abs(depths[digraph.sources] + 1 - depths[digraph.targets])
    return int(np.gcd.reduce(gaps))


def graph_period(graph: Digraph | SupportsDigraph) -> int:
    """
    Gcd of all cycle lengths from a breadth-first layering.

    Tree edges contribute ``0`` to the gcd, so every edge can be folded in.

    :raises PreconditionError: If the graph is not strongly connected.
    """
    digraph = as_digraph(graph)
    if not is_strongly_connected(digraph):
        raise PreconditionError("graph period is defined only for strongly connected graphs")
    return _period(digraph)


def _packed_identity(vertex_count: int) -> npt.NDArray[np.uint8]:
    return np.packbits(np.eye(vertex_count, dtype=bool), axis=1)


def primitivity_index(
    graph: Digraph | SupportsDigraph,
    cap: int | None = None,
    *,
    config: AnalysisConfig | None = None,
) -> int | None:
    """
    Least ``M <= cap`` such that every vertex reaches every vertex in exactly ``M`` steps.

    Row ``v`` of the packed bit matrix holds the vertices reachable from ``v``
    in exactly ``M`` steps; the next power ORs together the rows of ``v``'s
    successors.

    :param cap: Largest ``M`` explored; defaults to ``config.index_cap``.
    :returns: ``M``, or ``None`` when ``M > cap``.
    :raises PreconditionError: If the graph is not primitive.
    :raises ResourceLimitError: If the graph exceeds ``index_vertex_cap``.
    """
    resolved = resolve_config(config)
    limit = resolved.index_cap if cap is None else validate_dimension(cap, field_name="cap")
    digraph = as_digraph(graph)
    if not is_strongly_connected(digraph) or _period(digraph) != 1:
        raise PreconditionError("index of primitivity requires a primitive graph")
    vertex_count = digraph.vertex_count
    ensure_within_cap(vertex_count, resolved.index_vertex_cap, limit_name="index_vertex_cap")
    adjacency = digraph.adjacency
    starts = adjacency.indptr[:-1]
    indices = adjacency.indices
    full_row = np.packbits(np.ones(vertex_count, dtype=bool))
    rows = _packed_identity(vertex_count)
    for power in range(1, min(limit, wielandt_bound(vertex_count)) + 1):
        rows = np.bitwise_or.reduceat(rows[indices], starts, axis=0)
        if np.array_equal(rows, np.broadcast_to(full_row, rows.shape)):
            LOGGER.debug("Index of primitivity %d on %d vertices", power, vertex_count)
            return power
    return None


def is_primitive(
    graph: Digraph | SupportsDigraph,
    *,
    config: AnalysisConfig | None = None,
    with_index: bool = True,
) -> PrimitivityResult:
    """
    Decide primitivity and, when ``with_index`` is set, the index of primitivity.

    The index is skipped with ``index_capped=True`` if the graph has more than
    ``index_vertex_cap`` vertices or the index exceeds ``index_cap``.
    """
    resolved = resolve_config(config)
    digraph = as_digraph(graph)
    if not is_strongly_connected(digraph):
        return PrimitivityResult(False, None, False)
    period = _period(digraph)
    if period != 1:
        return PrimitivityResult(True, period, False)
    if not with_index:
        return PrimitivityResult(True, 1, True)
    if digraph.vertex_count > resolved.index_vertex_cap:
        LOGGER.warning(
            "Index of primitivity skipped: %d vertices exceed index_vertex_cap=%d",
            digraph.vertex_count,
            resolved.index_vertex_cap,
        )
        return PrimitivityResult(True, 1, True, None, True)
    index = primitivity_index(digraph, config=resolved)
    if index is None:
        LOGGER.warning("Index of primitivity exceeds index_cap=%d", resolved.index_cap)
        return PrimitivityResult(True, 1, True, None, True)
    return PrimitivityResult(True, 1, True, index)


def uniform_steering_time(
    graph: Digraph | SupportsDigraph,
    *,
    config: AnalysisConfig | None = None,
) -> int | None:
    """
    Time ``M`` after which every word can be steered to every word in exactly ``M`` steps.

    This is the index of primitivity; ``None`` when it exceeds ``index_cap``.

    :raises PreconditionError: If the graph is not primitive.
    """
    return primitivity_index(graph, config=config)


__all__ = [
    "PrimitivityResult",
    "wielandt_bound",
    "is_strongly_connected",
    "graph_period",
    "is_primitive",
    "primitivity_index",
    "uniform_steering_time",
]
