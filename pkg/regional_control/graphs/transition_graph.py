"""The boundary-controlled transition graph of a rule on a region of ``n`` cells."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import numpy.typing as npt

from ..api.config import AnalysisConfig, resolve_config
from ..core import ControlPair, RegionWord, Rule, image_codes
from ..exceptions import InvalidWordError
from ..utils import get_logger, run_chunked, width_mask
from ..validation import ensure_within_cap, validate_dimension
from .digraph import Digraph

LOGGER = get_logger(__name__)


@dataclass(frozen=True, slots=True, eq=False)
class TransitionGraph:
    """
    Labeled digraph on ``A^n``: ``successors[v, c]`` is the region word
    reached from ``v`` under the control pair of index ``c``.

    The deduplicated edge set (the Boolean adjacency matrix of the graph) is
    derived on demand by :meth:`to_digraph`; the control labels stay in
    ``successors`` for synthesis.
    """

    rule: Rule
    n: int
    successors: npt.NDArray[np.int64]
    _digraph: Digraph | None = field(default=None, init=False, repr=False)

    @property
    def radius(self) -> int:
        return self.rule.radius

    @property
    def rule_name(self) -> str:
        return self.rule.name

    @property
    def vertex_count(self) -> int:
        return 1 << self.n

    @property
    def control_count(self) -> int:
        return 1 << (2 * self.rule.radius)

    def successor(self, vertex: int, control: int) -> int:
        return int(self.successors[vertex, control])

    def word(self, vertex: int) -> RegionWord:
        return RegionWord.from_code(vertex, self.n)

    def vertex(self, word: RegionWord | str) -> int:
        """
        Return the vertex id of a region word.

        :raises InvalidWordError: If the word does not have length ``n``.
        """
        candidate = RegionWord.from_text(word) if isinstance(word, str) else word
        if candidate.length != self.n:
            raise InvalidWordError(f"word {candidate} must have length {self.n}")
        return candidate.code

    def control(self, index: int) -> ControlPair:
        return ControlPair.from_index(index, self.rule.radius)

    def to_digraph(self) -> Digraph:
        """Deduplicated edge set, built once and cached."""
        if self._digraph is None:
            sources = np.repeat(
                np.arange(self.vertex_count, dtype=np.int64), self.control_count
            )
            digraph = Digraph(self.vertex_count, sources, self.successors.reshape(-1))
            object.__setattr__(self, "_digraph", digraph)
            return digraph
        return self._digraph


def build_graph(rule: Rule, n: int, *, config: AnalysisConfig | None = None) -> TransitionGraph:
    """
    Build ``G_n(F)`` by applying the rule to ``x · v · y`` for every vertex and control.

    Vertex ranges are filled concurrently when ``config.workers > 1``.

    :raises InvalidConfigurationError: If ``n < 1``.
    :raises ResourceLimitError: If ``n`` exceeds ``n_cap`` or the successor
        table exceeds ``graph_entry_cap``.
    """
    resolved = resolve_config(config)
    validate_dimension(n, field_name="n", min_value=1)
    ensure_within_cap(n, resolved.n_cap, limit_name="n_cap")
    r = rule.radius
    controls = 1 << (2 * r)
    ensure_within_cap((1 << n) * controls, resolved.graph_entry_cap, limit_name="graph_entry_cap")
    table = rule.table_array
    control_index = np.arange(controls, dtype=np.int64)
    left = (control_index >> r) << (n + r)
    right = control_index & width_mask(r)

    def _fill(start: int, stop: int) -> npt.NDArray[np.int64]:
        vertices = np.arange(start, stop, dtype=np.int64)[:, None]
        padded = left[None, :] | (vertices << r) | right[None, :]
        return image_codes(table, r, padded, n + 2 * r)

    parts = run_chunked(_fill, 1 << n, workers=resolved.workers)
    successors = np.concatenate(parts, axis=0)
    successors.setflags(write=False)
    LOGGER.debug("Built G_%d(%s): %d vertices x %d controls", n, rule.name, 1 << n, controls)
    return TransitionGraph(rule, n, successors)


__all__ = ["TransitionGraph", "build_graph"]
