"""Structural protocols shared by the graph analyses."""

from __future__ import annotations

from typing import TYPE_CHECKING, Protocol, runtime_checkable

if TYPE_CHECKING:
    from ..graphs.digraph import Digraph


@runtime_checkable
class SupportsDigraph(Protocol):
    """Anything that can present itself as a deduplicated :class:`Digraph`."""

    def to_digraph(self) -> Digraph: ...


__all__ = ["SupportsDigraph"]
