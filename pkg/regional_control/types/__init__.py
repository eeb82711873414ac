from .graphs import SupportsDigraph

__all__ = ["SupportsDigraph"]
