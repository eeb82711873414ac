"""Trace subshifts, their block languages and finite-type approximations."""

from .approximation import (
    ApproximationComparison,
    ApproximationSft,
    MixingVerdict,
    TransitivityVerdict,
    approximation_equals_graph,
    essential_subgraph,
    k_approximation,
    sft_is_mixing,
    sft_is_transitive,
)
from .trace import TraceBlockLanguage, trace_blocks, trace_reach

__all__ = [
    "TraceBlockLanguage",
    "ApproximationSft",
    "TransitivityVerdict",
    "MixingVerdict",
    "ApproximationComparison",
    "trace_blocks",
    "trace_reach",
    "k_approximation",
    "essential_subgraph",
    "sft_is_transitive",
    "sft_is_mixing",
    "approximation_equals_graph",
]
