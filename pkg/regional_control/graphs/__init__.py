"""Transition graphs, their strong components, primitivity and control synthesis."""

from .components import (
    ControllabilityVerdict,
    SccResult,
    is_regionally_controllable,
    scc,
    unreachable_pair,
)
from .digraph import Digraph, as_digraph
from .primitivity import (
    PrimitivityResult,
    graph_period,
    is_primitive,
    is_strongly_connected,
    primitivity_index,
    uniform_steering_time,
    wielandt_bound,
)
from .sweep import SweepEntry, SweepReport, analyze_graph, sweep
from .synthesis import ControlPlan, synthesize_control, synthesize_control_exact_time
from .transition_graph import TransitionGraph, build_graph

__all__ = [
    "Digraph",
    "TransitionGraph",
    "SccResult",
    "ControllabilityVerdict",
    "PrimitivityResult",
    "ControlPlan",
    "SweepEntry",
    "SweepReport",
    "analyze_graph",
    "as_digraph",
    "build_graph",
    "graph_period",
    "is_primitive",
    "is_regionally_controllable",
    "is_strongly_connected",
    "primitivity_index",
    "scc",
    "sweep",
    "synthesize_control",
    "synthesize_control_exact_time",
    "uniform_steering_time",
    "unreachable_pair",
    "wielandt_bound",
]
