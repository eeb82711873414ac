from ._version import __version__
from .api import AnalysisConfig
from .core import RegionWord, Rule, evolve_controlled, parse_rule, wolfram_rule
from .graphs import (
    build_graph,
    is_primitive,
    is_regionally_controllable,
    primitivity_index,
    synthesize_control,
)

__all__ = [
    "__version__",
    "AnalysisConfig",
    "RegionWord",
    "Rule",
    "build_graph",
    "evolve_controlled",
    "is_primitive",
    "is_regionally_controllable",
    "parse_rule",
    "primitivity_index",
    "synthesize_control",
    "wolfram_rule",
]
