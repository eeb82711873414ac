"""Boolean cellular automata: rules, words and exact evolution."""

from .evolution import (
    Trajectory,
    TrajectoryRow,
    evolve_controlled,
    evolve_free,
    replay_words,
    step_controlled,
)
from .kernel import evolve_codes, image_codes, window_codes
from .rules import (
    Rule,
    apply_local,
    check_eventually_periodic,
    check_nilpotent_bounded,
    compose_rule,
    identity_table,
    parse_rule,
    rule_to_spec,
    widen_table,
    wolfram_rule,
)
from .words import ControlPair, RegionWord, as_region_word, null_control

__all__ = [
    "Rule",
    "RegionWord",
    "ControlPair",
    "Trajectory",
    "TrajectoryRow",
    "apply_local",
    "as_region_word",
    "check_eventually_periodic",
    "check_nilpotent_bounded",
    "compose_rule",
    "evolve_codes",
    "evolve_controlled",
    "evolve_free",
    "identity_table",
    "image_codes",
    "null_control",
    "parse_rule",
    "replay_words",
    "rule_to_spec",
    "step_controlled",
    "widen_table",
    "window_codes",
    "wolfram_rule",
]
