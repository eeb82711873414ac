"""Tests for rule parsing, lookup, composition and bounded classification."""

from __future__ import annotations

from collections.abc import Callable

import numpy as np
import pytest

from regional_control.api.config import AnalysisConfig
from regional_control.core import (
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
from regional_control.exceptions import InvalidRuleError, ResourceLimitError


def test_wolfram_numbering_matches_neighborhood_lookup() -> None:
    """Entry i of a radius-1 table is bit i of the Wolfram code."""
    rule90 = wolfram_rule(90)
    assert apply_local(rule90, "100") == 1
    assert apply_local(rule90, "101") == 0
    assert apply_local(rule90, (0, 1, 0)) == 0
    assert rule90.wolfram_code == 90
    assert rule90.name == "wolfram:90"


def test_table_spec_lists_entries_from_all_ones_down() -> None:
    """table:r=1:<bits> is the Wolfram code written in binary."""
    assert parse_rule("table:r=1:01011010").table == wolfram_rule(90).table
    assert rule_to_spec(wolfram_rule(90)) == "wolfram:90"


def test_radius_two_spec_round_trips() -> None:
    """Specs of larger radius survive a parse/print cycle."""
    bits = "".join("1" if index % 3 == 0 else "0" for index in range(32))
    rule = parse_rule(f"table:r=2:{bits}")
    assert rule.radius == 2
    assert rule.wolfram_code is None
    assert rule_to_spec(rule) == f"table:r=2:{bits}"
    assert parse_rule(rule_to_spec(rule)).table == rule.table


@pytest.mark.parametrize(
    "spec",
    ["wolfram:256", "wolfram:-1", "rule90", "table:r=1:0101", "table:r=0:01", "table:r=1:0121"],
)
def test_malformed_specs_raise_invalid_rule_error(spec: str) -> None:
    """Malformed specs, out-of-range codes and wrong table lengths are rejected."""
    with pytest.raises(InvalidRuleError):
        parse_rule(spec)


def test_rule_validates_table_and_neighborhood() -> None:
    """Rule tables need 2**(2r+1) binary entries; lookups need 2r+1 cells."""
    with pytest.raises(InvalidRuleError):
        Rule(1, bytes(7), "short")
    with pytest.raises(InvalidRuleError):
        Rule(1, bytes([2] * 8), "bad")
    with pytest.raises(InvalidRuleError, match="length 3"):
        apply_local(wolfram_rule(90), "10")


def test_compose_rule_equals_repeated_steps(rule: Callable[[int], Rule]) -> None:
    """F^2 of rule 90 is the radius-2 XOR of the cells at distance 2."""
    squared = compose_rule(rule(90), 2)
    assert squared.radius == 2
    for code in range(32):
        cells = [(code >> (4 - index)) & 1 for index in range(5)]
        assert squared.table[code] == cells[0] ^ cells[4]
    base = rule(90)
    assert compose_rule(base, 1) is base
    with pytest.raises(InvalidRuleError):
        compose_rule(rule(90), 0)


def test_compose_rule_respects_table_cap(rule: Callable[[int], Rule]) -> None:
    """A composed table larger than table_cap raises ResourceLimitError."""
    with pytest.raises(ResourceLimitError) as excinfo:
        compose_rule(rule(90), 3, config=AnalysisConfig(table_cap=64))
    assert excinfo.value.limit_name == "table_cap"


def test_identity_and_widened_tables() -> None:
    """Widening keeps the centre neighborhood and ignores the new border cells."""
    assert identity_table(0).tolist() == [0, 1]
    assert np.array_equal(identity_table(1), wolfram_rule(204).table_array)
    widened = widen_table(wolfram_rule(90).table_array, 1, 2)
    assert widened.size == 32
    assert int(widened[0b01000]) == 1
    with pytest.raises(ValueError):
        widen_table(identity_table(2), 2, 1)


def test_eventual_periodicity_examples(rule: Callable[[int], Rule]) -> None:
    """Identity is periodic from the start; rule 0 settles after one step."""
    assert check_eventually_periodic(rule(204), 4, 4) == (0, 1)
    assert check_eventually_periodic(rule(0), 4, 4) == (1, 1)
    assert check_eventually_periodic(rule(90), 2, 2) is None


def test_nilpotency_examples(rule: Callable[[int], Rule]) -> None:
    """Rule 0 is constant after one step; rule 204 never becomes constant."""
    assert check_nilpotent_bounded(rule(0), 3) == (0, 1)
    assert check_nilpotent_bounded(rule(255), 3) == (1, 1)
    assert check_nilpotent_bounded(rule(204), 3) is None
