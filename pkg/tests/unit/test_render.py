"""Tests for the text rendering of space-time diagrams."""

from __future__ import annotations

from collections.abc import Callable

import pytest

from regional_control.core import (
    ControlPair,
    RegionWord,
    Rule,
    Trajectory,
    evolve_controlled,
    evolve_free,
)
from regional_control.exceptions import InvalidConfigurationError
from regional_control.report.render import diagram_cells, render_side_by_side, render_text

GOLDEN_ROWS = ["··███··█", "███·███·", "█·█·█·█·", " ······ "]


@pytest.fixture(name="golden")
def fixture_golden(rule: Callable[[int], Rule]) -> Trajectory:
    """Rule 90 steered from 011100 to 000000 in three steps."""
    controls = [
        ControlPair.from_text("0", "1"),
        ControlPair.from_text("1", "0"),
        ControlPair.from_text("1", "0"),
    ]
    return evolve_controlled(rule(90), RegionWord.from_text("011100"), controls)


def test_golden_rows_with_boundary(golden: Trajectory) -> None:
    """Boundary cells carry the controls; the last row leaves them blank."""
    assert render_text(golden, 1) == "".join(row + "\n" for row in GOLDEN_ROWS)


def test_rows_without_boundary(golden: Trajectory) -> None:
    """Without boundary only the region is drawn."""
    lines = render_text(golden, 1, boundary=False).splitlines()
    assert lines == [row[1:-1] for row in GOLDEN_ROWS]
    assert diagram_cells(golden, 1)[-1] == [None, 0, 0, 0, 0, 0, 0, None]


def test_side_by_side(golden: Trajectory, rule: Callable[[int], Rule]) -> None:
    """The free run is drawn to the right with the same number of rows."""
    free = evolve_free(rule(90), RegionWord.from_text("011100"), 3)
    lines = render_side_by_side(golden, free, 1).splitlines()
    assert len(lines) == 4
    assert lines[0].startswith(GOLDEN_ROWS[0] + "   ")
    assert lines[1].endswith("·██·██··")


def test_side_by_side_requires_equal_height(
    golden: Trajectory, rule: Callable[[int], Rule]
) -> None:
    """Diagrams of different heights cannot be paired."""
    short = evolve_free(rule(90), RegionWord.from_text("011100"), 1)
    with pytest.raises(InvalidConfigurationError):
        render_side_by_side(golden, short, 1)
