"""Regression test for the rule 90 steering diagram."""

from __future__ import annotations

import os

from regional_control.core import ControlPair, RegionWord, evolve_controlled, wolfram_rule
from regional_control.report import render_text


def test_rule90_diagram_matches_fixture(fixtures_dir: str) -> None:
    """
    Steering 011100 to 000000 under rule 90 draws the checked-in diagram.

    Each row carries the left control, the region and the right control; the
    final row has blank boundary cells.
    """
    controls = [
        ControlPair.from_text("0", "1"),
        ControlPair.from_text("1", "0"),
        ControlPair.from_text("1", "0"),
    ]
    trajectory = evolve_controlled(wolfram_rule(90), RegionWord.from_text("011100"), controls)
    with open(os.path.join(fixtures_dir, "rule90_diagram.txt"), encoding="utf-8") as handle:
        expected = handle.read()
    assert render_text(trajectory, 1) == expected
