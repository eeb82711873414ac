"""Controlled and free evolution of the region under boundary controls."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass

import numpy as np

from ..exceptions import InvalidWordError
from ..utils import bits_to_code
from .kernel import image_codes
from .rules import Rule
from .words import ControlPair, RegionWord, null_control


@dataclass(frozen=True, slots=True)
class TrajectoryRow:
    """One time step: the region word and the control applied to leave it."""

    word: RegionWord
    control: ControlPair | None = None


@dataclass(frozen=True, slots=True)
class Trajectory:
    """
    Finite-window space-time diagram of a controlled run.

    Attributes:
        rule_name: Name of the rule that produced the rows.
        n: Region length.
        rows: ``horizon + 1`` rows; ``rows[t].control`` maps ``rows[t]`` to ``rows[t + 1]``.
    """

    rule_name: str
    n: int
    rows: tuple[TrajectoryRow, ...]

    @property
    def horizon(self) -> int:
        return len(self.rows) - 1

    @property
    def words(self) -> tuple[RegionWord, ...]:
        return tuple(row.word for row in self.rows)

    @property
    def controls(self) -> tuple[ControlPair, ...]:
        return tuple(row.control for row in self.rows if row.control is not None)

    @property
    def final(self) -> RegionWord:
        return self.rows[-1].word


def _check_control(rule: Rule, ctrl: ControlPair) -> None:
    if ctrl.radius != rule.radius:
        raise InvalidWordError(
            f"control {ctrl} has radius {ctrl.radius}, rule {rule.name} needs {rule.radius}"
        )


def step_controlled(rule: Rule, w: RegionWord, ctrl: ControlPair) -> RegionWord:
    """
    Apply one step to ``left · w · right`` and keep the ``n`` region cells.

    Cells at distance ``>= r`` from both ends of the region never depend on
    ``ctrl``.

    :raises InvalidWordError: If ``w`` is empty or ``ctrl`` has the wrong radius.
    """
    if w.length < 1:
        raise InvalidWordError("region word must have length >= 1")
    _check_control(rule, ctrl)
    r = rule.radius
    padded = (
        (bits_to_code(ctrl.left) << (w.length + r)) | (w.code << r) | bits_to_code(ctrl.right)
    )
    image = image_codes(rule.table_array, r, np.array([padded], dtype=np.int64), w.length + 2 * r)
    return RegionWord.from_code(int(image[0]), w.length)


def evolve_controlled(
    rule: Rule,
    w0: RegionWord,
    controls: Sequence[ControlPair],
) -> Trajectory:
    """
    Replay ``controls`` from ``w0``: ``rows[t + 1] = step_controlled(rows[t], controls[t])``.

    An empty control sequence yields the single row ``w0``.
    """
    rows: list[TrajectoryRow] = []
    current = w0
    for ctrl in controls:
        rows.append(TrajectoryRow(current, ctrl))
        current = step_controlled(rule, current, ctrl)
    rows.append(TrajectoryRow(current, None))
    return Trajectory(rule.name, w0.length, tuple(rows))


def evolve_free(rule: Rule, w0: RegionWord, steps: int) -> Trajectory:
    """Evolve the region for ``steps`` steps with the null boundary at every step."""
    return evolve_controlled(rule, w0, [null_control(rule.radius)] * steps)


def replay_words(rule: Rule, w0: RegionWord, controls: Iterable[ControlPair]) -> RegionWord:
    """Return only the final word of a replay."""
    current = w0
    for ctrl in controls:
        current = step_controlled(rule, current, ctrl)
    return current


__all__ = [
    "TrajectoryRow",
    "Trajectory",
    "step_controlled",
    "evolve_controlled",
    "evolve_free",
    "replay_words",
]
