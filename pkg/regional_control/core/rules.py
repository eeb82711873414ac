"""Boolean cellular automaton rules: parsing, lookup, composition and bounded classification."""

from __future__ import annotations

import re
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Final

import numpy as np
import numpy.typing as npt

from ..api.config import AnalysisConfig, resolve_config
from ..exceptions import InvalidRuleError
from ..utils import bits_to_code, get_logger, parse_bits, run_chunked
from ..validation import ensure_within_cap, validate_neighborhood
from .kernel import evolve_codes

LOGGER = get_logger(__name__)

_WOLFRAM_RE: Final[re.Pattern[str]] = re.compile(r"^wolfram:(\d{1,3})$")
_TABLE_RE: Final[re.Pattern[str]] = re.compile(r"^table:r=(\d{1,2}):([01]+)$")


@dataclass(frozen=True, slots=True)
class Rule:
    """
    Local transition table of a radius-``r`` Boolean cellular automaton.

    ``table[i]`` is the new state of a cell whose neighborhood, read left to
    right with the leftmost cell as most significant bit, encodes to ``i``.
    For radius 1 this is exactly the Wolfram numbering: entry ``i`` is bit
    ``i`` of the rule code.

    Attributes:
        radius: Neighborhood radius ``r >= 1``.
        table: ``2 ** (2r + 1)`` bytes, each ``0`` or ``1``.
        name: Identifier such as ``"wolfram:90"``.
    """

    radius: int
    table: bytes
    name: str

    def __post_init__(self) -> None:
        if not isinstance(self.radius, int) or self.radius < 1:
            raise InvalidRuleError(f"radius must be a positive integer, got {self.radius!r}")
        table = bytes(self.table)
        expected = 1 << (2 * self.radius + 1)
        if len(table) != expected:
            raise InvalidRuleError(
                f"table for radius {self.radius} must have {expected} entries, got {len(table)}"
            )
        if np.frombuffer(table, dtype=np.uint8).max() > 1:
            raise InvalidRuleError("table entries must be 0 or 1")
        object.__setattr__(self, "table", table)

    @property
    def diameter(self) -> int:
        return 2 * self.radius + 1

    @property
    def table_array(self) -> npt.NDArray[np.uint8]:
        """Read-only numpy view of the table."""
        return np.frombuffer(self.table, dtype=np.uint8)

    @property
    def wolfram_code(self) -> int | None:
        """Wolfram code for radius-1 rules, ``None`` otherwise."""
        if self.radius != 1:
            return None
        return sum(bit << index for index, bit in enumerate(self.table))

    def __str__(self) -> str:
        return self.name


def wolfram_rule(code: int) -> Rule:
    """
    Build the radius-1 rule with Wolfram number ``code``.

    :raises InvalidRuleError: If ``code`` is outside ``[0, 255]``.
    """
    if not 0 <= code <= 255:
        raise InvalidRuleError(f"wolfram code must be in [0, 255], got {code}")
    return Rule(1, bytes((code >> index) & 1 for index in range(8)), f"wolfram:{code}")


def parse_rule(spec: str) -> Rule:
    """
    Parse ``"wolfram:<0..255>"`` or ``"table:r=<r>:<bits>"``.

    Table bit strings list the entries from neighborhood ``1…1`` down to
    ``0…0``, so ``"table:r=1:01011010"`` is the same rule as ``"wolfram:90"``.

    :raises InvalidRuleError: For malformed specs, out-of-range codes or a
        table of the wrong length.
    """
    if not isinstance(spec, str):
        raise InvalidRuleError(f"rule spec must be a string, got {type(spec)!r}")
    text = spec.strip()
    wolfram = _WOLFRAM_RE.fullmatch(text)
    if wolfram is not None:
        return wolfram_rule(int(wolfram.group(1)))
    table_match = _TABLE_RE.fullmatch(text)
    if table_match is None:
        raise InvalidRuleError(
            f"rule spec must be 'wolfram:<code>' or 'table:r=<r>:<bits>', got {spec!r}"
        )
    radius = int(table_match.group(1))
    bits = table_match.group(2)
    if radius < 1:
        raise InvalidRuleError(f"radius must be >= 1, got {radius}")
    expected = 1 << (2 * radius + 1)
    if len(bits) != expected:
        raise InvalidRuleError(
            f"table for radius {radius} must have {expected} bits, got {len(bits)}"
        )
    return Rule(radius, bytes(reversed(parse_bits(bits, field_name="table"))), text)


def rule_to_spec(rule: Rule) -> str:
    """Return the canonical spec text that :func:`parse_rule` maps back to ``rule``."""
    code = rule.wolfram_code
    if code is not None:
        return f"wolfram:{code}"
    bits = "".join(str(entry) for entry in reversed(rule.table))
    return f"table:r={rule.radius}:{bits}"


def apply_local(rule: Rule, neighborhood: Sequence[int] | str) -> int:
    """
    Look up the new state for one neighborhood.

    :raises InvalidRuleError: If the neighborhood length is not ``2r + 1``.
    """
    symbols = (
        parse_bits(neighborhood, field_name="neighborhood")
        if isinstance(neighborhood, str)
        else tuple(neighborhood)
    )
    validated = validate_neighborhood(symbols, radius=rule.radius)
    return rule.table[bits_to_code(validated)]


def identity_table(radius: int) -> npt.NDArray[np.uint8]:
    """Table of radius ``radius`` (``0`` allowed) returning the centre cell."""
    indices = np.arange(1 << (2 * radius + 1), dtype=np.int64)
    return ((indices >> radius) & 1).astype(np.uint8)


def widen_table(
    table: npt.NDArray[np.uint8], radius: int, to_radius: int
) -> npt.NDArray[np.uint8]:
    """Re-express a radius-``radius`` table at radius ``to_radius``, ignoring border cells."""
    if to_radius < radius:
        raise ValueError(f"cannot narrow a table from radius {radius} to {to_radius}")
    indices = np.arange(1 << (2 * to_radius + 1), dtype=np.int64)
    middle = (indices >> (to_radius - radius)) & ((1 << (2 * radius + 1)) - 1)
    return np.asarray(table, dtype=np.uint8)[middle]


def _power_table(rule: Rule, steps: int, config: AnalysisConfig) -> npt.NDArray[np.uint8]:
    if steps == 0:
        return identity_table(0)
    width = 2 * rule.radius * steps + 1
    ensure_within_cap(1 << width, config.table_cap, limit_name="table_cap")
    table = rule.table_array

    def _chunk(start: int, stop: int) -> npt.NDArray[np.uint8]:
        seeds = np.arange(start, stop, dtype=np.int64)
        return evolve_codes(table, rule.radius, seeds, width, steps).astype(np.uint8)

    parts = run_chunked(_chunk, 1 << width, workers=config.workers, min_chunk=1 << 16)
    return np.concatenate(parts)


def compose_rule(rule: Rule, t: int, *, config: AnalysisConfig | None = None) -> Rule:
    """
    Return the radius ``r * t`` rule whose single step equals ``t`` steps of ``rule``.

    :raises InvalidRuleError: If ``t < 1``.
    :raises ResourceLimitError: If the composed table exceeds ``table_cap``.
    """
    if t < 1:
        raise InvalidRuleError(f"composition power must be >= 1, got {t}")
    if t == 1:
        return rule
    table = _power_table(rule, t, resolve_config(config))
    LOGGER.debug("Composed %s^%d into %d entries", rule.name, t, table.size)
    return Rule(rule.radius * t, table.tobytes(), f"{rule.name}^{t}")


def check_eventually_periodic(
    rule: Rule,
    m_max: int,
    p_max: int,
    *,
    config: AnalysisConfig | None = None,
) -> tuple[int, int] | None:
    """
    Search the lexicographically least ``(m, p)`` with ``F^(m+p) = F^m``.

    Iterates are compared as block maps after widening the smaller table, so
    a hit is an exact equality of global maps. ``None`` means "absent within
    bounds", never "not eventually periodic".

    :raises ResourceLimitError: If ``F^(m_max + p_max)`` exceeds ``table_cap``.
    """
    resolved = resolve_config(config)
    top = m_max + p_max
    ensure_within_cap(1 << (2 * rule.radius * top + 1), resolved.table_cap, limit_name="table_cap")
    powers = [_power_table(rule, steps, resolved) for steps in range(top + 1)]
    for m in range(m_max + 1):
        for p in range(1, p_max + 1):
            earlier = widen_table(powers[m], rule.radius * m, rule.radius * (m + p))
            if np.array_equal(powers[m + p], earlier):
                LOGGER.debug("%s is eventually periodic with (m, p) = (%d, %d)", rule.name, m, p)
                return m, p
    return None


def check_nilpotent_bounded(
    rule: Rule,
    t_max: int,
    *,
    config: AnalysisConfig | None = None,
) -> tuple[int, int] | None:
    """
    Return ``(q, T)`` for the least ``T <= t_max`` with ``F^T`` constant ``q``.

    Absence only means no constant iterate was found up to ``t_max``.
    """
    resolved = resolve_config(config)
    for steps in range(1, t_max + 1):
        table = _power_table(rule, steps, resolved)
        if np.all(table == table[0]):
            return int(table[0]), steps
    return None


__all__ = [
    "Rule",
    "wolfram_rule",
    "parse_rule",
    "rule_to_spec",
    "apply_local",
    "identity_table",
    "widen_table",
    "compose_rule",
    "check_eventually_periodic",
    "check_nilpotent_bounded",
]
