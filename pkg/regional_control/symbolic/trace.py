"""Exact height-``k`` block languages of the width-``n`` trace."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from ..api.config import AnalysisConfig, resolve_config
from ..core import RegionWord, Rule, as_region_word, evolve_codes, image_codes, window_codes
from ..exceptions import InvalidWordError
from ..utils import get_logger, run_chunked, width_mask
from ..validation import ensure_within_cap, validate_dimension

LOGGER = get_logger(__name__)

_SEED_CHUNK = 1 << 20

BlockArray = npt.NDArray[np.int64]


@dataclass(frozen=True, slots=True, eq=False)
class TraceBlockLanguage:
    """
    The set of height-``k`` column blocks of width ``n`` read off space-time diagrams.

    Attributes:
        rule: Rule that produced the trace.
        n: Window width.
        k: Block height.
        rows: ``(blocks, k)`` array of window codes, sorted lexicographically.
        seeds: Smallest seed of width ``n + 2r(k - 1)`` realising each block.
    """

    rule: Rule
    n: int
    k: int
    rows: BlockArray
    seeds: npt.NDArray[np.int64]

    @property
    def radius(self) -> int:
        return self.rule.radius

    @property
    def seed_width(self) -> int:
        return self.n + 2 * self.rule.radius * (self.k - 1)

    @property
    def block_count(self) -> int:
        return int(self.rows.shape[0])

    def __len__(self) -> int:
        return self.block_count

    def block(self, index: int) -> tuple[RegionWord, ...]:
        return tuple(RegionWord.from_code(int(code), self.n) for code in self.rows[index])

    def blocks(self) -> tuple[tuple[RegionWord, ...], ...]:
        return tuple(self.block(index) for index in range(self.block_count))

    def code_set(self) -> set[tuple[int, ...]]:
        return {tuple(int(code) for code in row) for row in self.rows.tolist()}

    def seed_word(self, index: int) -> RegionWord:
        return RegionWord.from_code(int(self.seeds[index]), self.seed_width)

    def project(self, *, drop_first: bool) -> set[tuple[int, ...]]:
        """Blocks with their first (or last) row removed."""
        trimmed = self.rows[:, 1:] if drop_first else self.rows[:, :-1]
        return {tuple(int(code) for code in row) for row in trimmed.tolist()}


def _columns(rule: Rule, n: int, k: int, seeds: npt.NDArray[np.int64]) -> BlockArray:
    r = rule.radius
    table = rule.table_array
    width = n + 2 * r * (k - 1)
    current = seeds
    columns = []
    for row in range(k):
        columns.append(window_codes(current, right_margin=r * (k - 1 - row), width=n))
        if row < k - 1:
            current = image_codes(table, r, current, width)
            width -= 2 * r
    return np.stack(columns, axis=1)


def trace_blocks(
    rule: Rule,
    n: int,
    k: int,
    *,
    config: AnalysisConfig | None = None,
) -> TraceBlockLanguage:
    """
    Enumerate every seed of width ``n + 2r(k - 1)`` and collect its column of ``k`` windows.

    The seed covers the dependence cone of the ``k`` rows, so the result is
    the exact language rather than a sample.

    :raises ResourceLimitError: If the seed width exceeds ``seed_width_cap``.
    """
    resolved = resolve_config(config)
    validate_dimension(n, field_name="n", min_value=1)
    validate_dimension(k, field_name="k", min_value=1)
    width = n + 2 * rule.radius * (k - 1)
    ensure_within_cap(width, resolved.seed_width_cap, limit_name="seed_width_cap")

    def _chunk(start: int, stop: int) -> tuple[BlockArray, npt.NDArray[np.int64]]:
        seeds = np.arange(start, stop, dtype=np.int64)
        rows, first = np.unique(_columns(rule, n, k, seeds), axis=0, return_index=True)
        return rows, seeds[first]

    parts = run_chunked(
        _chunk, 1 << width, workers=resolved.workers, min_chunk=1 << 14, max_chunk=_SEED_CHUNK
    )
    merged_rows = np.concatenate([rows for rows, _ in parts], axis=0)
    merged_seeds = np.concatenate([seeds for _, seeds in parts])
    rows, first = np.unique(merged_rows, axis=0, return_index=True)
    seeds = merged_seeds[first]
    rows.setflags(write=False)
    seeds.setflags(write=False)
    LOGGER.debug(
        "Trace of %s: %d blocks of height %d from 2^%d seeds", rule.name, rows.shape[0], k, width
    )
    return TraceBlockLanguage(rule, n, k, rows, seeds)


def trace_reach(
    rule: Rule,
    n: int,
    w: RegionWord | str,
    u: RegionWord | str,
    t_max: int,
    *,
    config: AnalysisConfig | None = None,
) -> int | None:
    """
    Least ``T <= t_max`` at which window ``w`` turns into window ``u`` without control.

    Only the ``2rT`` context cells around ``w`` vary, which bounds the
    surrogate to the horizon; ``None`` means "not within ``t_max``".

    :raises InvalidWordError: If ``w`` or ``u`` does not have length ``n``.
    :raises ResourceLimitError: If ``n + 2r * t_max`` exceeds ``seed_width_cap``.
    """
    resolved = resolve_config(config)
    validate_dimension(n, field_name="n", min_value=1)
    validate_dimension(t_max, field_name="t_max")
    start_word, end_word = as_region_word(w), as_region_word(u)
    for word in (start_word, end_word):
        if word.length != n:
            raise InvalidWordError(f"word {word} must have length {n}")
    r = rule.radius
    ensure_within_cap(n + 2 * r * t_max, resolved.seed_width_cap, limit_name="seed_width_cap")
    if start_word == end_word:
        return 0
    table = rule.table_array
    middle, target = start_word.code, end_word.code
    for steps in range(1, t_max + 1):
        side = r * steps

        def _hits(lo: int, hi: int, side: int = side, steps: int = steps) -> bool:
            contexts = np.arange(lo, hi, dtype=np.int64)
            seeds = ((contexts >> side) << (n + side)) | (middle << side) | (
                contexts & width_mask(side)
            )
            final = evolve_codes(table, r, seeds, n + 2 * side, steps)
            return bool(np.any(final == target))

        hits = run_chunked(
            _hits, 1 << (2 * side), workers=resolved.workers, max_chunk=_SEED_CHUNK
        )
        if any(hits):
            return steps
    return None


__all__ = ["TraceBlockLanguage", "trace_blocks", "trace_reach"]
