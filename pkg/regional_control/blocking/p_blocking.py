"""Bounded refutation and set-iteration certificates for p-blocking words."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass
from enum import Enum

import numpy as np
import numpy.typing as npt

from ..api.config import AnalysisConfig, resolve_config
from ..core import RegionWord, Rule, as_region_word, evolve_codes, image_codes
from ..core.kernel import MAX_CODE_WIDTH
from ..exceptions import InvalidWordError
from ..utils import get_logger, run_chunked, width_mask
from ..validation import ensure_within_cap, validate_dimension

LOGGER = get_logger(__name__)

_CONTEXT_CHUNK = 1 << 20


class BlockingStatus(str, Enum):
    CERTIFIED = "certified"
    REFUTED = "refuted"
    NOT_REFUTED = "not_refuted"
    UNKNOWN = "unknown"


@dataclass(frozen=True, slots=True)
class BlockingQuery:
    """
    Does ``word`` force the ``p`` cells starting at ``offset`` for every context and time?

    :raises InvalidConfigurationError: If ``p < 1`` or ``t_max < 0``.
    :raises InvalidWordError: If the window does not fit inside ``word``.
    """

    word: RegionWord
    p: int
    offset: int
    t_max: int = 6

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", as_region_word(self.word))
        validate_dimension(self.p, field_name="p", min_value=1)
        validate_dimension(self.offset, field_name="offset")
        validate_dimension(self.t_max, field_name="t_max")
        if self.offset + self.p > self.word.length:
            raise InvalidWordError(
                f"window [{self.offset}, {self.offset + self.p}) does not fit in word {self.word}"
            )

    @property
    def length(self) -> int:
        return self.word.length


@dataclass(frozen=True, slots=True)
class BlockingWitness:
    """
    Two seeds ``left · word · right`` whose windows differ after ``t`` steps.

    ``left_width`` context cells precede the word in both seeds.
    """

    t: int
    left_width: int
    reference_seed: RegionWord
    differing_seed: RegionWord
    reference_window: RegionWord
    differing_window: RegionWord


@dataclass(frozen=True, slots=True)
class BlockingVerdict:
    """
    Outcome of a blocking check.

    ``horizon`` is the last time examined (bounded checker) or the number of
    reachable sets visited (certificate). ``cycle_start``/``cycle_length``
    describe the eventually periodic sequence of reachable sets behind a
    certificate.
    """

    status: BlockingStatus
    query: BlockingQuery
    horizon: int
    witness: BlockingWitness | None = None
    cycle_start: int | None = None
    cycle_length: int | None = None


@dataclass(frozen=True, slots=True)
class AllWordsCertificate:
    """Result of certifying every word of one length."""

    length: int
    p: int
    offset: int
    certified: bool
    words_checked: int
    first_failure: RegionWord | None = None


@dataclass(frozen=True, slots=True)
class _Cone:
    """Context layout of the window's dependence cone at time ``t``."""

    t: int
    left: int
    right: int
    width: int
    right_margin: int

    @property
    def context_bits(self) -> int:
        return self.left + self.right


def _cone(rule: Rule, query: BlockingQuery, t: int) -> _Cone:
    reach = rule.radius * t
    left = max(0, reach - query.offset)
    right = max(0, reach - (query.length - query.offset - query.p))
    width = left + query.length + right
    right_margin = (query.length + right - reach) - (query.offset + query.p)
    return _Cone(t, left, right, width, right_margin)


def _seeds(cone: _Cone, word: RegionWord, contexts: npt.NDArray[np.int64]) -> npt.NDArray[np.int64]:
    upper = (contexts >> np.int64(cone.right)) << np.int64(word.length + cone.right)
    return upper | np.int64(word.code << cone.right) | (contexts & np.int64(width_mask(cone.right)))


def _cone_windows(
    rule: Rule, query: BlockingQuery, cone: _Cone, lo: int, hi: int
) -> tuple[int, npt.NDArray[np.int64]]:
    contexts = np.arange(lo, hi, dtype=np.int64)
    seeds = _seeds(cone, query.word, contexts)
    final = evolve_codes(rule.table_array, rule.radius, seeds, cone.width, cone.t)
    return lo, (final >> np.int64(cone.right_margin)) & np.int64(width_mask(query.p))


def check_p_blocking_bounded(
    rule: Rule,
    query: BlockingQuery,
    *,
    config: AnalysisConfig | None = None,
) -> BlockingVerdict:
    """
    Enumerate every context of the window's dependence cone up to ``query.t_max``.

    Returns ``REFUTED`` with the first context (in index order) whose window
    differs from the all-zero context, or ``NOT_REFUTED`` when none does up to
    the horizon.

    :raises ResourceLimitError: If a time step needs more than
        ``context_cap`` contexts.
    """
    resolved = resolve_config(config)
    for t in range(1, query.t_max + 1):
        cone = _cone(rule, query, t)
        total = 1 << cone.context_bits
        ensure_within_cap(total, resolved.context_cap, limit_name="context_cap")
        ensure_within_cap(cone.width, MAX_CODE_WIDTH, limit_name="code_width")
        _, first = _cone_windows(rule, query, cone, 0, 1)
        reference = int(first[0])
        chunks = run_chunked(
            lambda lo, hi, cone=cone: _cone_windows(rule, query, cone, lo, hi),
            total,
            workers=resolved.workers,
            max_chunk=_CONTEXT_CHUNK,
        )
        for start, windows in chunks:
            differing = np.flatnonzero(windows != reference)
            if not differing.size:
                continue
            context = np.array([start + int(differing[0])], dtype=np.int64)
            witness = BlockingWitness(
                t=t,
                left_width=cone.left,
                reference_seed=RegionWord.from_code(
                    int(_seeds(cone, query.word, np.zeros(1, dtype=np.int64))[0]), cone.width
                ),
                differing_seed=RegionWord.from_code(
                    int(_seeds(cone, query.word, context)[0]), cone.width
                ),
                reference_window=RegionWord.from_code(reference, query.p),
                differing_window=RegionWord.from_code(int(windows[differing[0]]), query.p),
            )
            LOGGER.debug("Blocking refuted for %s at t=%d", query.word, t)
            return BlockingVerdict(BlockingStatus.REFUTED, query, t, witness)
    return BlockingVerdict(BlockingStatus.NOT_REFUTED, query, query.t_max)


def _strip_successors(
    rule: Rule, members: npt.NDArray[np.int64], length: int
) -> npt.NDArray[np.int64]:
    r = rule.radius
    controls = np.arange(1 << (2 * r), dtype=np.int64)
    left = (controls >> r) << (length + r)
    right = controls & width_mask(r)
    padded = left[None, :] | (members[:, None] << r) | right[None, :]
    return np.unique(image_codes(rule.table_array, r, padded, length + 2 * r))


def certify_p_blocking(
    rule: Rule,
    query: BlockingQuery,
    *,
    config: AnalysisConfig | None = None,
) -> BlockingVerdict:
    """
    Over-approximate the strip states reachable from ``query.word`` under arbitrary borders.

    ``R_0 = {word}`` and ``R_{t+1}`` collects every controlled successor of
    ``R_t``. Fresh borders at every step include every true context, so if
    every set up to the first repeated one agrees on the window the word is
    p-blocking. Anything else, including hitting ``certify_iteration_cap``,
    yields ``UNKNOWN``.

    :raises ResourceLimitError: If the word is longer than ``strip_width_cap``.
    """
    resolved = resolve_config(config)
    ensure_within_cap(query.length, resolved.strip_width_cap, limit_name="strip_width_cap")
    shift = np.int64(query.length - query.offset - query.p)
    window_mask = np.int64(width_mask(query.p))
    members = np.array([query.word.code], dtype=np.int64)
    seen: dict[tuple[int, bytes], int] = {}
    for step in range(resolved.certify_iteration_cap):
        key = (int(members.size), hashlib.blake2b(members.tobytes(), digest_size=16).digest())
        if key in seen:
            start = seen[key]
            LOGGER.debug("Certified %s: sets cycle from step %d", query.word, start)
            return BlockingVerdict(
                BlockingStatus.CERTIFIED, query, step, cycle_start=start, cycle_length=step - start
            )
        windows = (members >> shift) & window_mask
        if np.any(windows != windows[0]):
            return BlockingVerdict(BlockingStatus.UNKNOWN, query, step)
        seen[key] = step
        members = _strip_successors(rule, members, query.length)
    LOGGER.warning(
        "Certificate for %s stopped at certify_iteration_cap=%d",
        query.word,
        resolved.certify_iteration_cap,
    )
    return BlockingVerdict(BlockingStatus.UNKNOWN, query, resolved.certify_iteration_cap)


def certify_all_words_blocking(
    rule: Rule,
    length: int,
    p: int,
    offset: int,
    *,
    config: AnalysisConfig | None = None,
) -> AllWordsCertificate:
    """
    Certify every word of ``length`` as p-blocking at ``offset``.

    Stops at the first word that does not certify.
    """
    resolved = resolve_config(config)
    validate_dimension(length, field_name="length", min_value=1)
    ensure_within_cap(length, resolved.strip_width_cap, limit_name="strip_width_cap")
    for code in range(1 << length):
        word = RegionWord.from_code(code, length)
        query = BlockingQuery(word, p, offset, resolved.blocking_horizon)
        verdict = certify_p_blocking(rule, query, config=resolved)
        if verdict.status is not BlockingStatus.CERTIFIED:
            return AllWordsCertificate(length, p, offset, False, code + 1, query.word)
    return AllWordsCertificate(length, p, offset, True, 1 << length)


__all__ = [
    "BlockingStatus",
    "BlockingQuery",
    "BlockingWitness",
    "BlockingVerdict",
    "AllWordsCertificate",
    "check_p_blocking_bounded",
    "certify_p_blocking",
    "certify_all_words_blocking",
]
