"""Visibly blocking word sets and the non-controllability verdict they imply."""

from __future__ import annotations

from collections.abc import Iterable
from dataclasses import dataclass
from typing import Literal

import numpy as np
import numpy.typing as npt

from ..api.config import AnalysisConfig, resolve_config
from ..core import (
    RegionWord,
    Rule,
    as_region_word,
    check_eventually_periodic,
    evolve_codes,
    image_codes,
    window_codes,
)
from ..core.kernel import MAX_CODE_WIDTH
from ..exceptions import InvalidWordError, PreconditionError
from ..graphs import ControllabilityVerdict, build_graph, is_regionally_controllable
from ..utils import get_logger, width_mask
from ..validation import ensure_within_cap, validate_dimension

LOGGER = get_logger(__name__)

Direction = Literal["right", "left"]


@dataclass(frozen=True, slots=True)
class MembershipWitness:
    """A word of width ``l + 2r`` whose middle window and image disagree on membership."""

    word: RegionWord
    window_in_set: bool
    image_in_set: bool


@dataclass(frozen=True, slots=True)
class PropagationWitness:
    """
    Two seeds agreeing on the shared side whose outputs differ after ``t`` steps.

    ``first_cell`` is the lattice position of the seeds' leftmost cell when
    the blocking word sits on cells ``[0, l)``.
    """

    direction: Direction
    t: int
    first_cell: int
    seed: RegionWord
    other_seed: RegionWord


@dataclass(frozen=True, slots=True)
class ConditionResult:
    """``horizon`` is ``None`` for the exact one-step condition."""

    passed: bool
    horizon: int | None = None
    witness: MembershipWitness | PropagationWitness | None = None


@dataclass(frozen=True, slots=True)
class VisiblyBlockingSet:
    """
    A candidate set ``W`` of length-``l`` words and its verification report.

    Attributes:
        rule_name: Rule the set was verified against.
        length: Word length ``l``.
        members: Sorted members of ``W``.
        t_max: Horizon of the propagation checks.
        invariance: Exact check that ``s`` has its window in ``W`` iff ``F(s)`` does.
        right_propagation: Differences left of the word never reach cells ``>= l``.
        left_propagation: Differences right of the word never reach cells ``< 0``.
    """

    rule_name: str
    length: int
    members: tuple[RegionWord, ...]
    t_max: int
    invariance: ConditionResult
    right_propagation: ConditionResult
    left_propagation: ConditionResult

    @property
    def verified(self) -> bool:
        return (
            self.invariance.passed
            and self.right_propagation.passed
            and self.left_propagation.passed
        )

    @property
    def is_full(self) -> bool:
        return len(self.members) == 1 << self.length


@dataclass(frozen=True, slots=True)
class NonControllabilityVerdict:
    """
    "Not controllable" together with the evidence gathered for it.

    Attributes:
        case: ``1`` when ``W`` holds every word of its length, else ``2``.
        periodicity: ``(m, p)`` with ``F^(m+p) = F^m`` found for case 1.
        member: Word ``u`` in ``W`` (case 2).
        non_member: Word ``v`` outside ``W`` (case 2).
        graph_witnesses: Every ``G_n`` in the scanned range that is not
            strongly connected.
        horizon_limited: ``True`` when no graph witness was found in range.
        propagation_horizon: Horizon the propagation conditions were checked to.
    """

    controllable: bool
    case: int
    n_max: int
    propagation_horizon: int
    periodicity: tuple[int, int] | None = None
    member: RegionWord | None = None
    non_member: RegionWord | None = None
    graph_witnesses: tuple[ControllabilityVerdict, ...] = ()
    horizon_limited: bool = False


def _membership(length: int, words: Iterable[RegionWord | str] | str) -> npt.NDArray[np.bool_]:
    member = np.zeros(1 << length, dtype=bool)
    if isinstance(words, str):
        if words.strip().lower() != "all":
            raise InvalidWordError(f"word set must be 'all' or a list of words, got {words!r}")
        member[:] = True
        return member
    for candidate in words:
        word = as_region_word(candidate)
        if word.length != length:
            raise InvalidWordError(f"word {word} must have length {length}")
        member[word.code] = True
    if not member.any():
        raise InvalidWordError("a visibly blocking set must contain at least one word")
    return member


def _check_invariance(rule: Rule, member: npt.NDArray[np.bool_], length: int) -> ConditionResult:
    r = rule.radius
    width = length + 2 * r
    words = np.arange(1 << width, dtype=np.int64)
    before = member[window_codes(words, right_margin=r, width=length)]
    after = member[image_codes(rule.table_array, r, words, width)]
    failing = np.flatnonzero(before != after)
    if not failing.size:
        return ConditionResult(True)
    code = int(failing[0])
    return ConditionResult(
        False,
        witness=MembershipWitness(
            RegionWord.from_code(code, width), bool(before[code]), bool(after[code])
        ),
    )


def _check_propagation(
    rule: Rule,
    member: npt.NDArray[np.bool_],
    length: int,
    t_max: int,
    direction: Direction,
    config: AnalysisConfig,
) -> ConditionResult:
    """
    Right direction at time ``t``: only outputs ``l <= i < rt`` can see a difference.

    Their cones cover the shared cells ``[0, 2rt)`` (the first ``l`` forming a
    word of ``W``) and the free cells ``[l - rt, 0)``. The left direction is
    the mirror image.
    """
    r = rule.radius
    table = rule.table_array
    for t in range(1, t_max + 1):
        reach = r * t
        if reach <= length:
            continue
        shared_bits, free_bits = 2 * reach, reach - length
        width = shared_bits + free_bits
        ensure_within_cap(width, MAX_CODE_WIDTH, limit_name="code_width")
        ensure_within_cap(1 << width, config.context_cap, limit_name="context_cap")
        shared = np.arange(1 << shared_bits, dtype=np.int64)
        if direction == "right":
            shared = shared[member[shared >> (shared_bits - length)]]
        else:
            shared = shared[member[shared & width_mask(length)]]
        free = np.arange(1 << free_bits, dtype=np.int64)
        if direction == "right":
            seeds = (free[None, :] << shared_bits) | shared[:, None]
            first_cell = length - reach
        else:
            seeds = (shared[:, None] << free_bits) | free[None, :]
            first_cell = length - shared_bits
        outputs = evolve_codes(table, r, seeds, width, t)
        differs = outputs != outputs[:, :1]
        failing = np.flatnonzero(differs.any(axis=1))
        if failing.size:
            row = int(failing[0])
            column = int(np.argmax(differs[row]))
            return ConditionResult(
                False,
                t_max,
                PropagationWitness(
                    direction,
                    t,
                    first_cell,
                    RegionWord.from_code(int(seeds[row, 0]), width),
                    RegionWord.from_code(int(seeds[row, column]), width),
                ),
            )
    return ConditionResult(True, t_max)


def verify_visibly_blocking(
    rule: Rule,
    W: Iterable[RegionWord | str] | str,
    length: int,
    t_max: int,
    *,
    config: AnalysisConfig | None = None,
) -> VisiblyBlockingSet:
    """
    Check both conditions of a visibly blocking set over the full shift.

    The invariance condition is exact: every word of width ``l + 2r`` is
    enumerated. The propagation conditions hold only up to ``t_max``.

    :param W: Member words, or ``"all"`` for every word of ``length``.
    :raises InvalidWordError: For an empty set or members of the wrong length.
    :raises ResourceLimitError: If an enumeration exceeds ``seed_width_cap``
        or ``context_cap``.
    """
    resolved = resolve_config(config)
    validate_dimension(length, field_name="length", min_value=1)
    validate_dimension(t_max, field_name="t_max")
    ensure_within_cap(
        length + 2 * rule.radius, resolved.seed_width_cap, limit_name="seed_width_cap"
    )
    member = _membership(length, W)
    result = VisiblyBlockingSet(
        rule_name=rule.name,
        length=length,
        members=tuple(RegionWord.from_code(int(code), length) for code in np.flatnonzero(member)),
        t_max=t_max,
        invariance=_check_invariance(rule, member, length),
        right_propagation=_check_propagation(rule, member, length, t_max, "right", resolved),
        left_propagation=_check_propagation(rule, member, length, t_max, "left", resolved),
    )
    LOGGER.debug(
        "Visibly blocking check for %s (l=%d, |W|=%d): %s",
        rule.name,
        length,
        len(result.members),
        "verified" if result.verified else "not verified",
    )
    return result


def non_controllability_from_visibly_blocking(
    rule: Rule,
    W: VisiblyBlockingSet,
    n_max: int,
    *,
    config: AnalysisConfig | None = None,
) -> NonControllabilityVerdict:
    """
    Turn a verified visibly blocking set into a "not controllable" verdict with evidence.

    Case 1 (``W`` holds every word) searches ``F^(m+p) = F^m`` within
    ``periodicity_bound``; case 2 names a member and a non-member. Both scan
    ``n`` in ``[l, n_max]`` for transition graphs that are not strongly
    connected; finding none marks the evidence as horizon-limited.

    :raises PreconditionError: If ``W`` is not verified or belongs to another rule.
    """
    resolved = resolve_config(config)
    if not W.verified:
        raise PreconditionError("the word set did not pass visibly blocking verification")
    if W.rule_name != rule.name:
        raise PreconditionError(f"word set was verified for {W.rule_name}, not {rule.name}")
    validate_dimension(n_max, field_name="n_max", min_value=1)
    ensure_within_cap(n_max, resolved.n_cap, limit_name="n_cap")
    witnesses = tuple(
        verdict
        for verdict in (
            is_regionally_controllable(build_graph(rule, n, config=resolved))
            for n in range(W.length, n_max + 1)
        )
        if not verdict.controllable
    )
    horizon_limited = not witnesses
    if horizon_limited:
        LOGGER.warning(
            "No transition graph witness for %s with n in [%d, %d]", rule.name, W.length, n_max
        )
    if W.is_full:
        bound = resolved.periodicity_bound
        return NonControllabilityVerdict(
            controllable=False,
            case=1,
            n_max=n_max,
            propagation_horizon=W.t_max,
            periodicity=check_eventually_periodic(rule, bound, bound, config=resolved),
            graph_witnesses=witnesses,
            horizon_limited=horizon_limited,
        )
    members = {word.code for word in W.members}
    outside = next(code for code in range(1 << W.length) if code not in members)
    return NonControllabilityVerdict(
        controllable=False,
        case=2,
        n_max=n_max,
        propagation_horizon=W.t_max,
        member=W.members[0],
        non_member=RegionWord.from_code(outside, W.length),
        graph_witnesses=witnesses,
        horizon_limited=horizon_limited,
    )


__all__ = [
    "MembershipWitness",
    "PropagationWitness",
    "ConditionResult",
    "VisiblyBlockingSet",
    "NonControllabilityVerdict",
    "verify_visibly_blocking",
    "non_controllability_from_visibly_blocking",
]
