"""Command implementations shared by the CLI and library callers.

Each ``cmd_*`` function parses its textual inputs, runs the analysis and
returns a report model with per-phase timings. The ``format_*`` helpers turn
a report into the human-readable summary printed by the CLI.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import singledispatch

from ..api.config import AnalysisConfig, resolve_config
from ..blocking import (
    BlockingQuery,
    certify_p_blocking,
    check_p_blocking_bounded,
    non_controllability_from_visibly_blocking,
    verify_visibly_blocking,
)
from ..core import RegionWord, Rule, Trajectory, evolve_free, parse_rule
from ..exceptions import InvalidConfigurationError, ResourceLimitError
from ..graphs import (
    build_graph,
    sweep,
    synthesize_control,
    synthesize_control_exact_time,
    uniform_steering_time,
)
from ..symbolic import (
    approximation_equals_graph,
    k_approximation,
    sft_is_mixing,
    sft_is_transitive,
    trace_blocks,
    trace_reach,
)
from ..utils import get_logger, log_elapsed
from .models import (
    AnalysisReport,
    BlockingRecord,
    BlockingReport,
    LevelRecord,
    ReachRecord,
    SteerReport,
    SurveyTable,
    SweepSummary,
    TraceRecord,
    TraceReport,
    VisiblyRecord,
)
from .render import render_side_by_side, render_text
from .survey import parse_rule_list, survey_rules

LOGGER = get_logger(__name__)

# Largest n scanned for graph witnesses when the caller gives no bound.
DEFAULT_WITNESS_N_MAX = 6


@dataclass(frozen=True, slots=True)
class SteerOutcome:
    """A steering report plus the trajectories needed to draw it."""

    report: SteerReport
    radius: int
    trajectory: Trajectory | None = None
    free_run: Trajectory | None = None

    def diagram(self, *, boundary: bool = True) -> str | None:
        """Text diagram of the controlled run, beside the free run when one was computed."""
        if self.trajectory is None:
            return None
        if self.free_run is None:
            return render_text(self.trajectory, self.radius, boundary=boundary)
        return render_side_by_side(
            self.trajectory, self.free_run, self.radius, boundary=boundary
        )


def _trace_record(
    rule: Rule, n: int, k: int, *, check_approx: bool, config: AnalysisConfig
) -> TraceRecord:
    language = trace_blocks(rule, n, k, config=config)
    sft = k_approximation(language)
    comparison = approximation_equals_graph(rule, n, config=config) if check_approx else None
    return TraceRecord.from_verdicts(
        n, k, language.block_count, sft_is_transitive(sft), sft_is_mixing(sft), comparison
    )


def cmd_analyze(
    rule_spec: str,
    n_min: int,
    n_max: int,
    *,
    trace_k: int | None = None,
    check_approx: bool = False,
    config: AnalysisConfig | None = None,
) -> AnalysisReport:
    """
    Sweep ``G_n`` over ``[n_min, n_max]`` and optionally the trace checks per ``n``.

    :raises ValidationError: For a malformed rule spec or range.
    :raises ResourceLimitError: If any level exceeds a configured cap.
    """
    resolved = resolve_config(config)
    timings: dict[str, float] = {}
    rule = parse_rule(rule_spec)
    with log_elapsed("sweep", timings, logger=LOGGER):
        swept = sweep(rule, n_min, n_max, config=resolved)
    traces: list[TraceRecord] = []
    if trace_k is not None:
        with log_elapsed("trace", timings, logger=LOGGER):
            traces = [
                _trace_record(rule, n, trace_k, check_approx=check_approx, config=resolved)
                for n in range(n_min, n_max + 1)
            ]
    return AnalysisReport(
        rule=rule.name,
        radius=rule.radius,
        results=[LevelRecord.from_entry(entry) for entry in swept.entries],
        summary=SweepSummary.from_report(swept),
        trace=traces,
        timings_ms=timings,
    )


def cmd_survey(
    n: int,
    rules: str = "all",
    *,
    radius: int = 1,
    config: AnalysisConfig | None = None,
) -> SurveyTable:
    """Tabulate the verdicts of ``rules`` (``"all"`` or ``"c1,c2,..."``) at region length ``n``."""
    timings: dict[str, float] = {}
    codes = parse_rule_list(rules)
    with log_elapsed("survey", timings, logger=LOGGER):
        table = survey_rules(n, codes, radius=radius, config=config)
    return table.model_copy(update={"timings_ms": timings})


def cmd_steer(
    rule_spec: str,
    n: int,
    source: str,
    target: str,
    *,
    exact_time: int | None = None,
    uniform: bool = False,
    compare_free: bool = False,
    config: AnalysisConfig | None = None,
) -> SteerOutcome:
    """
    Find boundary controls steering ``source`` to ``target``.

    Without ``exact_time`` the plan is a shortest one. ``uniform`` asks for a
    plan of exactly the index of primitivity, the time after which every word
    reaches every word. An unreachable target is a result, not an error.

    :raises InvalidConfigurationError: If ``uniform`` and ``exact_time`` are both given.
    :raises PreconditionError: If ``uniform`` is asked of a non-primitive graph.
    :raises ResourceLimitError: If ``n`` exceeds ``n_cap`` or the index exceeds ``index_cap``.
    """
    resolved = resolve_config(config)
    if uniform and exact_time is not None:
        raise InvalidConfigurationError("exact_time and uniform cannot be combined")
    timings: dict[str, float] = {}
    rule = parse_rule(rule_spec)
    initial = RegionWord.from_text(source, length=n)
    goal = RegionWord.from_text(target, length=n)
    with log_elapsed("build_graph", timings, logger=LOGGER):
        graph = build_graph(rule, n, config=resolved)
    if uniform:
        with log_elapsed("primitivity_index", timings, logger=LOGGER):
            exact_time = uniform_steering_time(graph, config=resolved)
        if exact_time is None:
            raise ResourceLimitError("index_cap", resolved.index_cap + 1, resolved.index_cap)
    with log_elapsed("synthesis", timings, logger=LOGGER):
        if exact_time is None:
            plan = synthesize_control(graph, initial, goal)
        else:
            plan = synthesize_control_exact_time(graph, initial, goal, exact_time, config=resolved)
    trajectory = None if plan is None else plan.replay(rule)
    free_run = None
    if compare_free and trajectory is not None:
        free_run = evolve_free(rule, initial, trajectory.horizon)
    report = SteerReport.from_trajectory(rule, str(initial), str(goal), trajectory, exact_time)
    return SteerOutcome(
        report=report.model_copy(update={"timings_ms": timings}),
        radius=rule.radius,
        trajectory=trajectory,
        free_run=free_run,
    )


def cmd_trace(
    rule_spec: str,
    n: int,
    k: int,
    *,
    check_approx: bool = False,
    reach: tuple[str, str, int] | None = None,
    config: AnalysisConfig | None = None,
) -> TraceReport:
    """
    Block count and transitivity/mixing verdicts of the ``k``-approximation.

    :param reach: Optional ``(source, target, t_max)`` for the bounded
        uncontrolled reachability surrogate.
    """
    resolved = resolve_config(config)
    timings: dict[str, float] = {}
    rule = parse_rule(rule_spec)
    with log_elapsed("trace", timings, logger=LOGGER):
        record = _trace_record(rule, n, k, check_approx=check_approx, config=resolved)
    reach_record = None
    if reach is not None:
        source, target, t_max = reach
        with log_elapsed("reach", timings, logger=LOGGER):
            steps = trace_reach(rule, n, source, target, t_max, config=resolved)
        reach_record = ReachRecord(source=source, target=target, t_max=t_max, steps=steps)
    return TraceReport(
        rule=rule.name,
        radius=rule.radius,
        results=[record],
        reach=reach_record,
        timings_ms=timings,
    )


def _parse_word_set(text: str) -> str | list[str]:
    if text.strip().lower() == "all":
        return "all"
    return [item.strip() for item in text.split(",") if item.strip()]


def cmd_blocking(
    rule_spec: str,
    *,
    word: str | None = None,
    p: int | None = None,
    offset: int | None = None,
    visibly: bool = False,
    length: int | None = None,
    word_set: str = "all",
    t_max: int | None = None,
    n_max: int | None = None,
    config: AnalysisConfig | None = None,
) -> BlockingReport:
    """
    Check a p-blocking query, or verify a visibly blocking set.

    A verified set also yields the "not controllable" verdict, scanning
    transition graphs for ``n`` up to ``n_max``.

    :raises InvalidConfigurationError: If the arguments of the chosen mode are missing.
    """
    resolved = resolve_config(config)
    timings: dict[str, float] = {}
    rule = parse_rule(rule_spec)
    horizon = resolved.blocking_horizon if t_max is None else t_max
    record: BlockingRecord | VisiblyRecord
    if visibly:
        if length is None:
            raise InvalidConfigurationError("a visibly blocking check needs the word length")
        with log_elapsed("visibly", timings, logger=LOGGER):
            checked = verify_visibly_blocking(
                rule, _parse_word_set(word_set), length, horizon, config=resolved
            )
        verdict = None
        if checked.verified:
            scan_to = min(max(length, DEFAULT_WITNESS_N_MAX), resolved.n_cap)
            with log_elapsed("non_controllability", timings, logger=LOGGER):
                verdict = non_controllability_from_visibly_blocking(
                    rule, checked, scan_to if n_max is None else n_max, config=resolved
                )
        record = VisiblyRecord.from_set(checked, verdict)
    else:
        if word is None or p is None or offset is None:
            raise InvalidConfigurationError("a p-blocking query needs word, p and offset")
        query = BlockingQuery(RegionWord.from_text(word), p, offset, horizon)
        with log_elapsed("bounded", timings, logger=LOGGER):
            bounded = check_p_blocking_bounded(rule, query, config=resolved)
        with log_elapsed("certificate", timings, logger=LOGGER):
            certificate = certify_p_blocking(rule, query, config=resolved)
        record = BlockingRecord.from_verdicts(bounded, certificate)
    return BlockingReport(
        rule=rule.name, radius=rule.radius, results=[record], timings_ms=timings
    )


def _yes(flag: bool | None) -> str:
    if flag is None:
        return "-"
    return "yes" if flag else "no"


def _value(value: int | None) -> str:
    return "-" if value is None else str(value)


@singledispatch
def format_summary(report: object) -> str:
    """Human-readable summary of a report."""
    raise TypeError(f"no summary for {type(report).__name__}")


@format_summary.register
def _(report: AnalysisReport) -> str:
    lines = [f"rule {report.rule} (radius {report.radius})"]
    lines.append(f"{'n':>3} {'vertices':>9} {'sccs':>6} {'ctrl':>5} {'period':>7} "
                 f"{'prim':>5} {'index':>6}")
    for level in report.results:
        index = _value(level.primitivity_index)
        if level.index_capped:
            index = "capped"
        lines.append(
            f"{level.n:>3} {level.vertex_count:>9} {level.scc_count:>6} "
            f"{_yes(level.regionally_controllable):>5} {_value(level.period):>7} "
            f"{_yes(level.primitive):>5} {index:>6}"
        )
    summary = report.summary
    lines.append(
        f"chain transitive: {_yes(summary.chain_transitive_supported)} ({summary.label})"
    )
    lines.append(f"chain mixing: {_yes(summary.chain_mixing_supported)} ({summary.label})")
    lines.extend(_trace_line(record) for record in report.trace)
    return "\n".join(lines)


def _trace_line(record: TraceRecord) -> str:
    line = (
        f"trace n={record.n} k={record.k}: blocks={record.block_count} "
        f"transitive={_yes(record.strict_transitive)} "
        f"essential={_yes(record.essential_transitive)} mixing={_yes(record.mixing)}"
    )
    if record.approx_equals_graph is not None:
        line += f" approx_equals_graph={_yes(record.approx_equals_graph)}"
    return line


@format_summary.register
def _(report: SurveyTable) -> str:
    lines = [f"survey {report.family} at n={report.n}"]
    for row in report.results:
        lines.append(
            f"{row.code:>3} controllable={_yes(row.regionally_controllable)} "
            f"sccs={row.scc_count} period={_value(row.period)} "
            f"primitive={_yes(row.primitive)} index={_value(row.primitivity_index)}"
        )
    return "\n".join(lines)


@format_summary.register
def _(report: SteerReport) -> str:
    head = f"{report.rule} n={report.n}: {report.initial} -> {report.target}"
    if report.status == "UNREACHABLE":
        return f"{head}: UNREACHABLE"
    lines = [f"{head}: REACHED in {report.horizon} steps"]
    lines.extend(
        f"t={step.t} left={step.left} right={step.right} row={step.row}"
        for step in report.results
    )
    return "\n".join(lines)


@format_summary.register
def _(report: TraceReport) -> str:
    lines = [f"rule {report.rule} (radius {report.radius})"]
    lines.extend(_trace_line(record) for record in report.results)
    if report.reach is not None:
        reach = report.reach
        found = "not within t_max" if reach.steps is None else f"in {reach.steps} steps"
        lines.append(
            f"reach {reach.source} -> {reach.target}: {found} ({reach.label}, "
            f"t_max={reach.t_max})"
        )
    return "\n".join(lines)


@format_summary.register
def _(report: BlockingReport) -> str:
    lines = [f"rule {report.rule} (radius {report.radius})"]
    for record in report.results:
        if isinstance(record, BlockingRecord):
            lines.append(
                f"word {record.word} p={record.p} offset={record.offset}: "
                f"bounded={record.bounded_status} (t_max={record.t_max}) "
                f"certificate={record.certificate_status}"
            )
            if record.refutation is not None:
                refutation = record.refutation
                lines.append(
                    f"  refuted at t={refutation.t}: {refutation.reference_window} "
                    f"vs {refutation.differing_window}"
                )
            continue
        status = "verified" if record.verified else "not verified"
        lines.append(f"visibly blocking set l={record.length} |W|={len(record.members)}: {status}")
        verdict = record.non_controllability
        if verdict is not None:
            lines.append(
                f"  NOT CONTROLLABLE (case {verdict.case}, "
                f"graph witnesses for n={[w.n for w in verdict.graph_witnesses]})"
            )
            if verdict.periodicity is not None:
                lines.append(f"  F^(m+p) = F^m with (m, p) = {verdict.periodicity}")
    return "\n".join(lines)


__all__ = [
    "DEFAULT_WITNESS_N_MAX",
    "SteerOutcome",
    "cmd_analyze",
    "cmd_survey",
    "cmd_steer",
    "cmd_trace",
    "cmd_blocking",
    "format_summary",
]
