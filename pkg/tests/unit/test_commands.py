"""Tests for the command layer and the human-readable summaries."""

from __future__ import annotations

import pytest

from regional_control.api.config import AnalysisConfig
from regional_control.exceptions import (
    InvalidConfigurationError,
    PreconditionError,
    ResourceLimitError,
)
from regional_control.report import (
    BlockingReport,
    cmd_analyze,
    cmd_blocking,
    cmd_steer,
    cmd_survey,
    cmd_trace,
    format_summary,
)
from regional_control.report.models import BlockingRecord, VisiblyRecord
from regional_control.report.survey import survey_rules


def test_analyze_shift_rule() -> None:
    """Rule 170 is primitive at every n with index n."""
    report = cmd_analyze("wolfram:170", 1, 3, trace_k=2)
    assert [level.primitivity_index for level in report.results] == [1, 2, 3]
    assert report.summary.chain_transitive_supported
    assert len(report.trace) == 3
    assert {"sweep", "trace"} <= set(report.timings_ms)
    summary = format_summary(report)
    assert summary.startswith("rule wolfram:170 (radius 1)")
    assert "chain transitive: yes" in summary
    assert "trace n=1 k=2" in summary


def test_survey_selected_rules() -> None:
    """Rules 0, 204 and 255 are not controllable at n=2."""
    table = cmd_survey(2, "255,0,204")
    assert [row.code for row in table.results] == [0, 204, 255]
    assert not any(row.regionally_controllable for row in table.results)
    assert table.family == "wolfram:0,204,255"
    assert "survey" in table.timings_ms


def test_survey_honours_the_graph_entry_cap() -> None:
    """A survey builds its graphs under the caller's caps."""
    with pytest.raises(ResourceLimitError, match="graph_entry_cap"):
        survey_rules(2, [90], config=AnalysisConfig(graph_entry_cap=8))
    rows = survey_rules(2, [90, 170], config=AnalysisConfig(graph_entry_cap=16, workers=2))
    assert [row.code for row in rows.results] == [90, 170]


def test_steer_reaches_target() -> None:
    """Rule 90 steers 011100 to 000000 within three steps."""
    outcome = cmd_steer("wolfram:90", 6, "011100", "000000", compare_free=True)
    report = outcome.report
    assert report.status == "REACHED"
    assert report.horizon is not None and report.horizon <= 3
    assert report.results[-1].row == "000000"
    assert f"REACHED in {report.horizon} steps" in format_summary(report)
    diagram = outcome.diagram()
    assert diagram is not None
    assert len(diagram.splitlines()) == report.horizon + 1
    assert "   " in diagram.splitlines()[0]


def test_steer_unreachable_is_a_result() -> None:
    """The identity rule never changes its region."""
    outcome = cmd_steer("wolfram:204", 2, "00", "11")
    assert outcome.report.status == "UNREACHABLE"
    assert outcome.diagram() is None
    assert format_summary(outcome.report).endswith("UNREACHABLE")


def test_steer_uniform_time() -> None:
    """A uniform plan takes exactly the index of primitivity."""
    report = cmd_steer("wolfram:90", 4, "0000", "1111", uniform=True).report
    assert report.exact_time == 2 and report.horizon == 2


def test_steer_argument_errors() -> None:
    """Uniform and exact time exclude each other; uniform needs a primitive graph."""
    with pytest.raises(InvalidConfigurationError):
        cmd_steer("wolfram:90", 4, "0000", "1111", uniform=True, exact_time=3)
    with pytest.raises(PreconditionError):
        cmd_steer("wolfram:204", 2, "00", "11", uniform=True)


def test_trace_with_reach() -> None:
    """The identity never turns window 0 into window 1."""
    report = cmd_trace("wolfram:204", 1, 2, reach=("0", "1", 4))
    assert report.results[0].block_count == 2
    assert report.reach is not None and report.reach.steps is None
    assert "not within t_max" in format_summary(report)


def test_blocking_word_report() -> None:
    """Rule 90 refutes 000 at t=2 and the certificate stays unknown."""
    report = cmd_blocking("wolfram:90", word="000", p=1, offset=1, t_max=4)
    record = report.results[0]
    assert isinstance(record, BlockingRecord)
    assert (record.bounded_status, record.certificate_status) == ("refuted", "unknown")
    assert record.refutation is not None and record.refutation.t == 2
    assert "refuted at t=2: 0 vs 1" in format_summary(report)


def test_blocking_visibly_report() -> None:
    """A verified full set for rule 204 reports case 1 with graph witnesses."""
    report = cmd_blocking("wolfram:204", visibly=True, length=2)
    assert isinstance(report, BlockingReport)
    record = report.results[0]
    assert isinstance(record, VisiblyRecord) and record.verified
    verdict = record.non_controllability
    assert verdict is not None and verdict.case == 1
    assert [witness.n for witness in verdict.graph_witnesses] == [2, 3, 4, 5, 6]
    assert "NOT CONTROLLABLE (case 1" in format_summary(report)


def test_blocking_requires_mode_arguments() -> None:
    """Each mode names the arguments it cannot run without."""
    with pytest.raises(InvalidConfigurationError):
        cmd_blocking("wolfram:90", word="000")
    with pytest.raises(InvalidConfigurationError):
        cmd_blocking("wolfram:90", visibly=True)


def test_format_summary_rejects_other_objects() -> None:
    """Only report models have summaries."""
    with pytest.raises(TypeError):
        format_summary(object())
