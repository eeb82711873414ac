"""Reports, surveys, diagram rendering and the command implementations."""

from .commands import (
    SteerOutcome,
    cmd_analyze,
    cmd_blocking,
    cmd_steer,
    cmd_survey,
    cmd_trace,
    format_summary,
)
from .models import (
    SCHEMA_VERSION,
    AnalysisReport,
    BlockingReport,
    SteerReport,
    SurveyTable,
    TraceReport,
    published_schema,
    report_to_json,
)
from .render import render_image, render_side_by_side, render_text, save_image
from .survey import parse_rule_list, survey_rules

__all__ = [
    "SCHEMA_VERSION",
    "AnalysisReport",
    "BlockingReport",
    "SteerOutcome",
    "SteerReport",
    "SurveyTable",
    "TraceReport",
    "cmd_analyze",
    "cmd_blocking",
    "cmd_steer",
    "cmd_survey",
    "cmd_trace",
    "format_summary",
    "parse_rule_list",
    "published_schema",
    "render_image",
    "render_side_by_side",
    "render_text",
    "report_to_json",
    "save_image",
    "survey_rules",
]
