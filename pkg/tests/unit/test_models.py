"""Tests for the versioned JSON report models."""

from __future__ import annotations

import json
from collections.abc import Callable

import pytest
from pydantic import ValidationError as PydanticValidationError

from regional_control import __version__
from regional_control.blocking import verify_visibly_blocking
from regional_control.core import Rule
from regional_control.report.models import (
    SCHEMA_VERSION,
    BlockingReport,
    MembershipWitnessModel,
    PropagationWitnessModel,
    SteerReport,
    SurveyRow,
    SurveyTable,
    VisiblyRecord,
    published_schema,
    report_to_json,
)


def _table(**extra: object) -> SurveyTable:
    row = SurveyRow(
        code=204,
        rule="wolfram:204",
        regionally_controllable=False,
        scc_count=4,
        period=None,
        primitive=False,
        primitivity_index=None,
        index_capped=False,
    )
    return SurveyTable(family="wolfram:204", radius=1, n=2, results=[row], **extra)


def test_envelope_fields() -> None:
    """Every report names the schema and tool version."""
    payload = json.loads(report_to_json(_table(timings_ms={"survey": 1.5})))
    assert payload["schema_version"] == SCHEMA_VERSION == "1.0"
    assert payload["tool_version"] == __version__
    assert payload["report"] == "survey"
    assert payload["timings_ms"] == {"survey": 1.5}


def test_timings_can_be_excluded() -> None:
    """Dropping timings makes the output independent of wall-clock time."""
    fast = report_to_json(_table(timings_ms={"survey": 1.0}), include_timings=False)
    slow = report_to_json(_table(timings_ms={"survey": 99.0}), include_timings=False)
    assert fast == slow
    assert "timings_ms" not in json.loads(fast)


def test_models_are_strict_and_frozen() -> None:
    """Unknown fields are rejected and instances are immutable."""
    with pytest.raises(PydanticValidationError):
        _table(unexpected=True)
    table = _table()
    with pytest.raises(PydanticValidationError):
        table.n = 3  # type: ignore[misc]


def test_blocking_results_use_the_kind_discriminator() -> None:
    """A visibly record round-trips through JSON as a visibly record."""
    condition = {"passed": True, "horizon": None}
    data = {
        "rule": "wolfram:204",
        "radius": 1,
        "results": [
            {
                "kind": "visibly",
                "length": 1,
                "members": ["0", "1"],
                "t_max": 6,
                "invariance": condition,
                "right_propagation": condition,
                "left_propagation": condition,
                "verified": True,
            }
        ],
    }
    report = BlockingReport.model_validate(data)
    assert isinstance(report.results[0], VisiblyRecord)
    with pytest.raises(PydanticValidationError):
        BlockingReport.model_validate({**data, "results": [{"kind": "other"}]})


def test_unreachable_steer_report(rule: Callable[[int], Rule]) -> None:
    """An unreachable target keeps the endpoints and has no steps."""
    report = SteerReport.from_trajectory(rule(204), "00", "11", None)
    assert report.status == "UNREACHABLE"
    assert report.n == 2 and report.results == [] and report.horizon is None


def test_published_schema_lists_every_report() -> None:
    """The schema document is keyed by command name."""
    schema = published_schema()
    assert schema["schema_version"] == SCHEMA_VERSION
    assert set(schema["reports"]) == {"analyze", "survey", "steer", "trace", "blocking"}
    assert "timings_ms" in schema["reports"]["steer"]["properties"]


def test_condition_witnesses_are_typed(rule: Callable[[int], Rule]) -> None:
    """Membership and propagation failures serialise under their own kinds."""
    xor = VisiblyRecord.from_set(verify_visibly_blocking(rule(90), "all", 2, 6))
    propagation = xor.right_propagation.witness
    assert isinstance(propagation, PropagationWitnessModel)
    assert propagation.kind == "propagation"
    assert (propagation.direction, propagation.t, propagation.first_cell) == ("right", 3, -1)
    null = VisiblyRecord.from_set(verify_visibly_blocking(rule(0), ["0"], 1, 4))
    membership = null.invariance.witness
    assert isinstance(membership, MembershipWitnessModel)
    assert membership.word == "010" and membership.image_in_set
    payload = json.loads(null.model_dump_json())
    assert payload["invariance"]["witness"]["kind"] == "membership"
    assert VisiblyRecord.model_validate(payload) == null


def test_schema_describes_condition_witnesses() -> None:
    """The blocking schema spells out both witness shapes."""
    definitions = published_schema()["reports"]["blocking"]["$defs"]
    assert {"MembershipWitnessModel", "PropagationWitnessModel"} <= set(definitions)
    assert "first_cell" in definitions["PropagationWitnessModel"]["properties"]
