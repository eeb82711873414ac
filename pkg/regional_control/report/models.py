"""Versioned JSON report models."""

from __future__ import annotations

from typing import Annotated, Any, Final, Literal

from pydantic import BaseModel, ConfigDict, Field

from .._version import __version__
from ..blocking import (
    BlockingVerdict,
    ConditionResult,
    MembershipWitness,
    NonControllabilityVerdict,
    VisiblyBlockingSet,
)
from ..core import Rule, Trajectory
from ..graphs import SweepEntry, SweepReport
from ..symbolic import ApproximationComparison, MixingVerdict, TransitivityVerdict

SCHEMA_VERSION: Final[str] = "1.0"

TIMINGS_FIELD: Final[str] = "timings_ms"


class ReportModel(BaseModel):
    """Frozen model rejecting unknown fields so the schema stays stable."""

    model_config = ConfigDict(extra="forbid", frozen=True)


class LevelRecord(ReportModel):
    n: int
    vertex_count: int
    scc_count: int
    regionally_controllable: bool
    period: int | None
    primitive: bool
    primitivity_index: int | None
    index_capped: bool
    witness: tuple[str, str] | None = None

    @classmethod
    def from_entry(cls, entry: SweepEntry) -> LevelRecord:
        return cls(
            n=entry.n,
            vertex_count=entry.vertex_count,
            scc_count=entry.scc_count,
            regionally_controllable=entry.regionally_controllable,
            period=entry.period,
            primitive=entry.primitive,
            primitivity_index=entry.primitivity_index,
            index_capped=entry.index_capped,
            witness=None
            if entry.witness is None
            else (str(entry.witness[0]), str(entry.witness[1])),
        )


class SweepSummary(ReportModel):
    """All-``n`` properties, supported only up to ``n_max``."""

    n_min: int
    n_max: int
    chain_transitive_supported: bool
    chain_mixing_supported: bool
    label: str

    @classmethod
    def from_report(cls, report: SweepReport) -> SweepSummary:
        return cls(
            n_min=report.n_min,
            n_max=report.n_max,
            chain_transitive_supported=report.chain_transitive_supported,
            chain_mixing_supported=report.chain_mixing_supported,
            label=report.support_label,
        )


class TraceRecord(ReportModel):
    n: int
    k: int
    block_count: int
    strict_transitive: bool
    essential_transitive: bool
    essential_empty: bool
    mixing: bool
    essential_period: int | None
    approx_equals_graph: bool | None = None

    @classmethod
    def from_verdicts(
        cls,
        n: int,
        k: int,
        block_count: int,
        transitivity: TransitivityVerdict,
        mixing: MixingVerdict,
        comparison: ApproximationComparison | None = None,
    ) -> TraceRecord:
        return cls(
            n=n,
            k=k,
            block_count=block_count,
            strict_transitive=transitivity.strict,
            essential_transitive=transitivity.essential,
            essential_empty=transitivity.essential_empty,
            mixing=mixing.mixing,
            essential_period=mixing.period,
            approx_equals_graph=None if comparison is None else comparison.equal,
        )


class ReachRecord(ReportModel):
    """Bounded uncontrolled reachability between two windows."""

    source: str
    target: str
    t_max: int
    steps: int | None
    label: str = "bounded-time surrogate"


class RefutationModel(ReportModel):
    t: int
    left_width: int
    reference_seed: str
    differing_seed: str
    reference_window: str
    differing_window: str


class BlockingRecord(ReportModel):
    kind: Literal["p_blocking"] = "p_blocking"
    word: str
    p: int
    offset: int
    t_max: int
    bounded_status: str
    certificate_status: str
    refutation: RefutationModel | None = None
    cycle_start: int | None = None
    cycle_length: int | None = None

    @classmethod
    def from_verdicts(
        cls, bounded: BlockingVerdict, certificate: BlockingVerdict
    ) -> BlockingRecord:
        query = bounded.query
        witness = bounded.witness
        return cls(
            word=str(query.word),
            p=query.p,
            offset=query.offset,
            t_max=query.t_max,
            bounded_status=bounded.status.value,
            certificate_status=certificate.status.value,
            refutation=None
            if witness is None
            else RefutationModel(
                t=witness.t,
                left_width=witness.left_width,
                reference_seed=str(witness.reference_seed),
                differing_seed=str(witness.differing_seed),
                reference_window=str(witness.reference_window),
                differing_window=str(witness.differing_window),
            ),
            cycle_start=certificate.cycle_start,
            cycle_length=certificate.cycle_length,
        )


class MembershipWitnessModel(ReportModel):
    """A word whose middle window and one-step image disagree on membership."""

    kind: Literal["membership"] = "membership"
    word: str
    window_in_set: bool
    image_in_set: bool


class PropagationWitnessModel(ReportModel):
    """Two seeds sharing one side whose outputs differ after ``t`` steps."""

    kind: Literal["propagation"] = "propagation"
    direction: Literal["right", "left"]
    t: int
    first_cell: int
    seed: str
    other_seed: str


ConditionWitness = Annotated[
    MembershipWitnessModel | PropagationWitnessModel, Field(discriminator="kind")
]


class ConditionModel(ReportModel):
    passed: bool
    horizon: int | None
    witness: ConditionWitness | None = None

    @classmethod
    def from_result(cls, result: ConditionResult) -> ConditionModel:
        witness = result.witness
        payload: MembershipWitnessModel | PropagationWitnessModel | None
        if witness is None:
            payload = None
        elif isinstance(witness, MembershipWitness):
            payload = MembershipWitnessModel(
                word=str(witness.word),
                window_in_set=witness.window_in_set,
                image_in_set=witness.image_in_set,
            )
        else:
            payload = PropagationWitnessModel(
                direction=witness.direction,
                t=witness.t,
                first_cell=witness.first_cell,
                seed=str(witness.seed),
                other_seed=str(witness.other_seed),
            )
        return cls(passed=result.passed, horizon=result.horizon, witness=payload)


class LevelWitness(ReportModel):
    """A transition graph that is not strongly connected."""

    n: int
    scc_count: int
    source: str
    unreachable: str


class NonControllabilityModel(ReportModel):
    controllable: bool
    case: int
    n_max: int
    propagation_horizon: int
    periodicity: tuple[int, int] | None
    member: str | None
    non_member: str | None
    graph_witnesses: list[LevelWitness]
    horizon_limited: bool

    @classmethod
    def from_verdict(cls, verdict: NonControllabilityVerdict) -> NonControllabilityModel:
        return cls(
            controllable=verdict.controllable,
            case=verdict.case,
            n_max=verdict.n_max,
            propagation_horizon=verdict.propagation_horizon,
            periodicity=verdict.periodicity,
            member=None if verdict.member is None else str(verdict.member),
            non_member=None if verdict.non_member is None else str(verdict.non_member),
            graph_witnesses=[
                LevelWitness(
                    n=item.n,
                    scc_count=item.scc_count,
                    source=str(item.witness[0]) if item.witness else "",
                    unreachable=str(item.witness[1]) if item.witness else "",
                )
                for item in verdict.graph_witnesses
            ],
            horizon_limited=verdict.horizon_limited,
        )


class VisiblyRecord(ReportModel):
    kind: Literal["visibly"] = "visibly"
    length: int
    members: list[str]
    t_max: int
    invariance: ConditionModel
    right_propagation: ConditionModel
    left_propagation: ConditionModel
    verified: bool
    non_controllability: NonControllabilityModel | None = None

    @classmethod
    def from_set(
        cls,
        checked: VisiblyBlockingSet,
        verdict: NonControllabilityVerdict | None = None,
    ) -> VisiblyRecord:
        return cls(
            length=checked.length,
            members=[str(word) for word in checked.members],
            t_max=checked.t_max,
            invariance=ConditionModel.from_result(checked.invariance),
            right_propagation=ConditionModel.from_result(checked.right_propagation),
            left_propagation=ConditionModel.from_result(checked.left_propagation),
            verified=checked.verified,
            non_controllability=None
            if verdict is None
            else NonControllabilityModel.from_verdict(verdict),
        )


class StepRecord(ReportModel):
    t: int
    left: str
    right: str
    row: str


class SurveyRow(ReportModel):
    code: int
    rule: str
    regionally_controllable: bool
    scc_count: int
    period: int | None
    primitive: bool
    primitivity_index: int | None
    index_capped: bool


class ReportEnvelope(ReportModel):
    schema_version: str = SCHEMA_VERSION
    tool_version: str = __version__
    timings_ms: dict[str, float] = Field(default_factory=dict)


class AnalysisReport(ReportEnvelope):
    report: Literal["analyze"] = "analyze"
    rule: str
    radius: int
    results: list[LevelRecord]
    summary: SweepSummary
    trace: list[TraceRecord] = Field(default_factory=list)


class SurveyTable(ReportEnvelope):
    report: Literal["survey"] = "survey"
    family: str
    radius: int
    n: int
    results: list[SurveyRow]


class SteerReport(ReportEnvelope):
    report: Literal["steer"] = "steer"
    rule: str
    radius: int
    n: int
    initial: str
    target: str
    status: Literal["REACHED", "UNREACHABLE"]
    exact_time: int | None = None
    horizon: int | None = None
    results: list[StepRecord] = Field(default_factory=list)

    @classmethod
    def from_trajectory(
        cls,
        rule: Rule,
        initial: str,
        target: str,
        trajectory: Trajectory | None,
        exact_time: int | None = None,
    ) -> SteerReport:
        if trajectory is None:
            return cls(
                rule=rule.name,
                radius=rule.radius,
                n=len(initial),
                initial=initial,
                target=target,
                status="UNREACHABLE",
                exact_time=exact_time,
            )
        steps = [
            StepRecord(
                t=t + 1,
                left="".join(map(str, control.left)),
                right="".join(map(str, control.right)),
                row=str(trajectory.rows[t + 1].word),
            )
            for t, control in enumerate(trajectory.controls)
        ]
        return cls(
            rule=rule.name,
            radius=rule.radius,
            n=trajectory.n,
            initial=initial,
            target=target,
            status="REACHED",
            exact_time=exact_time,
            horizon=trajectory.horizon,
            results=steps,
        )


class TraceReport(ReportEnvelope):
    report: Literal["trace"] = "trace"
    rule: str
    radius: int
    results: list[TraceRecord]
    reach: ReachRecord | None = None


class BlockingReport(ReportEnvelope):
    report: Literal["blocking"] = "blocking"
    rule: str
    radius: int
    results: list[Annotated[BlockingRecord | VisiblyRecord, Field(discriminator="kind")]]


REPORT_MODELS: Final[dict[str, type[ReportEnvelope]]] = {
    "analyze": AnalysisReport,
    "survey": SurveyTable,
    "steer": SteerReport,
    "trace": TraceReport,
    "blocking": BlockingReport,
}


def report_to_json(report: ReportEnvelope, *, include_timings: bool = True) -> str:
    """Serialise with stable key order; ``include_timings=False`` drops the wall-clock fields."""
    exclude = None if include_timings else {TIMINGS_FIELD}
    return report.model_dump_json(indent=2, exclude=exclude)


def published_schema() -> dict[str, Any]:
    """JSON schema of every report, keyed by command."""
    return {
        "schema_version": SCHEMA_VERSION,
        "reports": {name: model.model_json_schema() for name, model in REPORT_MODELS.items()},
    }


__all__ = [
    "SCHEMA_VERSION",
    "TIMINGS_FIELD",
    "ReportModel",
    "LevelRecord",
    "SweepSummary",
    "TraceRecord",
    "ReachRecord",
    "RefutationModel",
    "BlockingRecord",
    "MembershipWitnessModel",
    "PropagationWitnessModel",
    "ConditionWitness",
    "ConditionModel",
    "LevelWitness",
    "NonControllabilityModel",
    "VisiblyRecord",
    "StepRecord",
    "SurveyRow",
    "AnalysisReport",
    "SurveyTable",
    "SteerReport",
    "TraceReport",
    "BlockingReport",
    "ReportEnvelope",
    "REPORT_MODELS",
    "report_to_json",
    "published_schema",
]
