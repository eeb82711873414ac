"""Command-line front end: ``regional-control <command> [options]``."""

from __future__ import annotations

import argparse
import json
import logging
import sys
from collections.abc import Callable, Sequence
from pathlib import Path
from typing import Final

from ._version import __version__
from .api.config import AnalysisConfig
from .exceptions import (
    InvalidConfigurationError,
    PreconditionError,
    ResourceLimitError,
    ValidationError,
)
from .report import (
    cmd_analyze,
    cmd_blocking,
    cmd_steer,
    cmd_survey,
    cmd_trace,
    format_summary,
    published_schema,
    render_image,
    report_to_json,
    save_image,
)
from .report.models import ReportEnvelope
from .utils import configure_basic_logging, get_logger

LOGGER = get_logger(__name__)

EXIT_OK: Final[int] = 0
EXIT_INVALID: Final[int] = 2
EXIT_RESOURCE: Final[int] = 3

Handler = Callable[[argparse.Namespace, AnalysisConfig], int]


def _emit(report: ReportEnvelope, json_path: str | None, extra: str | None = None) -> None:
    """Print the summary (or the JSON itself for ``--json -``) and write the JSON file."""
    payload = report_to_json(report)
    if json_path == "-":
        print(payload)
        return
    print(format_summary(report))
    if extra:
        print(extra, end="" if extra.endswith("\n") else "\n")
    if json_path:
        Path(json_path).write_text(payload + "\n", encoding="utf-8")


def _run_analyze(args: argparse.Namespace, config: AnalysisConfig) -> int:
    report = cmd_analyze(
        args.rule,
        args.n_min,
        args.n_max,
        trace_k=args.trace_k,
        check_approx=args.check_approx,
        config=config,
    )
    _emit(report, args.json)
    return EXIT_OK


def _run_survey(args: argparse.Namespace, config: AnalysisConfig) -> int:
    _emit(cmd_survey(args.n, args.rules, radius=args.radius, config=config), args.json)
    return EXIT_OK


def _run_steer(args: argparse.Namespace, config: AnalysisConfig) -> int:
    if args.render == "image" and not args.out:
        raise InvalidConfigurationError("--render image needs --out ending in .pbm or .ppm")
    outcome = cmd_steer(
        args.rule,
        args.n,
        args.source,
        args.target,
        exact_time=args.exact_time,
        uniform=args.uniform,
        compare_free=args.compare_free,
        config=config,
    )
    boundary = not args.no_boundary
    diagram = None
    if args.render == "text":
        diagram = outcome.diagram(boundary=boundary)
        if diagram is not None and args.out:
            Path(args.out).write_text(diagram, encoding="utf-8")
            diagram = None
    elif args.render == "image" and outcome.trajectory is not None:
        save_image(render_image(outcome.trajectory, outcome.radius, boundary=boundary), args.out)
    _emit(outcome.report, args.json, diagram)
    return EXIT_OK


def _run_trace(args: argparse.Namespace, config: AnalysisConfig) -> int:
    reach = None if args.reach is None else (args.reach[0], args.reach[1], args.reach_t_max)
    report = cmd_trace(
        args.rule, args.n, args.k, check_approx=args.check_approx, reach=reach, config=config
    )
    _emit(report, args.json)
    return EXIT_OK


def _run_blocking(args: argparse.Namespace, config: AnalysisConfig) -> int:
    report = cmd_blocking(
        args.rule,
        word=args.word,
        p=args.p,
        offset=args.offset,
        visibly=args.visibly,
        length=args.length,
        word_set=args.word_set,
        t_max=args.t_max,
        n_max=args.n_max,
        config=config,
    )
    _emit(report, args.json)
    return EXIT_OK


def _run_schema(args: argparse.Namespace, config: AnalysisConfig) -> int:
    print(json.dumps(published_schema(), indent=2, sort_keys=True))
    return EXIT_OK


def _add_json(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--json", metavar="PATH", help="write the JSON report to PATH ('-' for stdout)"
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="regional-control",
        description="Regional controllability of one-dimensional Boolean cellular automata.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    analyze = commands.add_parser("analyze", help="transition graph verdicts over a range of n")
    analyze.add_argument("--rule", required=True, help="wolfram:<code> or table:r=<r>:<bits>")
    analyze.add_argument("--n-min", type=int, required=True)
    analyze.add_argument("--n-max", type=int, required=True)
    analyze.add_argument("--trace-k", type=int, help="also check the trace k-approximation")
    analyze.add_argument("--check-approx", action="store_true")
    _add_json(analyze)
    analyze.set_defaults(handler=_run_analyze)

    survey = commands.add_parser("survey", help="verdict table over the radius-1 rules")
    survey.add_argument("--radius", type=int, default=1)
    survey.add_argument("--n", type=int, required=True)
    survey.add_argument("--rules", default="all", help="'all' or a comma separated code list")
    _add_json(survey)
    survey.set_defaults(handler=_run_survey)

    steer = commands.add_parser("steer", help="synthesise boundary controls between two words")
    steer.add_argument("--rule", required=True)
    steer.add_argument("--n", type=int, required=True)
    steer.add_argument("--from", dest="source", required=True, metavar="BITS")
    steer.add_argument("--to", dest="target", required=True, metavar="BITS")
    timing = steer.add_mutually_exclusive_group()
    timing.add_argument("--exact-time", type=int, metavar="T")
    timing.add_argument(
        "--uniform", action="store_true", help="plan of exactly the index of primitivity"
    )
    steer.add_argument("--compare-free", action="store_true", help="show the null-control run")
    steer.add_argument("--render", choices=("text", "image"))
    steer.add_argument("--out", metavar="PATH")
    steer.add_argument("--no-boundary", action="store_true")
    _add_json(steer)
    steer.set_defaults(handler=_run_steer)

    trace = commands.add_parser("trace", help="trace block language and its k-approximation")
    trace.add_argument("--rule", required=True)
    trace.add_argument("--n", type=int, required=True)
    trace.add_argument("--k", type=int, required=True)
    trace.add_argument("--check-approx", action="store_true")
    trace.add_argument("--reach", nargs=2, metavar=("FROM", "TO"))
    trace.add_argument("--reach-t-max", type=int, default=8)
    _add_json(trace)
    trace.set_defaults(handler=_run_trace)

    blocking = commands.add_parser("blocking", help="blocking words and visibly blocking sets")
    blocking.add_argument("--rule", required=True)
    blocking.add_argument("--word", metavar="BITS")
    blocking.add_argument("--p", type=int)
    blocking.add_argument("--offset", type=int)
    blocking.add_argument("--visibly", action="store_true")
    blocking.add_argument("--l", dest="length", type=int)
    blocking.add_argument("--set", dest="word_set", default="all")
    blocking.add_argument("--t-max", type=int)
    blocking.add_argument("--n-max", type=int)
    _add_json(blocking)
    blocking.set_defaults(handler=_run_blocking)

    schema = commands.add_parser("schema", help="print the JSON schema of every report")
    schema.set_defaults(handler=_run_schema)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    """
    Run the CLI and return its exit code.

    0 for any completed analysis (including UNREACHABLE), 2 for invalid input
    or an unwritable output, 3 when a configured cap is exceeded.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_INVALID
    configure_basic_logging(logging.DEBUG if args.verbose else logging.WARNING)
    handler: Handler = args.handler
    LOGGER.debug("Running %s", args.command)
    try:
        return handler(args, AnalysisConfig.from_environment())
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValidationError, PreconditionError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


__all__ = ["EXIT_OK", "EXIT_INVALID", "EXIT_RESOURCE", "build_parser", "main"]
