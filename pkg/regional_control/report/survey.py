"""Per-rule verdict tables over the radius-1 rule family."""

from __future__ import annotations

from collections.abc import Iterable

from ..api.config import AnalysisConfig, resolve_config
from ..core import wolfram_rule
from ..exceptions import InvalidConfigurationError, InvalidRuleError
from ..graphs import analyze_graph, build_graph
from ..utils import get_logger, map_items
from ..validation import ensure_within_cap, validate_dimension
from .models import SurveyRow, SurveyTable

LOGGER = get_logger(__name__)

ALL_RULES = "all"


def parse_rule_list(text: str) -> tuple[int, ...]:
    """
    Parse ``"all"`` or a comma separated list of Wolfram codes.

    :raises InvalidRuleError: For non-numeric or out-of-range codes.
    """
    if text.strip().lower() == ALL_RULES:
        return tuple(range(256))
    codes: set[int] = set()
    for item in text.split(","):
        token = item.strip()
        if not token.isdigit() or not 0 <= int(token) <= 255:
            raise InvalidRuleError(f"rule list entries must be codes in [0, 255], got {token!r}")
        codes.add(int(token))
    if not codes:
        raise InvalidRuleError("rule list must not be empty")
    return tuple(sorted(codes))


def survey_rules(
    n: int,
    codes: Iterable[int] | None = None,
    *,
    radius: int = 1,
    config: AnalysisConfig | None = None,
    with_index: bool = True,
) -> SurveyTable:
    """
    Build ``G_n`` for every listed radius-1 rule and tabulate its verdicts.

    Rows are ordered by rule code; each code appears once.

    :raises InvalidConfigurationError: For a radius other than 1.
    :raises ResourceLimitError: If ``n`` exceeds ``n_cap``.
    """
    resolved = resolve_config(config)
    if radius != 1:
        raise InvalidConfigurationError(f"survey supports the radius-1 family only, got {radius}")
    validate_dimension(n, field_name="n", min_value=1)
    ensure_within_cap(n, resolved.n_cap, limit_name="n_cap")
    ordered = sorted(set(range(256) if codes is None else codes))

    def _row(code: int) -> SurveyRow:
        rule = wolfram_rule(code)
        entry = analyze_graph(
            build_graph(rule, n, config=resolved), config=resolved, with_index=with_index
        )
        return SurveyRow(
            code=code,
            rule=rule.name,
            regionally_controllable=entry.regionally_controllable,
            scc_count=entry.scc_count,
            period=entry.period,
            primitive=entry.primitive,
            primitivity_index=entry.primitivity_index,
            index_capped=entry.index_capped,
        )

    rows = map_items(_row, ordered, workers=resolved.workers)
    LOGGER.debug("Surveyed %d rules at n=%d", len(rows), n)
    family = "wolfram:all" if len(rows) == 256 else "wolfram:" + ",".join(map(str, ordered))
    return SurveyTable(family=family, radius=radius, n=n, results=rows)


__all__ = ["ALL_RULES", "parse_rule_list", "survey_rules"]
