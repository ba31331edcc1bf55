"""Per-(model, sigma, size) means and standard errors over sweep rows."""

from __future__ import annotations

import math
from dataclasses import dataclass

from ..errors import EmptyInput
from .sweep import ExperimentRow

STAT_NAMES = ("components", "clustering", "assortativity", "core_share")


@dataclass(frozen=True)
class StatSummary:
    mean: float | None  # None when every row in the group was undefined
    se: float | None
    excluded: int  # rows whose statistic was undefined


@dataclass(frozen=True)
class GroupSummary:
    model: str
    sigma: float | None
    n_target: int
    rows: int
    mean_n_realized: float
    mean_edges: float
    stats: dict[str, StatSummary]


def _mean_se(values: list[float]) -> tuple[float, float]:
    k = len(values)
    mean = sum(values) / k
    if k == 1:
        return mean, 0.0
    var = sum((v - mean) ** 2 for v in values) / (k - 1)
    return mean, math.sqrt(var / k)


def summarize(rows: list[ExperimentRow]) -> list[GroupSummary]:
    """Group rows by (model, sigma, n_target) and aggregate each statistic.

    Undefined values are excluded from their statistic's mean; the exclusion
    count is reported per statistic. Groups come out sorted by model label,
    sigma, then size.
    """
    if not rows:
        raise EmptyInput("no rows to summarize")
    groups: dict[tuple, list[ExperimentRow]] = {}
    for row in rows:
        groups.setdefault((row.model, row.sigma, row.n_target), []).append(row)
    out = []
    for key in sorted(groups, key=lambda k: (k[0], k[1] if k[1] is not None else -1.0, k[2])):
        members = groups[key]
        stats: dict[str, StatSummary] = {}
        for name in STAT_NAMES:
            values = [float(getattr(r, name)) for r in members if getattr(r, name) is not None]
            excluded = len(members) - len(values)
            if values:
                mean, se = _mean_se(values)
                stats[name] = StatSummary(mean=mean, se=se, excluded=excluded)
            else:
                stats[name] = StatSummary(mean=None, se=None, excluded=excluded)
        out.append(
            GroupSummary(
                model=key[0],
                sigma=key[1],
                n_target=key[2],
                rows=len(members),
                mean_n_realized=sum(r.n_realized for r in members) / len(members),
                mean_edges=sum(r.edges for r in members) / len(members),
                stats=stats,
            )
        )
    return out
