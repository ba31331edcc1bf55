"""Sweep runner: generate graphs over the size grid, compute the four
statistics per replicate, and stream rows to CSV.

Rows are written in deterministic work order (models in config order, grid
ascending, replicate ascending) and flushed one by one, so an interrupted
sweep can resume: existing rows are parsed back, trusted as the computed
prefix, and work continues from the next item. Every replicate's child seed
comes from the master seed and the work-item index, never from a shared
stream, which is what makes resumption byte-exact.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass

from ..errors import ConfigInvalid, DegenerateDraw, EmptyGraph, GenerationFailed, GraphBenchError
from ..generators import BAParams, ERParams, GGPParams, generate_ba, generate_er, generate_ggp
from ..graph import Graph
from ..seeds import child_seed
from ..stats import (
    CorePeripheryConfig,
    assortativity,
    connected_components,
    core_periphery,
    global_clustering,
)
from .config import BAEntry, EREntry, ExperimentConfig, GGPEntry, ModelEntry

CSV_HEADER = "model,sigma,n_target,n_realized,edges,replicate,seed,components,clustering,assortativity,core_share"
RESULTS_FILENAME = "results.csv"


@dataclass(frozen=True)
class ExperimentRow:
    model: str
    sigma: float | None
    n_target: int
    n_realized: int
    edges: int
    replicate: int
    seed: int
    components: int
    clustering: float | None
    assortativity: float | None
    core_share: float


def _fmt_opt(x: float | None) -> str:
    return "" if x is None else repr(float(x))


def row_to_csv(row: ExperimentRow) -> str:
    return ",".join(
        (
            row.model,
            _fmt_opt(row.sigma),
            str(row.n_target),
            str(row.n_realized),
            str(row.edges),
            str(row.replicate),
            str(row.seed),
            str(row.components),
            _fmt_opt(row.clustering),
            _fmt_opt(row.assortativity),
            repr(float(row.core_share)),
        )
    )


def _parse_opt(text: str) -> float | None:
    return None if text == "" else float(text)


def row_from_csv(line: str) -> ExperimentRow:
    parts = line.split(",")
    if len(parts) != 11:
        raise ValueError(f"expected 11 CSV fields, got {len(parts)}: {line!r}")
    return ExperimentRow(
        model=parts[0],
        sigma=_parse_opt(parts[1]),
        n_target=int(parts[2]),
        n_realized=int(parts[3]),
        edges=int(parts[4]),
        replicate=int(parts[5]),
        seed=int(parts[6]),
        components=int(parts[7]),
        clustering=_parse_opt(parts[8]),
        assortativity=_parse_opt(parts[9]),
        core_share=float(parts[10]),
    )


def read_rows_csv(path) -> list[ExperimentRow]:
    with open(path, "r", newline="") as fh:
        text = fh.read()
    lines = text.split("\n")
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError(f"unexpected CSV header in {path}")
    return [row_from_csv(ln) for ln in lines[1:] if ln]


def write_rows_csv(path, rows: list[ExperimentRow]) -> None:
    with open(path, "w", newline="\n") as fh:
        fh.write(CSV_HEADER + "\n")
        for row in rows:
            fh.write(row_to_csv(row) + "\n")


@dataclass(frozen=True)
class _WorkItem:
    entry_index: int
    entry: ModelEntry
    grid_index: int
    replicate: int


def _work_items(config: ExperimentConfig) -> list[_WorkItem]:
    items = []
    for ei, entry in enumerate(config.models):
        grid_len = len(entry.alpha_grid) if isinstance(entry, GGPEntry) else len(config.size_grid)
        for gi in range(grid_len):
            for rep in range(config.replicates):
                items.append(_WorkItem(ei, entry, gi, rep))
    return items


def assign_size_bucket(n_realized: int, size_grid: tuple[int, ...], relative_halfwidth: float) -> int:
    """Nearest size bucket in log space, or 0 when none is within the half-width."""
    if n_realized <= 0:
        return 0
    best = min(size_grid, key=lambda b: abs(math.log(n_realized) - math.log(b)))
    if abs(n_realized - best) <= relative_halfwidth * best:
        return best
    return 0


class _GGPEdgeAverages:
    """Mean realized edge count of GGP rows, per (sigma, bucket), for ER matching."""

    def __init__(self):
        self._sums: dict[tuple[float, int], tuple[int, int]] = {}

    def add(self, sigma: float, bucket: int, edges: int) -> None:
        if bucket == 0:
            return
        total, count = self._sums.get((sigma, bucket), (0, 0))
        self._sums[(sigma, bucket)] = (total + edges, count + 1)

    def mean_edges(self, sigma: float | None, bucket: int) -> float | None:
        if sigma is not None:
            entry = self._sums.get((sigma, bucket))
            return entry[0] / entry[1] if entry else None
        pooled = [v for (s, b), v in self._sums.items() if b == bucket]
        if not pooled:
            return None
        total = sum(t for t, _ in pooled)
        count = sum(c for _, c in pooled)
        return total / count


def _matched_er_probability(
    averages: _GGPEdgeAverages, entry: EREntry, n: int, seed: int
) -> float:
    mean_edges = averages.mean_edges(entry.match_sigma, n)
    if mean_edges is None:
        raise GenerationFailed(
            entry.label,
            seed,
            f"no binned GGP rows at size {n} to match density against",
        )
    pairs = n * (n - 1) / 2
    return min(1.0, max(0.0, mean_edges / pairs))


def compute_statistics(
    g: Graph, cp_config: CorePeripheryConfig
) -> tuple[int, float | None, float | None, float]:
    """The four global statistics of one graph."""
    comps = connected_components(g).count
    clustering = global_clustering(g).coefficient
    try:
        assort = assortativity(g).value
    except EmptyGraph:
        assort = None
    share = core_periphery(g, cp_config).core_share
    return comps, clustering, assort, share


def _run_item(item: _WorkItem, config: ExperimentConfig, averages: _GGPEdgeAverages) -> ExperimentRow:
    seed = child_seed(config.master_seed, item.entry_index, item.grid_index, item.replicate)
    entry = item.entry
    sigma: float | None = None
    if isinstance(entry, GGPEntry):
        sigma = entry.sigma
        params = GGPParams(
            alpha=entry.alpha_grid[item.grid_index],
            sigma=entry.sigma,
            tau=entry.tau,
            epsilon=entry.epsilon,
        )
        try:
            g = generate_ggp(params, seed, truncation_limit=entry.truncation_limit)
        except (DegenerateDraw, GraphBenchError) as exc:
            raise GenerationFailed(entry.label, seed, str(exc)) from exc
        n_target = assign_size_bucket(g.node_count, config.size_grid, config.ggp_bin_relative_halfwidth)
    elif isinstance(entry, EREntry):
        n = config.size_grid[item.grid_index]
        p = entry.p if config.er_calibration == "fixed_p" else _matched_er_probability(averages, entry, n, seed)
        g = generate_er(ERParams(n=n, p=p), seed)
        n_target = n
    else:
        assert isinstance(entry, BAEntry)
        n = config.size_grid[item.grid_index]
        g = generate_ba(BAParams(n=n, m=entry.m, m0=entry.m0), seed)
        n_target = n
    cp_config = CorePeripheryConfig(
        restarts=config.core_periphery.restarts,
        seed=child_seed(seed, 2),
        move_budget_factor=config.core_periphery.move_budget_factor,
        initial_temperature=config.core_periphery.initial_temperature,
        cooling=config.core_periphery.cooling,
        frozen_temperature=config.core_periphery.frozen_temperature,
    )
    comps, clustering, assort, share = compute_statistics(g, cp_config)
    return ExperimentRow(
        model=entry.label,
        sigma=sigma,
        n_target=n_target,
        n_realized=g.node_count,
        edges=g.edge_count,
        replicate=item.replicate,
        seed=seed,
        components=comps,
        clustering=clustering,
        assortativity=assort,
        core_share=share,
    )


def run_sweep(config: ExperimentConfig, progress=None) -> list[ExperimentRow]:
    """Run (or resume) the full sweep, streaming rows to output_dir/results.csv.

    Returns every row, including previously written ones when resuming.
    """
    os.makedirs(config.output_dir, exist_ok=True)
    csv_path = os.path.join(config.output_dir, RESULTS_FILENAME)
    items = _work_items(config)
    rows: list[ExperimentRow] = []
    if os.path.exists(csv_path):
        rows = read_rows_csv(csv_path)
        if len(rows) > len(items):
            raise ConfigInvalid(
                "$.output_dir", f"existing {RESULTS_FILENAME} has more rows than this config produces"
            )
    averages = _GGPEdgeAverages()
    for row in rows:
        if row.sigma is not None:
            averages.add(row.sigma, row.n_target, row.edges)
    mode = "a" if rows else "w"
    with open(csv_path, mode, newline="\n") as fh:
        if not rows:
            fh.write(CSV_HEADER + "\n")
            fh.flush()
        for index in range(len(rows), len(items)):
            row = _run_item(items[index], config, averages)
            if row.sigma is not None:
                averages.add(row.sigma, row.n_target, row.edges)
            rows.append(row)
            fh.write(row_to_csv(row) + "\n")
            fh.flush()
            if progress is not None:
                progress(index + 1, len(items), row)
    return rows
