"""Experiment harness: config, sweep runner, summaries, and SVG panels."""

from .config import (
    BAEntry,
    EREntry,
    ExperimentConfig,
    GGPEntry,
    default_config,
    default_config_dict,
    parse_config,
)
from .plots import emit_plots
from .summary import GroupSummary, StatSummary, summarize
from .sweep import (
    CSV_HEADER,
    RESULTS_FILENAME,
    ExperimentRow,
    assign_size_bucket,
    read_rows_csv,
    row_from_csv,
    row_to_csv,
    run_sweep,
    write_rows_csv,
)

__all__ = [
    "BAEntry",
    "CSV_HEADER",
    "EREntry",
    "ExperimentConfig",
    "ExperimentRow",
    "GGPEntry",
    "GroupSummary",
    "RESULTS_FILENAME",
    "StatSummary",
    "assign_size_bucket",
    "default_config",
    "default_config_dict",
    "emit_plots",
    "parse_config",
    "read_rows_csv",
    "row_from_csv",
    "row_to_csv",
    "run_sweep",
    "summarize",
    "write_rows_csv",
]
