"""Experiment harness: configuration, runs, aggregation, ranking and result files."""

from .config import PROFILES, RunConfig
from .io import emit_results, read_results_csv, read_summary
from .ranking import CellStats, MissingCellError, RankingTable, aggregate, describe, rank_algorithms, rank_occurrence
from .runner import RunResult, run_experiment, run_one

__all__ = [
    "PROFILES", "RunConfig", "RunResult", "run_experiment", "run_one", "aggregate", "describe", "CellStats",
    "rank_algorithms", "rank_occurrence", "RankingTable", "MissingCellError", "emit_results",
    "read_results_csv", "read_summary",
]
