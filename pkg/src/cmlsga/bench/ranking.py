"""Sample statistics per cell, average-rank tables and rank-occurrence histograms."""

from __future__ import annotations

import math
import warnings
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Mapping

import numpy as np
from scipy.stats import rankdata

METRICS = ("igd", "hv")
# lower is better for IGD, higher for HV
_ASCENDING = {"igd": True, "hv": False}


class MissingCellError(ValueError):
    """An algorithm lacks a value for a problem in the ranking scope."""


@dataclass(frozen=True)
class CellStats:
    n: int
    mean: float
    std: float
    median: float
    best: float
    worst: float
    std_defined: bool = True

    def to_dict(self) -> dict:
        return dict(self.__dict__)


def describe(values: Iterable[float], metric: str = "igd") -> CellStats:
    """Exact sample statistics; a single value gets std 0 with ``std_defined=False``."""
    v = np.asarray(list(values), dtype=float)
    if v.size == 0:
        raise ValueError("no values to describe")
    lower_better = _ASCENDING[metric]
    std = float(np.std(v, ddof=1)) if v.size > 1 else 0.0
    return CellStats(n=int(v.size), mean=float(np.mean(v)), std=std, median=float(np.median(v)),
                     best=float(v.min() if lower_better else v.max()),
                     worst=float(v.max() if lower_better else v.min()), std_defined=v.size > 1)


def aggregate(reports, metrics: Iterable[str] = METRICS) -> dict[tuple[str, str], dict[str, CellStats]]:
    """Per (problem, algorithm): statistics of every metric over seeds.

    Cells whose values are all missing are skipped with a warning.
    """
    cells: dict[tuple[str, str], list] = defaultdict(list)
    for r in reports:
        r = getattr(r, "report", r)
        cells[(r.problem, r.algorithm)].append(r)
    out = {}
    for key in sorted(cells):
        stats = {}
        for m in metrics:
            vals = [getattr(r, m) for r in cells[key] if getattr(r, m) is not None and not math.isnan(getattr(r, m))]
            if not vals:
                warnings.warn(f"no {m} values for {key}; cell excluded", stacklevel=2)
                continue
            stats[m] = describe(vals, m)
        if stats:
            out[key] = stats
    return out


@dataclass
class RankingTable:
    """Average ranks of algorithms over problems for one metric."""

    metric: str
    algorithms: list[str]
    problems: list[str]
    ranks: dict[str, dict[str, float]]
    category_means: dict[str, dict[str, float]]
    overall_mean: dict[str, float]
    overall_std: dict[str, float]
    categories: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "metric": self.metric, "algorithms": self.algorithms, "problems": self.problems,
            "categories": self.categories, "ranks": self.ranks, "category_means": self.category_means,
            "overall_mean": self.overall_mean, "overall_std": self.overall_std,
        }

    @classmethod
    def from_dict(cls, d: Mapping) -> "RankingTable":
        return cls(metric=d["metric"], algorithms=list(d["algorithms"]), problems=list(d["problems"]),
                   ranks=dict(d["ranks"]), category_means=dict(d["category_means"]),
                   overall_mean=dict(d["overall_mean"]), overall_std=dict(d["overall_std"]),
                   categories=dict(d.get("categories", {})))


def _metric_matrix(aggregated, metric: str, problems=None, algorithms=None):
    problems = problems or sorted({p for p, _ in aggregated})
    algorithms = algorithms or sorted({a for _, a in aggregated})
    missing = [(p, a) for p in problems for a in algorithms
               if (p, a) not in aggregated or metric not in aggregated[(p, a)]]
    if missing:
        gaps = ", ".join(f"{p}/{a}" for p, a in missing)
        raise MissingCellError(f"no {metric} value for: {gaps}")
    M = np.array([[aggregated[(p, a)][metric].mean for a in algorithms] for p in problems], dtype=float)
    return problems, algorithms, M


def problem_ranks(M: np.ndarray, metric: str) -> np.ndarray:
    """Row-wise average ranks (1 = best)."""
    key = M if _ASCENDING[metric] else -M
    return np.vstack([rankdata(row, method="average") for row in key]) if len(M) else M


def rank_algorithms(aggregated, categories: Mapping[str, str], metric: str = "igd",
                    problems=None, algorithms=None) -> RankingTable:
    """Rank algorithms per problem by mean metric, then average by category and overall.

    ``overall_mean`` averages the per-problem ranks directly (not the
    category means); ``overall_std`` is their sample standard deviation.
    """
    if metric not in _ASCENDING:
        raise ValueError(f"metric must be one of {METRICS}")
    problems, algorithms, M = _metric_matrix(aggregated, metric, problems, algorithms)
    R = problem_ranks(M, metric)
    ranks = {p: {a: float(R[i, j]) for j, a in enumerate(algorithms)} for i, p in enumerate(problems)}
    cat_of = {p: categories.get(p, "?") for p in problems}
    by_cat: dict[str, list[int]] = defaultdict(list)
    for i, p in enumerate(problems):
        by_cat[cat_of[p]].append(i)
    category_means = {c: {a: float(R[rows, j].mean()) for j, a in enumerate(algorithms)}
                      for c, rows in sorted(by_cat.items(), key=lambda kv: _category_key(kv[0]))}
    overall_mean = {a: float(R[:, j].mean()) for j, a in enumerate(algorithms)}
    overall_std = {a: float(R[:, j].std(ddof=1)) if len(problems) > 1 else 0.0 for j, a in enumerate(algorithms)}
    return RankingTable(metric, list(algorithms), list(problems), ranks, category_means, overall_mean,
                        overall_std, cat_of)


_ROMAN = {"I": 1, "II": 2, "III": 3, "IV": 4, "V": 5, "VI": 6, "VII": 7, "VIII": 8, "IX": 9, "X": 10, "XI": 11,
          "XII": 12}


def _category_key(c: str):
    return (_ROMAN.get(c, 99), c)


def rank_bucket(rank: float) -> int:
    """Integer bucket of a (possibly averaged) rank, halves rounded up: 1.5 -> 2."""
    return int(math.floor(rank + 0.5))


def rank_occurrence(aggregated_or_table, metric: str = "igd", problems=None,
                    algorithms=None) -> dict[str, dict[int, int]]:
    """Per algorithm, how many problems it finished at each integer rank."""
    if isinstance(aggregated_or_table, RankingTable):
        table = aggregated_or_table
    else:
        table = rank_algorithms(aggregated_or_table, {}, metric, problems, algorithms)
    hist: dict[str, dict[int, int]] = {a: {} for a in table.algorithms}
    for p in table.problems:
        for a in table.algorithms:
            b = rank_bucket(table.ranks[p][a])
            hist[a][b] = hist[a].get(b, 0) + 1
    return {a: dict(sorted(h.items())) for a, h in hist.items()}
