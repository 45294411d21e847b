"""Result files: per-run CSV, timings, JSON summary and plot-data files.

``results.csv`` holds only deterministic columns, so re-running a
configuration reproduces it byte for byte; wall-clock times go to
``timings.csv``.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import Iterable

import numpy as np

from ..metrics import MetricReport
from ..problems import get_problem, save_front
from .ranking import RankingTable, aggregate, rank_algorithms, rank_occurrence

RESULT_COLUMNS = ("problem", "algorithm", "seed", "igd", "hv", "evals", "igd_resolution", "hv_ref", "profile")
TIMING_COLUMNS = ("problem", "algorithm", "seed", "wall_time")


def ensure_writable(out_dir) -> Path:
    """Create ``out_dir`` and prove it is writable; raises OSError otherwise."""
    out = Path(out_dir)
    out.mkdir(parents=True, exist_ok=True)
    probe = out / ".write-probe"
    with probe.open("w") as fh:
        fh.write("ok")
    probe.unlink()
    return out


def _fmt(v) -> str:
    if isinstance(v, float):
        # plain float repr; numpy scalars would print as np.float64(...)
        return repr(float(v))
    return str(v)


def write_results_csv(path, reports: Iterable[MetricReport], profile: str) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(RESULT_COLUMNS)
        for r in reports:
            w.writerow([r.problem, r.algorithm, r.seed, _fmt(r.igd), _fmt(r.hv), r.evals, r.igd_resolution,
                        " ".join(_fmt(float(v)) for v in r.hv_ref), profile])


def write_timings_csv(path, reports: Iterable[MetricReport]) -> None:
    with open(path, "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(TIMING_COLUMNS)
        for r in reports:
            w.writerow([r.problem, r.algorithm, r.seed, f"{r.wall_time:.3f}"])


def read_results_csv(path) -> list[MetricReport]:
    out = []
    with open(path, newline="") as fh:
        for row in csv.DictReader(fh):
            out.append(MetricReport(
                problem=row["problem"], algorithm=row["algorithm"], seed=int(row["seed"]),
                igd=float(row["igd"]), hv=float(row["hv"]), evals=int(row["evals"]),
                igd_resolution=int(row["igd_resolution"]),
                hv_ref=tuple(float(v) for v in row["hv_ref"].split())))
    return out


def objective_groups(problems: Iterable[str]) -> dict[str, list[str]]:
    """Problems split into two- and three-objective groups (registry order kept)."""
    groups: dict[str, list[str]] = {}
    for p in problems:
        groups.setdefault(f"{get_problem(p).n_obj}-objective", []).append(p)
    return dict(sorted(groups.items()))


def build_tables(reports, metrics=("igd", "hv")) -> dict:
    """Ranking tables and rank histograms per objective group and metric."""
    agg = aggregate(reports)
    problems = list(dict.fromkeys(p for p, _ in agg))
    algorithms = sorted({a for _, a in agg})
    cats = {p: get_problem(p).category for p in problems}
    out = {}
    for group, probs in objective_groups(problems).items():
        out[group] = {}
        for m in metrics:
            table = rank_algorithms(agg, cats, m, probs, algorithms)
            out[group][m] = {"table": table, "occurrence": rank_occurrence(table)}
    return out


def tables_to_json(tables: dict) -> dict:
    return {g: {m: {"table": v["table"].to_dict(),
                    "occurrence": {a: {str(k): c for k, c in h.items()} for a, h in v["occurrence"].items()}}
                for m, v in per.items()} for g, per in tables.items()}


def tables_from_json(d: dict) -> dict:
    return {g: {m: {"table": RankingTable.from_dict(v["table"]),
                    "occurrence": {a: {int(k): c for k, c in h.items()} for a, h in v["occurrence"].items()}}
                for m, v in per.items()} for g, per in d.items()}


def write_json(path, payload) -> None:
    with open(path, "w", newline="\n") as fh:
        json.dump(payload, fh, indent=2, sort_keys=True)
        fh.write("\n")


def read_summary(path) -> dict:
    with open(path) as fh:
        d = json.load(fh)
    d["tables"] = tables_from_json(d["tables"])
    return d


def write_histograms(out: Path, tables: dict) -> None:
    for group, per in tables.items():
        for m, v in per.items():
            path = out / f"rank_histogram_{group}_{m}.csv"
            algs = sorted(v["occurrence"])
            buckets = sorted({b for h in v["occurrence"].values() for b in h})
            with open(path, "w", newline="") as fh:
                w = csv.writer(fh, lineterminator="\n")
                w.writerow(["rank"] + algs)
                for b in buckets:
                    w.writerow([b] + [v["occurrence"][a].get(b, 0) for a in algs])


def front_path(out_dir, problem: str, algorithm: str, seed: int) -> Path:
    return Path(out_dir) / "fronts" / problem / algorithm / f"seed_{seed}.dat"


def emit_results(results, config, out_dir=None) -> dict:
    """Write every output file for a finished experiment; returns the tables."""
    out = ensure_writable(out_dir or config.out_dir)
    reports = [r.report for r in results]
    write_results_csv(out / "results.csv", reports, config.profile)
    write_timings_csv(out / "timings.csv", reports)
    tables = build_tables(reports)
    agg = aggregate(reports)
    summary = {
        "config": config.echo(),
        "aggregate": {f"{p}/{a}": {m: s.to_dict() for m, s in st.items()} for (p, a), st in agg.items()},
        "tables": tables_to_json(tables),
    }
    write_json(out / "summary.json", summary)
    write_histograms(out, tables)
    for r in results:
        rep = r.report
        save_front(front_path(out, rep.problem, rep.algorithm, rep.seed), np.atleast_2d(r.front),
                   header=f"{rep.problem} {rep.algorithm} seed={rep.seed}")
    return tables


def format_table(table: RankingTable) -> str:
    """Plain-text rendering: category rows, then overall mean and std."""
    algs = table.algorithms
    width = max(8, *(len(a) for a in algs))
    lines = [f"{table.metric.upper():<10}" + "".join(f"{a:>{width + 2}}" for a in algs)]
    for cat, row in table.category_means.items():
        lines.append(f"{cat:<10}" + "".join(f"{row[a]:>{width + 2}.2f}" for a in algs))
    lines.append(f"{'Mean':<10}" + "".join(f"{table.overall_mean[a]:>{width + 2}.2f}" for a in algs))
    lines.append(f"{'Std':<10}" + "".join(f"{table.overall_std[a]:>{width + 2}.2f}" for a in algs))
    return "\n".join(lines)
