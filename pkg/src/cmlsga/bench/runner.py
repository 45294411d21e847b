"""Run matrices of (problem, algorithm, seed) with on-disk resume."""

from __future__ import annotations

import hashlib
import json
import logging
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from ..metrics import MetricReport, hv_reference_point, hypervolume, igd
from ..mlsga import CoevolutionConfig, run_cmlsga, run_standalone
from ..operators import VariationParams
from ..problems import get_problem, sample_true_front
from .config import RunConfig, is_coevo, pairing_of

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RunResult:
    report: MetricReport
    front: np.ndarray


def _settings_key(config: RunConfig) -> str:
    """Fingerprint of everything that changes a single run's outcome."""
    keys = ("budget", "pop_size", "n_collectives", "reproduction_delay", "crossover_rate", "mutation_rate",
            "eta_c", "eta_m", "igd_resolution")
    blob = json.dumps({k: getattr(config, k) for k in keys}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()[:16]


def run_path(out_dir, problem: str, algorithm: str, seed: int) -> Path:
    return Path(out_dir) / "runs" / problem / algorithm / f"seed_{seed}.json"


def run_one(config: RunConfig, problem_name: str, algorithm: str, seed: int) -> RunResult:
    problem = get_problem(problem_name)
    params = VariationParams(config.crossover_rate, config.mutation_rate, config.eta_c, config.eta_m)
    t0 = time.perf_counter()
    if is_coevo(algorithm):
        cfg = CoevolutionConfig(pairing=pairing_of(algorithm), n_collectives=config.n_collectives,
                                pop_size=config.pop_size, budget=config.budget,
                                reproduction_delay=config.reproduction_delay, params=params, seed=seed,
                                track_members=False)
        trace = run_cmlsga(problem, cfg)
    else:
        trace = run_standalone(problem, algorithm, config.pop_size, config.budget, params, seed)
    wall = time.perf_counter() - t0
    ref = sample_true_front(problem, config.igd_resolution)
    ref_point = hv_reference_point(ref)
    report = MetricReport(problem=problem.name, algorithm=algorithm, seed=seed,
                          igd=float(igd(trace.front, ref)), hv=float(hypervolume(trace.front, ref_point)),
                          evals=trace.n_evals, wall_time=wall, igd_resolution=config.igd_resolution,
                          hv_ref=tuple(float(v) for v in ref_point))
    return RunResult(report, trace.front)


def _save(path: Path, result: RunResult, key: str) -> None:
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(".tmp")
    payload = {"settings": key, "report": result.report.to_dict(), "front": result.front.tolist()}
    tmp.write_text(json.dumps(payload))
    tmp.replace(path)


def _load(path: Path, key: str) -> RunResult | None:
    try:
        payload = json.loads(path.read_text())
    except (OSError, ValueError):
        return None
    if payload.get("settings") != key:
        logger.info("%s was produced with different settings; recomputing", path)
        return None
    return RunResult(MetricReport.from_dict(payload["report"]), np.asarray(payload["front"], dtype=float))


def _task(args):
    return run_one(*args)


def run_experiment(config: RunConfig, progress=None) -> list[RunResult]:
    """Every (problem, algorithm, seed) cell, reusing finished runs found on disk.

    Results come back in (problem, algorithm, seed) order regardless of the
    worker count.
    """
    config = config.validated()
    key = _settings_key(config)
    cells = [(p, a, s) for p in config.problems for a in config.algorithms for s in config.seeds()]
    results: dict[tuple, RunResult] = {}
    todo = []
    for cell in cells:
        found = _load(run_path(config.out_dir, *cell), key)
        if found is None:
            todo.append(cell)
        else:
            results[cell] = found
    logger.info("%d runs cached, %d to compute", len(results), len(todo))

    def finish(cell, res):
        _save(run_path(config.out_dir, *cell), res, key)
        results[cell] = res
        if progress:
            progress(cell, res)

    if config.workers > 1 and len(todo) > 1:
        with ProcessPoolExecutor(max_workers=config.workers) as pool:
            for cell, res in zip(todo, pool.map(_task, [(config, *c) for c in todo])):
                finish(cell, res)
    else:
        for cell in todo:
            finish(cell, run_one(config, *cell))
    return [results[c] for c in cells]
