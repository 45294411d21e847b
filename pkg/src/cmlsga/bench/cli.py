"""Command line: ``run``, ``rank`` and ``fronts``.

Exit codes: 0 success, 2 configuration error, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from ..core import ConfigurationError
from ..problems import UnsupportedProblemError, get_problem, sample_true_front, save_front
from .config import PROFILES, RunConfig, problems_for, resolve_out_dir
from .io import build_tables, emit_results, ensure_writable, format_table, front_path, read_results_csv, \
    tables_to_json, write_json
from .runner import run_experiment

EXIT_OK, EXIT_CONFIG, EXIT_IO = 0, 2, 3

logger = logging.getLogger("cmlsga")


def _csv_list(text: str | None) -> list[str] | None:
    if text is None:
        return None
    return [t.strip() for t in text.split(",") if t.strip()]


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="cmlsga", description="Co-evolutionary multi-level selection GA benchmarks")
    ap.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a problem x algorithm x seed matrix")
    run.add_argument("--problems", help="comma-separated problem names, e.g. ZDT1,UF1")
    run.add_argument("--categories", help="comma-separated category labels (I-XII)")
    run.add_argument("--algorithms", help="comma-separated ids: cMLSGA, NSGA2, MOEAD, IBEA or cMLSGA-ES1-ES2")
    run.add_argument("--pairing", help="strategies of cMLSGA as ES1,ES2 (default MOEAD,NSGA2)")
    run.add_argument("--runs", type=int)
    run.add_argument("--budget", type=int, help="function evaluations per run")
    run.add_argument("--seed", type=int, default=0, help="base seed; run i uses seed + i")
    run.add_argument("--collectives", type=int, dest="n_collectives")
    run.add_argument("--pop-size", type=int, dest="pop_size")
    run.add_argument("--repro-delay", type=int, dest="reproduction_delay")
    run.add_argument("--igd-resolution", type=int, dest="igd_resolution")
    run.add_argument("--out", help="output directory (overrides $CMLSGA_OUT)")
    run.add_argument("--profile", choices=sorted(PROFILES), default="desk")
    run.add_argument("--workers", type=int, default=1)
    run.add_argument("--dry-run", action="store_true", help="print the resolved configuration and exit")

    rank = sub.add_parser("rank", help="rank algorithms from a results directory")
    rank.add_argument("--in", dest="in_dir", required=True)
    rank.add_argument("--metric", choices=("igd", "hv", "both"), default="both")

    fronts = sub.add_parser("fronts", help="write plot data of obtained and reference fronts")
    fronts.add_argument("--in", dest="in_dir", required=True)
    fronts.add_argument("--problem", required=True)
    fronts.add_argument("--resolution", type=int, default=2000, help="reference-front points")
    return ap


def _config_from_args(args) -> RunConfig:
    problems = problems_for(_csv_list(args.problems), _csv_list(args.categories))
    overrides = {
        "problems": problems or None,
        "algorithms": _csv_list(args.algorithms),
        "pairing": tuple(_csv_list(args.pairing)) if args.pairing else None,
        "runs": args.runs, "budget": args.budget, "seed": args.seed, "n_collectives": args.n_collectives,
        "pop_size": args.pop_size, "reproduction_delay": args.reproduction_delay,
        "igd_resolution": args.igd_resolution, "out_dir": str(resolve_out_dir(args.out)), "workers": args.workers,
    }
    return RunConfig.from_profile(args.profile, **overrides).validated()


def cmd_run(args) -> int:
    config = _config_from_args(args)
    if args.dry_run:
        print(json.dumps(config.echo(), indent=2, sort_keys=True))
        return EXIT_OK
    ensure_writable(config.out_dir)

    def progress(cell, res):
        logger.info("%s %s seed=%d igd=%.6g hv=%.6g", *cell, res.report.igd, res.report.hv)

    results = run_experiment(config, progress)
    tables = emit_results(results, config)
    for group, per in tables.items():
        for metric, v in per.items():
            print(f"[{group}]")
            print(format_table(v["table"]))
    print(f"results written to {config.out_dir}")
    return EXIT_OK


def cmd_rank(args) -> int:
    in_dir = Path(args.in_dir)
    reports = read_results_csv(in_dir / "results.csv")
    metrics = ("igd", "hv") if args.metric == "both" else (args.metric,)
    tables = build_tables(reports, metrics)
    for group, per in tables.items():
        for metric, v in per.items():
            print(f"[{group}]")
            print(format_table(v["table"]))
            print("rank occurrence: " + json.dumps(v["occurrence"], sort_keys=True))
    write_json(in_dir / "rankings.json", tables_to_json(tables))
    return EXIT_OK


def cmd_fronts(args) -> int:
    in_dir = Path(args.in_dir)
    problem = get_problem(args.problem)
    reports = [r for r in read_results_csv(in_dir / "results.csv") if r.problem == problem.name]
    if not reports:
        raise ConfigurationError(f"no results for {problem.name} in {in_dir}")
    ref_path = in_dir / "fronts" / problem.name / "reference.dat"
    save_front(ref_path, sample_true_front(problem, args.resolution).points,
               header=f"{problem.name} analytic front")
    print(ref_path)
    for r in reports:
        path = front_path(in_dir, r.problem, r.algorithm, r.seed)
        if not path.exists():
            raise FileNotFoundError(path)
        print(path)
    return EXIT_OK


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handler = {"run": cmd_run, "rank": cmd_rank, "fronts": cmd_fronts}[args.command]
    try:
        return handler(args)
    except (ConfigurationError, UnsupportedProblemError) as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except OSError as exc:
        print(f"I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
