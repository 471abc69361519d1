"""Command line entry point: ``trussopt {run,eval,rank,validate}``."""

from __future__ import annotations

import argparse
import json
import sys

from . import harness
from .benchmarks import PROBLEM_IDS, GeometryValidationError, ProblemLoadError, load_problem, validate_geometry
from .objective import MODES


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--problem", required=True, help=f"one of {', '.join(PROBLEM_IDS)} or a problem file path")


def _parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="trussopt", description="Truss sizing with s-FOA, DE and PSO.")
    sub = ap.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="run a seeded multi-run campaign")
    _add_common(run)
    run.add_argument("--algo", default="sfoa", choices=harness.ALGORITHMS)
    run.add_argument("--mode", default="discrete", choices=MODES)
    run.add_argument("--runs", type=int, default=30)
    run.add_argument("--seed", type=int, default=0, help="base seed; run i uses seed + i")
    run.add_argument("--budget", type=int, default=None, help="override the evaluation budget")
    run.add_argument("--out", default=None, help="report file (default: summary on stdout only)")
    run.add_argument("--format", default="csv", choices=harness.FORMATS)
    run.add_argument("--history", action="store_true", help="also write per-iteration histories")
    run.add_argument("--workers", type=int, default=None,
                     help=f"worker processes (default from ${harness.WORKERS_ENV}, else 1)")

    ev = sub.add_parser("eval", help="analyse one design")
    _add_common(ev)
    ev.add_argument("--mode", default=None, choices=MODES)
    ev.add_argument("values", nargs="+", type=float, help="one area per design variable")

    rank = sub.add_parser("rank", help="ranking table from a JSON file of per-algorithm stats")
    rank.add_argument("stats", help='JSON: {"algo": {"best":..,"mean":..,"std":..,"evaluations":..,"tuning":..}}')

    val = sub.add_parser("validate", help="check reference designs against published weights")
    val.add_argument("--problem", default="all", help="problem id, file path, or 'all'")
    return ap


def _cmd_run(a) -> int:
    cfg = harness.ExperimentConfig(a.problem, a.algo, a.mode, a.runs, a.seed, a.budget, a.out, a.format, a.history)
    c = harness.run_campaign(cfg, workers=a.workers)
    s = c.stats
    unit = c.problem.weight_unit
    print(f"{c.problem.id} {cfg.algorithm} {cfg.mode}: {s.n_runs} runs, {s.n_feasible} feasible, "
          f"{s.evaluations} evaluations per run, {s.wall_time:.1f} s")
    print(f"best {s.best:.4f} {unit}  mean {s.mean:.4f}  std {s.std:.4f}")
    errors = [r for r in c.records if "error" in r.extra]
    for r in errors:
        print(f"seed {r.seed} failed: {r.extra['error']}", file=sys.stderr)
    if a.out:
        path = harness.emit_report(c, a.out, a.format, a.history)
        print(f"report written to {path}")
    return 1 if len(errors) == len(c.records) else 0


def _cmd_eval(a) -> int:
    try:
        report = harness.evaluate_design(a.problem, a.values, a.mode)
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2
    print(report.format())
    return 0


def _cmd_rank(a) -> int:
    with open(a.stats) as fh:
        doc = json.load(fh)
    table = harness.build_ranking(doc, {k: v.get("tuning", 0) for k, v in doc.items()})
    print(table.format())
    return 0


def _cmd_validate(a) -> int:
    ids = PROBLEM_IDS if a.problem == "all" else (a.problem,)
    failed = False
    for pid in ids:
        problem = load_problem(pid)
        checks = validate_geometry(problem, raise_on_failure=False)
        for c in checks:
            status = "ok  " if c.ok else "FAIL"
            print(f"{status} {problem.id:7s} {c.source:16s} {c.mode:10s} published {c.published:>11.4f} "
                  f"computed {c.computed:>11.4f} ({100 * c.relative_error:.3f}%)")
            failed |= not c.ok
        if not checks:
            print(f"--   {problem.id:7s} no reference designs")
    return 1 if failed else 0


def main(argv=None) -> int:
    a = _parser().parse_args(argv)
    handlers = {"run": _cmd_run, "eval": _cmd_eval, "rank": _cmd_rank, "validate": _cmd_validate}
    try:
        return handlers[a.command](a)
    except (ProblemLoadError, GeometryValidationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
