"""Seeded multi-run campaigns, statistics, ranking tables and report files."""

from __future__ import annotations

import csv
import io
import json
import math
import os
import subprocess
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Mapping, Sequence

import numpy as np
from scipy.stats import rankdata

from . import sfoa
from .baselines import DeParams, PsoParams, de_run, pso_run
from .benchmarks import BenchmarkProblem, load_problem
from .objective import CONTINUOUS, DISCRETE, MODES, evaluate_areas
from .record import RunRecord

ALGORITHMS = ("sfoa", "sfoa-bestonly", "de", "pso")
FORMATS = ("csv", "json")
WORKERS_ENV = "TRUSSOPT_WORKERS"
RUN_COLUMNS = ["seed", "evals", "best_weight", "best_penalized", "feasible"]
_BUDGET_KEY = {"sfoa": "sfoa", "sfoa-bestonly": "cfoa", "de": "de", "pso": "pso"}


@dataclass(frozen=True)
class ExperimentConfig:
    problem: str
    algorithm: str = "sfoa"
    mode: str = DISCRETE
    runs: int = 30
    seed: int = 0
    budget: int | None = None
    out: str | None = None
    format: str = "csv"
    history: bool = False

    def __post_init__(self) -> None:
        if self.algorithm not in ALGORITHMS:
            raise ValueError(f"algorithm must be one of {ALGORITHMS}, got {self.algorithm!r}")
        if self.mode not in MODES:
            raise ValueError(f"mode must be one of {MODES}, got {self.mode!r}")
        if self.runs < 1:
            raise ValueError("run count must be at least 1")
        if self.budget is not None and self.budget < 1:
            raise ValueError("budget override must be positive")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")


def make_params(problem: BenchmarkProblem, algorithm: str, budget: int | None = None):
    """Optimizer parameters for ``algorithm`` from the problem's budget table."""
    try:
        row = dict(problem.budgets[_BUDGET_KEY[algorithm]])
    except KeyError as exc:
        raise ValueError(f"{problem.id} has no parameter row for {algorithm!r}") from exc
    if budget is not None:
        row["budget"] = budget
    if algorithm == "sfoa":
        return sfoa.SfoaParams(**row)
    if algorithm == "sfoa-bestonly":
        return sfoa.SfoaParams(**row, attraction=sfoa.BEST_ONLY)
    if algorithm == "de":
        return DeParams(**row)
    return PsoParams(**row)


def run_algorithm(problem: BenchmarkProblem, algorithm: str, params, mode: str, seed: int) -> RunRecord:
    if algorithm in ("sfoa", "sfoa-bestonly"):
        return sfoa.run(problem, params, mode, seed)
    if algorithm == "de":
        return de_run(problem, params, mode, seed)
    return pso_run(problem, params, mode, seed)


def _failed_record(problem: BenchmarkProblem, algorithm: str, seed: int, exc: Exception) -> RunRecord:
    return RunRecord(seed, 0, math.nan, math.inf, np.full(problem.n_vars, math.nan), False, [],
                     algorithm, {"error": f"{type(exc).__name__}: {exc}"})


def _run_seed(args) -> RunRecord:
    problem, algorithm, params, mode, seed = args
    try:
        return run_algorithm(problem, algorithm, params, mode, seed)
    except Exception as exc:  # a failed run is recorded, the campaign continues
        return _failed_record(problem, algorithm, seed, exc)


@dataclass
class CampaignStats:
    """Best/mean/std over the feasible best-of-run weights; infeasible runs are only counted."""

    best: float
    mean: float
    std: float
    n_runs: int
    n_feasible: int
    evaluations: int  # largest per-run evaluation count
    wall_time: float = 0.0

    @property
    def n_infeasible(self) -> int:
        return self.n_runs - self.n_feasible

    @classmethod
    def from_records(cls, records: Sequence[RunRecord], wall_time: float = 0.0) -> "CampaignStats":
        w = np.array([r.best_weight for r in records if r.feasible], dtype=float)
        if w.size:
            best, mean = float(w.min()), float(w.mean())
            std = float(w.std(ddof=1)) if w.size > 1 else 0.0
        else:
            best = mean = std = math.nan
        evals = max((r.evaluations for r in records), default=0)
        return cls(best, mean, std, len(records), int(w.size), int(evals), wall_time)


@dataclass
class Campaign:
    config: ExperimentConfig
    problem: BenchmarkProblem
    params: object
    records: list[RunRecord]
    stats: CampaignStats

    @property
    def best_record(self) -> RunRecord:
        return min(self.records, key=lambda r: (r.best_penalized, r.seed))


def default_workers() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def run_campaign(cfg: ExperimentConfig, problem: BenchmarkProblem | None = None,
                 workers: int | None = None) -> Campaign:
    """Run ``cfg.runs`` independent runs with seeds ``cfg.seed + i``."""
    problem = problem or load_problem(cfg.problem)
    params = make_params(problem, cfg.algorithm, cfg.budget)
    seeds = [cfg.seed + i for i in range(cfg.runs)]
    jobs = [(problem, cfg.algorithm, params, cfg.mode, s) for s in seeds]
    workers = default_workers() if workers is None else workers
    start = time.perf_counter()
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            records = list(pool.map(_run_seed, jobs))
    else:
        records = [_run_seed(job) for job in jobs]
    records.sort(key=lambda r: r.seed)
    stats = CampaignStats.from_records(records, time.perf_counter() - start)
    return Campaign(cfg, problem, params, records, stats)


# --------------------------------------------------------------------------- design check

@dataclass
class DesignReport:
    problem: str
    mode: str
    values: list[float]
    weight: float
    penalized: float
    feasible: bool
    stress_ratio: float
    displacement_ratio: float
    stress_limit: float
    displacement_limit: float | None
    weight_unit: str = ""
    stable: bool = True

    @property
    def stress_margin(self) -> float:
        """Spare capacity of the most stressed member, as a fraction of the limit."""
        return 1.0 - self.stress_ratio

    @property
    def displacement_margin(self) -> float:
        return math.nan if self.displacement_limit is None else 1.0 - self.displacement_ratio

    def format(self) -> str:
        lines = [
            f"problem      {self.problem} ({self.mode})",
            f"weight       {self.weight:.6f} {self.weight_unit}",
            f"penalized    {self.penalized:.6f}",
            f"stress       max |s|/limit = {self.stress_ratio:.5f} (margin {self.stress_margin:+.5f})",
        ]
        if self.displacement_limit is not None:
            lines.append(f"displacement max |d|/limit = {self.displacement_ratio:.5f} "
                         f"(margin {self.displacement_margin:+.5f})")
        else:
            lines.append("displacement unconstrained")
        if not self.stable:
            lines.append("structure is kinematically unstable")
        lines.append(f"feasible     {'yes' if self.feasible else 'no'}")
        return "\n".join(lines)


def evaluate_design(problem: str | BenchmarkProblem, values, mode: str | None = None) -> DesignReport:
    """
    Analyse one design given as area values per variable.

    ``mode`` defaults to discrete when every value belongs to the discrete set.
    """
    problem = problem if isinstance(problem, BenchmarkProblem) else load_problem(problem)
    values = np.asarray(values, dtype=float)
    if values.shape != (problem.n_vars,):
        raise ValueError(f"{problem.id} expects {problem.n_vars} design values, got {values.size}")
    S = problem.space.discrete
    if mode is None:
        on_grid = S is not None and all(np.any(np.isclose(S, v, rtol=1e-6, atol=0)) for v in values)
        mode = DISCRETE if on_grid else CONTINUOUS
    if mode == CONTINUOUS:
        # analyse exactly what was given, even outside the optimizer's bounds
        ev = evaluate_areas(problem.model, problem.constraints, problem.penalty, problem.areas(values))
    else:
        ev = problem.objective(mode).evaluate(values)
    c = problem.constraints
    return DesignReport(
        problem.id, mode, values.tolist(), ev.weight, ev.penalized, ev.feasible,
        ev.stress_ratio, ev.displacement_ratio, c.stress, c.displacement, problem.weight_unit, ev.stable,
    )


# --------------------------------------------------------------------------- ranking

RANK_COLUMNS = ("best", "mean", "evaluations", "std", "tuning", "total")


@dataclass
class RankingTable:
    algorithms: list[str]
    best: list[float]
    mean: list[float]
    evaluations: list[float]  # evaluations / 10000
    std: list[float]
    tuning: list[float]

    @property
    def total(self) -> list[float]:
        return [round(sum(c), 10) for c in zip(self.best, self.mean, self.evaluations, self.std, self.tuning)]

    def row(self, algorithm: str) -> dict:
        i = self.algorithms.index(algorithm)
        return {k: getattr(self, k)[i] for k in RANK_COLUMNS}

    def format(self) -> str:
        w = max(8, *(len(a) for a in self.algorithms))
        out = ["criterion".ljust(12) + "".join(a.rjust(w + 2) for a in self.algorithms)]
        for k in RANK_COLUMNS:
            out.append(k.ljust(12) + "".join(f"{v:g}".rjust(w + 2) for v in getattr(self, k)))
        return "\n".join(out)


def _get(entry, key):
    return entry[key] if isinstance(entry, Mapping) else getattr(entry, key)


def build_ranking(campaigns: Mapping[str, object], tuning_counts: Mapping[str, float]) -> RankingTable:
    """
    Rank algorithms on best, mean and standard deviation (1 = smallest, ties
    share the lower rank) and add evaluations/10000 and the tuning count.

    Each entry needs ``best``, ``mean``, ``std`` and ``evaluations``; a
    CampaignStats works, as does a plain mapping.
    """
    names = list(campaigns)
    if len(names) < 2:
        raise ValueError("ranking needs at least two algorithms")

    def ranks(key):
        v = np.array([_get(campaigns[n], key) for n in names], dtype=float)
        v = np.where(np.isnan(v), np.inf, v)
        return [float(r) for r in rankdata(v, method="min")]

    return RankingTable(
        algorithms=names,
        best=ranks("best"),
        mean=ranks("mean"),
        evaluations=[_get(campaigns[n], "evaluations") / 10000 for n in names],
        std=ranks("std"),
        tuning=[float(tuning_counts[n]) for n in names],
    )


# --------------------------------------------------------------------------- reports

def version_string() -> str:
    from importlib.metadata import PackageNotFoundError, version

    try:
        out = subprocess.run(["git", "describe", "--always", "--dirty", "--tags"], capture_output=True,
                             text=True, cwd=Path(__file__).parent, timeout=5)
        if out.returncode == 0 and out.stdout.strip():
            return out.stdout.strip()
    except (OSError, subprocess.SubprocessError):
        pass
    try:
        return version("artifact")
    except PackageNotFoundError:
        return "unknown"


def _fmt(x: float) -> str:
    return repr(float(x))


def _metadata(c: Campaign) -> dict:
    cfg = asdict(c.config)
    cfg.pop("out")
    params = asdict(c.params)
    return {
        "version": version_string(),
        "config": cfg,
        "params": params,
        "seeds": [r.seed for r in c.records],
        "units": c.problem.units,
    }


def _csv_text(c: Campaign) -> str:
    meta = _metadata(c)
    m = c.problem.n_vars
    buf = io.StringIO()
    for key, value in meta.items():
        buf.write(f"# {key}: {json.dumps(value, sort_keys=True)}\n")
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(RUN_COLUMNS + [f"v{j + 1}" for j in range(m)])
    for r in c.records:
        w.writerow([r.seed, r.evaluations, _fmt(r.best_weight), _fmt(r.best_penalized), int(r.feasible)]
                   + [_fmt(v) for v in r.best_design])
    s = c.stats
    for label, value in (("best", s.best), ("mean", s.mean), ("std", s.std)):
        w.writerow([label, "", _fmt(value), "", ""] + [""] * m)
    w.writerow(["feasible_runs", "", s.n_feasible, "", ""] + [""] * m)
    w.writerow(["runs", s.evaluations, s.n_runs, "", ""] + [""] * m)
    return buf.getvalue()


def _json_text(c: Campaign) -> str:
    doc = _metadata(c)
    s = asdict(c.stats)
    s.pop("wall_time")
    doc["stats"] = s
    doc["runs"] = [
        {"seed": r.seed, "evals": r.evaluations, "best_weight": r.best_weight,
         "best_penalized": r.best_penalized, "feasible": r.feasible,
         "design": [float(v) for v in r.best_design]}
        for r in c.records
    ]
    return json.dumps(doc, indent=2, sort_keys=True, allow_nan=True) + "\n"


def emit_report(campaign: Campaign, path: str | os.PathLike, format: str = "csv",
                history: bool = False) -> Path:
    """
    Write the campaign to ``path`` as CSV or JSON.

    With ``history`` a sidecar ``<stem>.history.csv`` holds the best-so-far
    value per iteration of every run.
    """
    if format not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    path = Path(path)
    text = _csv_text(campaign) if format == "csv" else _json_text(campaign)
    try:
        path.write_text(text)
        if history:
            side = path.with_name(path.stem + ".history.csv")
            rows = ["seed,iteration,best"]
            for r in campaign.records:
                rows += [f"{r.seed},{k},{_fmt(v)}" for k, v in enumerate(r.history)]
            side.write_text("\n".join(rows) + "\n")
    except OSError as exc:
        raise OSError(f"cannot write report to {path}: {exc.strerror or exc}") from exc
    return path


@dataclass
class Report:
    metadata: dict
    runs: list[dict]
    stats: CampaignStats = field(repr=False)


def read_report(path: str | os.PathLike) -> Report:
    """Parse a file written by ``emit_report`` (format chosen by content)."""
    text = Path(path).read_text()
    if text.lstrip().startswith("{"):
        doc = json.loads(text)
        s = doc.pop("stats")
        runs = doc.pop("runs")
        return Report(doc, runs, CampaignStats(**s))
    meta, body = {}, []
    for line in text.splitlines():
        if line.startswith("# "):
            key, _, value = line[2:].partition(": ")
            meta[key] = json.loads(value)
        else:
            body.append(line)
    rows = list(csv.reader(body))
    header, rows = rows[0], rows[1:]
    runs, summary = [], {}
    for row in rows:
        if row[0].lstrip("-").isdigit():
            runs.append({
                "seed": int(row[0]), "evals": int(row[1]), "best_weight": float(row[2]),
                "best_penalized": float(row[3]), "feasible": bool(int(row[4])),
                "design": [float(v) for v in row[5:]],
            })
        else:
            summary[row[0]] = row
    stats = CampaignStats(
        best=float(summary["best"][2]), mean=float(summary["mean"][2]), std=float(summary["std"][2]),
        n_runs=int(summary["runs"][2]), n_feasible=int(summary["feasible_runs"][2]),
        evaluations=int(summary["runs"][1]),
    )
    return Report(meta, runs, stats)
