import json
import math

import numpy as np
import pytest

from trussopt import cli, harness
from trussopt.harness import (
    CampaignStats,
    ExperimentConfig,
    build_ranking,
    emit_report,
    evaluate_design,
    read_report,
    run_campaign,
)
from trussopt.record import RunRecord

AEDE = [33.5, 1.62, 22.9, 14.2, 1.62, 1.62, 7.97, 22.9, 22.0, 1.62]


def small(algo="sfoa", runs=4, **kw):
    return ExperimentConfig("10bar", algo, "discrete", runs, kw.pop("seed", 7), kw.pop("budget", 200), **kw)


def _rec(seed, w, feasible=True):
    return RunRecord(seed, 10, w, w if feasible else w + 1, np.zeros(2), feasible, [w], "x", {})


# statistics

def test_stats_feasible_only_sample_std():
    recs = [_rec(0, 1.0), _rec(1, 2.0), _rec(2, 4.0), _rec(3, 0.5, feasible=False)]
    s = CampaignStats.from_records(recs)
    assert s.best == 1.0 and s.mean == pytest.approx(7 / 3)
    assert s.std == pytest.approx(np.std([1.0, 2.0, 4.0], ddof=1))
    assert (s.n_runs, s.n_feasible, s.n_infeasible) == (4, 3, 1)


def test_stats_single_run():
    s = CampaignStats.from_records([_rec(0, 3.0)])
    assert s.mean == s.best == 3.0 and s.std == 0.0


def test_stats_permutation_invariant():
    recs = [_rec(i, w) for i, w in enumerate([5.0, 1.0, 3.0, 2.5])]
    a = CampaignStats.from_records(recs)
    b = CampaignStats.from_records(recs[::-1])
    assert (a.best, a.mean, a.std) == (b.best, b.mean, b.std)


def test_config_validation():
    for kw in (dict(algorithm="ga"), dict(mode="mixed"), dict(runs=0), dict(budget=0), dict(format="xml")):
        with pytest.raises(ValueError):
            ExperimentConfig("10bar", **kw)


# campaigns

@pytest.mark.parametrize("algo", harness.ALGORITHMS)
def test_campaign_determinism_and_budget(algo):
    a, b = run_campaign(small(algo)), run_campaign(small(algo))
    assert [r.seed for r in a.records] == [7, 8, 9, 10]
    assert all(x.same_as(y) for x, y in zip(a.records, b.records))
    assert (a.stats.best, a.stats.mean, a.stats.std) == (b.stats.best, b.stats.mean, b.stats.std)
    assert all(r.evaluations <= 200 for r in a.records)
    if a.stats.n_feasible:
        assert a.stats.best <= a.stats.mean


def test_parallel_campaign_matches_serial(tmp_path):
    cfg = small(runs=3)
    serial, parallel = run_campaign(cfg, workers=1), run_campaign(cfg, workers=2)
    assert all(x.same_as(y) for x, y in zip(serial.records, parallel.records))
    p1, p2 = tmp_path / "a.csv", tmp_path / "b.csv"
    emit_report(serial, p1)
    emit_report(parallel, p2)
    assert p1.read_bytes() == p2.read_bytes()


def test_failed_run_is_recorded(monkeypatch):
    def boom(*args):
        raise RuntimeError("solver exploded")

    monkeypatch.setattr(harness, "run_algorithm", boom)
    c = run_campaign(small(runs=2))
    assert len(c.records) == 2 and all("solver exploded" in r.extra["error"] for r in c.records)
    assert c.stats.n_feasible == 0


# reports

def test_csv_round_trip(tmp_path):
    c = run_campaign(small(runs=5))
    path = emit_report(c, tmp_path / "r.csv", history=True)
    rep = read_report(path)
    assert len(rep.runs) == 5
    assert rep.metadata["seeds"] == [7, 8, 9, 10, 11]
    assert rep.metadata["config"]["algorithm"] == "sfoa" and "version" in rep.metadata
    for k in ("best", "mean", "std", "n_runs", "n_feasible", "evaluations"):
        a, b = getattr(rep.stats, k), getattr(c.stats, k)
        assert (math.isnan(a) and math.isnan(b)) or a == b
    feasible = [r["best_weight"] for r in rep.runs if r["feasible"]]
    if feasible:
        assert abs(np.mean(feasible) - rep.stats.mean) <= 1e-9 * abs(rep.stats.mean)
        if len(feasible) > 1:
            assert abs(np.std(feasible, ddof=1) - rep.stats.std) <= 1e-9 * max(1.0, rep.stats.std)
    assert all(r["evals"] <= 200 for r in rep.runs)
    header = path.read_text().splitlines()[5]
    assert header.startswith("seed,evals,best_weight,best_penalized,feasible,v1,")
    hist = (tmp_path / "r.history.csv").read_text().splitlines()
    assert hist[0] == "seed,iteration,best" and len(hist) > 5


def test_json_round_trip(tmp_path):
    c = run_campaign(small("de", runs=3))
    rep = read_report(emit_report(c, tmp_path / "r.json", "json"))
    assert len(rep.runs) == 3 and rep.stats.n_runs == 3
    assert rep.runs[0]["best_weight"] == c.records[0].best_weight


def test_thirty_run_report_has_thirty_rows(tmp_path):
    c = run_campaign(small(runs=30, budget=20))
    assert len(read_report(emit_report(c, tmp_path / "r.csv")).runs) == 30


def test_report_io_error_names_path(tmp_path):
    c = run_campaign(small(runs=1, budget=20))
    with pytest.raises(OSError, match="missing"):
        emit_report(c, tmp_path / "missing" / "r.csv")


# design evaluation

def test_evaluate_design_examples():
    r = evaluate_design("10bar", AEDE)
    assert r.mode == "discrete" and r.feasible and r.weight == pytest.approx(5490.738, rel=1e-3)
    r = evaluate_design("10bar", [1.62] * 10)
    assert not r.feasible and r.displacement_margin < 0
    assert "displacement" in r.format()
    with pytest.raises(ValueError):
        evaluate_design("10bar", [1.0] * 3)


# ranking

def test_ranking_ties_and_totals():
    stats = {"a": dict(best=1, mean=2, std=3, evaluations=2000), "b": dict(best=1, mean=2, std=3, evaluations=2000),
             "c": dict(best=0, mean=5, std=1, evaluations=2000)}
    t = build_ranking(stats, {"a": 3, "b": 3, "c": 5})
    assert t.best == [2.0, 2.0, 1.0] and t.mean == [1.0, 1.0, 3.0]
    assert t.total[0] == t.total[1]
    for i in range(3):
        assert t.total[i] == pytest.approx(t.best[i] + t.mean[i] + t.evaluations[i] + t.std[i] + t.tuning[i])
    with pytest.raises(ValueError):
        build_ranking({"a": stats["a"]}, {"a": 1})


def test_ranking_de_column_sums_to_its_entries():
    # the published DE total is 16.2, but its own column (4, 5, 0.2, 5, 5) sums to 19.2
    cols = {"DE": (4, 5, 5, 5), "PSO": (3, 2, 3, 3), "GA": (6, 6, 6, 3), "TLBO": (5, 4, 4, 3),
            "cFOA": (2, 3, 2, 3), "s-FOA": (1, 1, 1, 3)}
    stats = {k: dict(best=b, mean=m, std=s, evaluations=2000) for k, (b, m, s, _) in cols.items()}
    t = build_ranking(stats, {k: v[3] for k, v in cols.items()})
    assert t.row("DE")["total"] == pytest.approx(19.2)


# command line

def test_cli_eval_and_validate(capsys):
    assert cli.main(["eval", "--problem", "10bar", *map(str, AEDE)]) == 0
    out = capsys.readouterr().out
    assert "5490.7" in out and "feasible     yes" in out
    assert cli.main(["eval", "--problem", "10bar", "1", "2"]) == 2
    assert cli.main(["validate", "--problem", "10bar"]) == 0
    assert cli.main(["validate", "--problem", "nope"]) == 1


def test_cli_run_and_rank(tmp_path, capsys):
    out = tmp_path / "c.csv"
    code = cli.main(["run", "--problem", "10bar", "--algo", "pso", "--mode", "discrete", "--runs", "2",
                     "--seed", "3", "--budget", "100", "--out", str(out), "--format", "csv"])
    assert code == 0 and len(read_report(out).runs) == 2
    stats = tmp_path / "s.json"
    stats.write_text(json.dumps({"x": dict(best=1, mean=1, std=1, evaluations=2000, tuning=3),
                                 "y": dict(best=2, mean=2, std=2, evaluations=2000, tuning=3)}))
    assert cli.main(["rank", str(stats)]) == 0
    assert "total" in capsys.readouterr().out
