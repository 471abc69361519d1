import numpy as np
import pytest

from trussopt.baselines import DeParams, PsoParams, de_run, pso_run
from trussopt.objective import FunctionProblem


class Recorder(FunctionProblem):
    """Sphere problem that keeps every evaluated point."""

    def __init__(self, dim=2, lo=-5.0, hi=5.0):
        super().__init__(lambda x: float(np.sum(x**2)), [lo] * dim, [hi] * dim)
        self.points = []

    def evaluate(self, values):
        self.points.append(np.array(values, dtype=float))
        return super().evaluate(values)


def test_de_sphere_statistics():
    hits = sum(de_run(Recorder(), DeParams(12, 0.9, 0.5, 2000), seed=s).best_penalized < 1e-4 for s in range(100))
    assert hits >= 95


def test_pso_sphere_statistics():
    hits = sum(pso_run(Recorder(), PsoParams(population=12, budget=2000), seed=s).best_penalized < 1e-3
               for s in range(100))
    assert hits >= 90


def test_de_degenerate_parameters_shuffle_coordinates():
    p = Recorder(dim=4)
    r = de_run(p, DeParams(6, 0.0, 0.0, 120), seed=1)
    initial = np.array(p.points[:6])
    for x in p.points[6:]:
        for j in range(4):
            assert x[j] in initial[:, j]
    assert np.all(np.diff(r.history) <= 0)


def test_de_trials_differ_from_target_in_one_component_when_cr_zero():
    p = Recorder(dim=5)
    de_run(p, DeParams(8, 0.0, 0.7, 16), seed=4)
    targets, trials = np.array(p.points[:8]), np.array(p.points[8:16])
    diff = np.sum(trials != targets, axis=1)
    assert np.all(diff == 1)


def test_de_budget_and_determinism():
    a = de_run(Recorder(3), DeParams(12, 0.5, 0.6, 1000), seed=2)
    b = de_run(Recorder(3), DeParams(12, 0.5, 0.6, 1000), seed=2)
    assert a.same_as(b) and a.evaluations == 1000
    c = de_run(Recorder(3), DeParams(12, 0.5, 0.6, 1001), seed=2)
    assert c.evaluations == 1001
    with pytest.raises(ValueError):
        de_run(Recorder(), DeParams(12, 0.5, 0.6, 20))


def test_pso_zero_coefficients_freeze_swarm():
    p = Recorder(dim=3)
    pso_run(p, PsoParams(population=5, inertia=0.0, cognitive=0.0, social=0.0, budget=50), seed=0)
    pts = np.array(p.points)
    for k in range(1, 10):
        np.testing.assert_array_equal(pts[5 * k:5 * k + 5], pts[:5])


def test_pso_velocity_clamp_and_budget():
    for seed in range(20):
        p = Recorder(dim=4, lo=0.0, hi=3.0)
        r = pso_run(p, PsoParams(population=7, budget=503, vmax=0.2), seed=seed)
        assert r.extra["max_speed_ratio"] <= 1.0 + 1e-12
        assert r.evaluations == 503
        assert np.all(np.diff(r.history) <= 0)
        pts = np.array(p.points)
        assert np.all(pts >= 0) and np.all(pts <= 3)
        steps = np.abs(pts[7:] - pts[:-7])
        assert np.all(steps <= 0.2 + 1e-12)


def test_pso_determinism():
    a = pso_run(Recorder(), PsoParams(population=8, budget=400), seed=5)
    b = pso_run(Recorder(), PsoParams(population=8, budget=400), seed=5)
    assert a.same_as(b)


def test_param_validation():
    for kw in (dict(population=3), dict(crossover=1.5), dict(mutation=-0.1)):
        with pytest.raises(ValueError):
            DeParams(**kw)
    with pytest.raises(ValueError):
        PsoParams(vmax=0.0)
    with pytest.raises(ValueError):
        PsoParams(population=0)
