import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from trussopt.fem import InvalidDesignError, analyze
from trussopt.objective import (
    CONTINUOUS,
    DISCRETE,
    G_MAX,
    ConstraintSpec,
    DesignSpace,
    Objective,
    PenaltyConfig,
    decode,
    encode,
    evaluate,
    evaluate_areas,
    nearest_index,
    penalize,
    violations,
)
from trussopt.fem import LoadCase, TrussModel

AEDE = [33.5, 1.62, 22.9, 14.2, 1.62, 1.62, 7.97, 22.9, 22.0, 1.62]


def direct_penalty(W, g, h, lam, eps):
    total = W
    for gi in g:
        total += lam * max(0.0, gi) ** 2
    for hi in h:
        total += lam * (max(0.0, abs(hi)) - eps) ** 2
    return total


# penalty

def test_penalty_examples():
    assert penalize(100.0, [0.0, 0.0]) == 100.0
    assert penalize(100.0, [0.1]) == pytest.approx(1100.0, rel=1e-12)
    assert penalize(7.0, [0.2, 0.3]) == pytest.approx(7.0 + 13000.0, rel=1e-12)


def test_penalty_matches_direct_formula_on_random_vectors():
    rng = np.random.default_rng(11)
    cfg = PenaltyConfig()
    for _ in range(1000):
        W = rng.uniform(0, 1e4)
        g = np.maximum(0.0, rng.normal(0, 0.3, rng.integers(1, 40)))
        h = rng.uniform(2e-6, 1.0, rng.integers(0, 4)) * rng.choice([-1, 1])
        f = penalize(W, g, cfg, h)
        ref = direct_penalty(W, g, h, cfg.penalty, cfg.tolerance)
        assert abs(f - ref) <= 1e-12 * max(1.0, abs(ref))


@settings(max_examples=300, deadline=None)
@given(st.floats(0, 1e4), st.lists(st.floats(0, 5), min_size=1, max_size=20), st.data())
def test_penalty_strictly_increases_with_any_single_violation(W, g, data):
    j = data.draw(st.integers(0, len(g) - 1))
    bump = data.draw(st.floats(1e-3, 5))
    g2 = list(g)
    g2[j] += bump
    assert penalize(W, g2) > penalize(W, g)


def test_violation_normalization():
    m = TrussModel([[0, 0], [1, 0]], [(0, 1)], [(0, 0), (0, 1), (1, 1)], 1.0, 1.0, [LoadCase(((1, 0, 27.5),))])
    r = analyze(m, [1.0])
    g = violations(m, r, ConstraintSpec(25.0))
    np.testing.assert_allclose(g, [0.1], rtol=1e-12)
    assert np.all(violations(m, r, ConstraintSpec(30.0)) == 0)


def test_no_displacement_limit_gives_stress_terms_only(problems):
    p = problems("52bar")
    r = analyze(p.model, np.full(p.n_members, 1000.0))
    assert violations(p.model, r, p.constraints).shape == (p.n_members * len(p.model.load_cases),)


# decoding

def test_grouped_decode(problems):
    p = problems("25bar")
    areas = decode(p.space, np.arange(1, 9, dtype=float) * 0.2)
    assert areas.shape == (25,)
    assert np.all(areas[1:5] == areas[1])
    assert areas[0] != areas[1]


def test_continuous_decode_clamps(problems):
    p = problems("10bar")
    x = np.full(10, 20.0)
    x[3] = -5.0
    assert decode(p.space, x, CONTINUOUS)[3] == p.space.lower[3]


def test_discrete_decode(problems):
    p = problems("10bar")
    assert decode(p.space, np.zeros(10, dtype=int), DISCRETE)[0] == 1.62
    with pytest.raises(InvalidDesignError):
        decode(p.space, np.full(10, 41), DISCRETE)
    with pytest.raises(InvalidDesignError):
        decode(p.space, np.full(10, -1), DISCRETE)


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(0, 40), min_size=10, max_size=10))
def test_encode_decode_roundtrip(idx):
    from trussopt.benchmarks import load_problem

    space = load_problem("10bar").space
    values = space.discrete[idx]
    np.testing.assert_array_equal(encode(space, values), idx)
    np.testing.assert_array_equal(decode(space, encode(space, values), DISCRETE), values[space.group_map])


def test_nearest_index_ties_go_low():
    S = np.array([1.0, 2.0, 4.0])
    np.testing.assert_array_equal(nearest_index(S, [1.5, 3.0, 0.0, 9.0, 2.9]), [0, 1, 0, 2, 1])


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 7), st.floats(0.11, 3.3))
def test_group_consistency(j, v):
    from trussopt.benchmarks import load_problem

    space = load_problem("25bar").space
    base = np.full(8, 1.0)
    x = base.copy()
    x[j] = v
    changed = decode(space, x) != decode(space, base)
    if v != 1.0:
        np.testing.assert_array_equal(changed, space.group_map == j)


def test_space_validation():
    with pytest.raises(ValueError):
        DesignSpace([0, 1], [1.0, 1.0], [0.5, 2.0])
    with pytest.raises(ValueError):
        DesignSpace([0, 2], 0.1, 1.0)
    with pytest.raises(ValueError):
        DesignSpace([0], 1.0, 3.0, [1.0, 3.0, 2.0])
    with pytest.raises(ValueError):
        ConstraintSpec(-1.0)
    with pytest.raises(ValueError):
        PenaltyConfig(0.0)


# evaluation

def test_reference_design_feasible(problems):
    p = problems("10bar")
    ev = evaluate(p.model, p.space, p.constraints, PenaltyConfig(), encode(p.space, AEDE), DISCRETE)
    assert ev.feasible and ev.penalized == ev.weight
    assert ev.weight == pytest.approx(5490.738, abs=0.1)


def test_minimum_area_design_is_infeasible(problems):
    p = problems("10bar")
    areas = np.full(10, 1.62)
    r = analyze(p.model, areas)
    assert r.max_abs_displacement() > 2.0  # derived directly from the analysis
    ev = evaluate(p.model, p.space, p.constraints, PenaltyConfig(), np.zeros(10, dtype=int), DISCRETE)
    assert not ev.feasible and ev.penalized > ev.weight


def test_instability_is_capped_penalty():
    m = TrussModel([[0, 0], [1, 0], [2, 0]], [(0, 1), (1, 2)],
                   [(0, 0), (0, 1), (2, 0), (2, 1)], 1.0, 1.0, [LoadCase(((1, 1, 1.0),))])
    ev = evaluate_areas(m, ConstraintSpec(1.0), PenaltyConfig(), np.ones(2))
    assert not ev.stable and not ev.feasible
    assert ev.penalized == pytest.approx(ev.weight + 1e5 * G_MAX**2)


def test_evaluation_invariants_and_determinism(problems):
    p = problems("25bar")
    obj = Objective(p.model, p.space, p.constraints, DISCRETE)
    rng = np.random.default_rng(0)
    for _ in range(200):
        x = rng.uniform(p.space.lower, p.space.upper)
        a, b = obj.evaluate(x), obj.evaluate(x)
        assert a.penalized == b.penalized and a.weight == b.weight
        assert a.feasible == (not np.any(a.violations > 0)) == (a.penalized == a.weight)
    assert obj.evaluations == 400


def test_discrete_objective_snaps_to_set(problems):
    p = problems("10bar")
    obj = Objective(p.model, p.space, p.constraints, DISCRETE)
    x = np.array(AEDE) + 0.01
    assert obj.evaluate(x).weight == pytest.approx(5490.738, abs=0.1)
    assert set(obj.snap(x)) <= set(p.space.discrete)
