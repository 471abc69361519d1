"""Reference optimizers: DE/rand/1/bin and inertia-weight PSO on the shared objective."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .objective import as_objective
from .record import BestTracker, RunRecord


@dataclass(frozen=True)
class DeParams:
    population: int = 12
    crossover: float = 0.2368
    mutation: float = 0.6702
    budget: int = 2000

    def __post_init__(self) -> None:
        if self.population < 4:
            raise ValueError("DE needs a population of at least 4")
        if not 0.0 <= self.crossover <= 1.0:
            raise ValueError("crossover probability must lie in [0, 1]")
        if self.mutation < 0:
            raise ValueError("mutation factor must be non-negative")

    @property
    def generations(self) -> float:
        return self.budget / self.population


@dataclass(frozen=True)
class PsoParams:
    population: int = 12
    inertia: float = 0.8
    cognitive: float = 1.5
    social: float = 2.0
    budget: int = 2000
    vmax: float | tuple | None = None  # defaults to the upper bound per variable

    def __post_init__(self) -> None:
        if self.population < 1:
            raise ValueError("PSO needs at least one particle")
        if self.vmax is not None and not np.all(np.asarray(self.vmax) > 0):
            raise ValueError("vmax must be positive")


def de_run(problem, params: DeParams, mode: str | None = None, seed: int = 0) -> RunRecord:
    """
    Classic DE/rand/1/bin with bound clamping and greedy one-to-one selection.

    Stops as soon as the budget is spent, so the last generation may be partial.
    """
    problem = as_objective(problem, mode)
    N, budget = params.population, params.budget
    if budget < 2 * N:
        raise ValueError("DE budget must cover at least two generations")
    rng = np.random.default_rng(seed)
    lower, upper = problem.lower, problem.upper
    dim = len(lower)
    start = problem.evaluations
    tracker = BestTracker()

    pop = lower + rng.random((N, dim)) * (upper - lower)
    fit = np.empty(N)
    for i in range(N):
        ev = problem.evaluate(pop[i])
        fit[i] = ev.penalized
        tracker.offer(ev, pop[i])
    used = N
    history = [tracker.value]

    idx = np.arange(N)
    while used < budget:
        trials = np.empty_like(pop)
        for i in range(N):
            r1, r2, r3 = rng.choice(idx[idx != i], size=3, replace=False)
            mutant = pop[r1] + params.mutation * (pop[r2] - pop[r3])
            cross = rng.random(dim) < params.crossover
            cross[rng.integers(dim)] = True
            trials[i] = np.clip(np.where(cross, mutant, pop[i]), lower, upper)
        trial_fit = np.full(N, np.inf)
        for i in range(N):
            if used >= budget:
                break
            ev = problem.evaluate(trials[i])
            used += 1
            trial_fit[i] = ev.penalized
            tracker.offer(ev, trials[i])
        better = trial_fit <= fit
        pop[better] = trials[better]
        fit[better] = trial_fit[better]
        history.append(tracker.value)

    return tracker.record(problem, seed, problem.evaluations - start, history, "de")


def pso_run(problem, params: PsoParams, mode: str | None = None, seed: int = 0) -> RunRecord:
    """Synchronous global-best PSO with per-component velocity and position clamping."""
    problem = as_objective(problem, mode)
    N, budget = params.population, params.budget
    if budget < N:
        raise ValueError("PSO budget must cover the initial swarm")
    rng = np.random.default_rng(seed)
    lower, upper = problem.lower, problem.upper
    dim = len(lower)
    vmax = np.broadcast_to(upper if params.vmax is None else np.asarray(params.vmax, float), (dim,))
    start = problem.evaluations
    tracker = BestTracker()

    x = lower + rng.random((N, dim)) * (upper - lower)
    v = np.zeros((N, dim))
    pbest = x.copy()
    pfit = np.empty(N)
    for i in range(N):
        ev = problem.evaluate(x[i])
        pfit[i] = ev.penalized
        tracker.offer(ev, x[i])
    used = N
    history = [tracker.value]
    max_speed = 0.0

    while used < budget:
        g = pbest[int(np.argmin(pfit))]
        rp = rng.random((N, dim))
        rg = rng.random((N, dim))
        v = params.inertia * v + params.cognitive * rp * (pbest - x) + params.social * rg * (g - x)
        v = np.clip(v, -vmax, vmax)
        max_speed = max(max_speed, float(np.max(np.abs(v) / vmax)))
        x = np.clip(x + v, lower, upper)
        for i in range(N):
            if used >= budget:
                break
            ev = problem.evaluate(x[i])
            used += 1
            tracker.offer(ev, x[i])
            if ev.penalized < pfit[i]:
                pfit[i] = ev.penalized
                pbest[i] = x[i]
        history.append(tracker.value)

    return tracker.record(
        problem, seed, problem.evaluations - start, history, "pso", max_speed_ratio=max_speed
    )
