"""
Spontaneous fruit-fly optimisation (s-FOA).

Every design variable j of fly i is carried as a planar pair (X_ij, Y_ij); the
candidate value is the smell concentration 1 / sqrt(X^2 + Y^2). Each iteration
the swarm is scattered around the best fly, flies that got worse fall back to
their previous position, and every ``delay + 1`` iterations the swarm either
contracts its search radius (the best value improved) or moves its centre of
attraction to a randomly picked fly (it stagnated).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from .objective import Evaluation, as_objective
from .record import BestTracker, RunRecord

SPONTANEOUS = "spontaneous"
BEST_ONLY = "best-only"

D_MIN = 1e-12


@dataclass(frozen=True)
class SfoaParams:
    population: int = 10
    delay: int = 5
    radius: float = 0.95
    contraction: float = 0.9
    resolution: int = 10
    budget: int = 2000
    attraction: str = SPONTANEOUS

    def __post_init__(self) -> None:
        if self.population < 2:
            raise ValueError("population must be at least 2")
        if not 0 < self.contraction < 1:
            raise ValueError("contraction factor must lie in (0, 1)")
        if self.delay < 1 or self.resolution < 1:
            raise ValueError("delay and resolution must be >= 1")
        if not self.radius > 0:
            raise ValueError("initial radius must be positive")
        if self.attraction not in (SPONTANEOUS, BEST_ONLY):
            raise ValueError(f"unknown attraction mode {self.attraction!r}")

    @property
    def max_iterations(self) -> int:
        return self.budget // self.population


# Scalar settings of the contrast-based predecessor; run it through the
# best-only attraction mode.
CFOA_SETTINGS = dict(delay=320, radius=0.95, resolution=50, contraction=0.92, attraction=BEST_ONLY)


@dataclass
class SwarmState:
    X: NDArray  # (N, m)
    Y: NDArray
    values: NDArray  # smell-derived design values, clamped to bounds
    fitness: NDArray  # penalized objective per fly
    evaluations: list  # Evaluation per fly
    centre_X: NDArray  # (m,)
    centre_Y: NDArray
    centre_values: NDArray
    centre_fitness: float
    radius: float
    timer: int = 0
    iteration: int = 0
    centre_history: deque = field(default_factory=deque)  # centre value per iteration, last delay+1
    surges: int = 0
    contrasts: int = 0

    @property
    def best_index(self) -> int:
        return int(np.argmin(self.fitness))

    @property
    def best_fitness(self) -> float:
        return float(np.min(self.fitness))


def quantized_uniform(rng: np.random.Generator, resolution: int, size=None):
    """Uniform draw on the grid ``{-1, -1 + 2/N_res, ..., 1}`` (N_res + 1 levels)."""
    if resolution < 1:
        raise ValueError("resolution must be >= 1")
    q = rng.integers(0, resolution + 1, size=size)
    return 2.0 * (q / resolution) - 1.0


def smell(X, Y, lower=None, upper=None):
    """
    Smell concentration ``1 / sqrt(X^2 + Y^2)``, optionally clamped to bounds.

    A distance below 1e-12 maps to the upper bound (or ``inf`` when unbounded).
    """
    X = np.asarray(X, dtype=float)
    Y = np.asarray(Y, dtype=float)
    D = np.hypot(X, Y)
    with np.errstate(divide="ignore"):
        DI = np.where(D < D_MIN, np.inf, 1.0 / np.where(D < D_MIN, 1.0, D))
    if lower is not None or upper is not None:
        DI = np.clip(DI, lower, upper)
    return DI if DI.ndim else float(DI)


def seed_coordinates(x0) -> tuple[NDArray, NDArray]:
    """Planar pair whose smell concentration equals ``x0`` exactly (X = Y)."""
    x0 = np.asarray(x0, dtype=float)
    c = 1.0 / (x0 * np.sqrt(2.0))
    return c.copy(), c.copy()


def _evaluate_swarm(problem, values: NDArray, tracker: BestTracker) -> tuple[NDArray, list[Evaluation]]:
    # fly-index order keeps the run reproducible
    evals = [problem.evaluate(v) for v in values]
    for ev, v in zip(evals, values):
        tracker.offer(ev, v)
    return np.array([ev.penalized for ev in evals]), evals


def init_swarm(params: SfoaParams, problem, rng: np.random.Generator, x0=None,
               tracker: BestTracker | None = None) -> SwarmState:
    """Scatter N flies around the seed design and evaluate them."""
    lower, upper = problem.lower, problem.upper
    if x0 is None:
        x0 = 0.5 * (lower + upper)
    x0 = np.clip(np.asarray(x0, dtype=float), lower, upper)
    X0, Y0 = seed_coordinates(x0)
    N, m = params.population, len(x0)
    M = params.radius
    X = X0 * (1.0 + M * quantized_uniform(rng, params.resolution, (N, m)))
    Y = Y0 * (1.0 + M * quantized_uniform(rng, params.resolution, (N, m)))
    values = smell(X, Y, lower, upper)
    fitness, evals = _evaluate_swarm(problem, values, tracker or BestTracker())
    state = SwarmState(
        X=X, Y=Y, values=values, fitness=fitness, evaluations=evals,
        centre_X=X0, centre_Y=Y0, centre_values=x0, centre_fitness=float("inf"),
        radius=M, centre_history=deque(maxlen=params.delay + 1),
    )
    select_centre(state)
    state.centre_history.append(state.centre_fitness)
    return state


def select_centre(state: SwarmState) -> SwarmState:
    """Move the centre of attraction to the best fly if it is strictly better."""
    i = state.best_index
    if state.fitness[i] < state.centre_fitness:
        state.centre_X = state.X[i].copy()
        state.centre_Y = state.Y[i].copy()
        state.centre_values = state.values[i].copy()
        state.centre_fitness = float(state.fitness[i])
    return state


def phase_step(state: SwarmState, params: SfoaParams, rng: np.random.Generator) -> SwarmState:
    """
    Advance the response timer; once it exceeds the delay, either surge
    (contract the radius) or jump the centre to a random fly.
    """
    state.timer += 1
    if state.timer > params.delay:
        window_start = state.centre_history[0]  # centre value `delay` iterations ago
        if state.best_fitness < window_start:
            state.radius *= params.contraction
            state.surges += 1
        else:
            r = int(rng.integers(len(state.fitness)))
            state.centre_X = state.X[r].copy()
            state.centre_Y = state.Y[r].copy()
            state.centre_values = state.values[r].copy()
            state.centre_fitness = float(state.fitness[r])
            state.contrasts += 1
        state.timer = 0
    return state


def casting_revert(state: SwarmState, previous: SwarmState) -> SwarmState:
    """Flies whose fitness got worse return to their previous position and fitness."""
    worse = state.fitness > previous.fitness
    if np.any(worse):
        state.X[worse] = previous.X[worse]
        state.Y[worse] = previous.Y[worse]
        state.values[worse] = previous.values[worse]
        state.fitness[worse] = previous.fitness[worse]
        for i in np.flatnonzero(worse):
            state.evaluations[i] = previous.evaluations[i]
    return state


def reposition(state: SwarmState, params: SfoaParams, rng: np.random.Generator) -> tuple[NDArray, NDArray]:
    """
    New coordinates anchored at the best fly, perturbed by the mean of the
    centre and a randomly drawn fly, scaled by the radius.
    """
    N, m = state.X.shape
    b = state.best_index
    if params.attraction == SPONTANEOUS:
        r = rng.integers(0, N, size=(N, m))
        cols = np.arange(m)
        scale_X = 0.5 * (state.centre_X + state.X[r, cols])
        scale_Y = 0.5 * (state.centre_Y + state.Y[r, cols])
    else:
        scale_X = np.broadcast_to(state.centre_X, (N, m))
        scale_Y = np.broadcast_to(state.centre_Y, (N, m))
    M = state.radius
    uX = quantized_uniform(rng, params.resolution, (N, m))
    uY = quantized_uniform(rng, params.resolution, (N, m))
    X = state.X[b] + scale_X * M * uX
    Y = state.Y[b] + scale_Y * M * uY
    return X, Y


def _snapshot(state: SwarmState) -> SwarmState:
    return SwarmState(
        X=state.X.copy(), Y=state.Y.copy(), values=state.values.copy(),
        fitness=state.fitness.copy(), evaluations=list(state.evaluations),
        centre_X=state.centre_X, centre_Y=state.centre_Y, centre_values=state.centre_values,
        centre_fitness=state.centre_fitness, radius=state.radius,
    )


def run(problem, params: SfoaParams, mode: str | None = None, seed: int = 0, x0=None) -> RunRecord:
    """Optimize ``problem`` within ``params.budget`` evaluations."""
    problem = as_objective(problem, mode)
    if params.budget < params.population:
        raise ValueError("budget must allow at least one generation")
    rng = np.random.default_rng(seed)
    start = problem.evaluations
    tracker = BestTracker()
    state = init_swarm(params, problem, rng, x0, tracker)
    history = [tracker.value]
    radii = [state.radius]
    lower, upper = problem.lower, problem.upper

    for _ in range(params.max_iterations - 1):
        state.iteration += 1
        previous = _snapshot(state)
        state.X, state.Y = reposition(state, params, rng)
        state.values = smell(state.X, state.Y, lower, upper)
        state.fitness, state.evaluations = _evaluate_swarm(problem, state.values, tracker)
        casting_revert(state, previous)
        select_centre(state)
        state.centre_history.append(state.centre_fitness)
        phase_step(state, params, rng)
        history.append(tracker.value)
        radii.append(state.radius)

    name = "sfoa" if params.attraction == SPONTANEOUS else "sfoa-bestonly"
    return tracker.record(
        problem, seed, problem.evaluations - start, history, name,
        radii=radii, surges=state.surges, contrasts=state.contrasts,
    )
