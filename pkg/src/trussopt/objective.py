"""Penalized weight objective: decoding, constraint violations, and the penalty."""

from __future__ import annotations

import threading
from functools import lru_cache
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np
from numpy.typing import NDArray

from .fem import (
    AnalysisResult,
    InvalidDesignError,
    KinematicInstabilityError,
    TrussModel,
    analyze,
    weight,
)

CONTINUOUS = "continuous"
DISCRETE = "discrete"
MODES = (CONTINUOUS, DISCRETE)

# Violation charged when the stiffness matrix is singular.
G_MAX = 10.0


@dataclass(frozen=True)
class DesignSpace:
    """Design variables: member grouping, bounds, optional discrete area set."""

    group_map: NDArray
    lower: NDArray
    upper: NDArray
    discrete: NDArray | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "group_map", np.asarray(self.group_map, dtype=int))
        lower = np.asarray(self.lower, dtype=float)
        upper = np.asarray(self.upper, dtype=float)
        n = int(self.group_map.max()) + 1 if self.group_map.size else 0
        lower = np.broadcast_to(lower, (n,)).copy()
        upper = np.broadcast_to(upper, (n,)).copy()
        object.__setattr__(self, "lower", lower)
        object.__setattr__(self, "upper", upper)
        if np.any(self.group_map < 0):
            raise ValueError("group_map entries must be non-negative")
        if len(np.unique(self.group_map)) != n:
            raise ValueError("group_map must use every variable index 0..m-1")
        if not np.all(lower < upper):
            raise ValueError("bounds must satisfy lower < upper")
        if self.discrete is not None:
            s = np.asarray(self.discrete, dtype=float)
            if s.ndim != 1 or s.size < 2 or not np.all(np.diff(s) > 0):
                raise ValueError("discrete set must be strictly increasing")
            if not (np.all(lower == s[0]) and np.all(upper == s[-1])):
                raise ValueError("bounds must equal [min S, max S] when a discrete set is given")
            object.__setattr__(self, "discrete", s)

    @property
    def n_vars(self) -> int:
        return len(self.lower)

    @property
    def n_members(self) -> int:
        return len(self.group_map)


@dataclass(frozen=True)
class ConstraintSpec:
    stress: float
    displacement: float | None = None
    displacement_axes: tuple[int, ...] = (0, 1)
    buckling: bool = False  # hook only, never active in the shipped problems

    def __post_init__(self) -> None:
        if not self.stress > 0:
            raise ValueError("stress limit must be positive")
        if self.displacement is not None and not self.displacement > 0:
            raise ValueError("displacement limit must be positive")
        if self.buckling:
            raise NotImplementedError("buckling constraints are not supported")


@dataclass(frozen=True)
class PenaltyConfig:
    penalty: float = 1e5
    tolerance: float = 1e-6

    def __post_init__(self) -> None:
        if not (self.penalty > 0 and self.tolerance > 0):
            raise ValueError("penalty and tolerance must be positive")


@dataclass(frozen=True)
class Evaluation:
    weight: float
    penalized: float
    feasible: bool
    violations: NDArray = field(repr=False)
    stress_ratio: float = float("nan")
    displacement_ratio: float = float("nan")
    stable: bool = True


class EvaluationCounter:
    """Thread-safe count of objective calls."""

    def __init__(self) -> None:
        self._n = 0
        self._lock = threading.Lock()

    def increment(self, k: int = 1) -> int:
        with self._lock:
            self._n += k
            return self._n

    @property
    def value(self) -> int:
        return self._n


def nearest_index(discrete: NDArray, values) -> NDArray:
    """Index of the closest entry of the sorted set; exact ties go to the lower index."""
    values = np.asarray(values, dtype=float)
    hi = np.clip(np.searchsorted(discrete, values, side="left"), 1, len(discrete) - 1)
    lo = hi - 1
    take_hi = (discrete[hi] - values) < (values - discrete[lo])
    return np.where(take_hi, hi, lo)


def encode(space: DesignSpace, values, rtol: float = 1e-9) -> NDArray:
    """Map area values that are members of S to their indices."""
    if space.discrete is None:
        raise InvalidDesignError("design space has no discrete set")
    values = np.asarray(values, dtype=float)
    idx = nearest_index(space.discrete, values)
    bad = ~np.isclose(space.discrete[idx], values, rtol=rtol, atol=0.0)
    if np.any(bad):
        raise InvalidDesignError(f"values not in the discrete set: {values[bad].tolist()}")
    return idx


def decode(space: DesignSpace, x, mode: str = CONTINUOUS) -> NDArray:
    """Expand a variable vector into one area per member."""
    x = np.asarray(x)
    if x.shape != (space.n_vars,):
        raise InvalidDesignError(f"expected {space.n_vars} design variables, got shape {x.shape}")
    if mode == CONTINUOUS:
        values = np.clip(x.astype(float), space.lower, space.upper)
    elif mode == DISCRETE:
        if space.discrete is None:
            raise InvalidDesignError("discrete mode needs a discrete set")
        if not np.all(np.equal(np.mod(x, 1), 0)):
            raise InvalidDesignError("discrete designs are integer indices")
        idx = x.astype(int)
        if np.any(idx < 0) or np.any(idx >= len(space.discrete)):
            raise InvalidDesignError(f"index out of range 0..{len(space.discrete) - 1}")
        values = space.discrete[idx]
    else:
        raise ValueError(f"unknown mode {mode!r}")
    return values[space.group_map]


@lru_cache(maxsize=64)
def _monitored(model: TrussModel, axes: tuple[int, ...]) -> NDArray:
    """Mask of free DOFs whose axis carries a displacement limit."""
    return np.isin(model.free_dofs % model.dim, axes)


def violations(model: TrussModel, result: AnalysisResult, spec: ConstraintSpec) -> NDArray:
    """Normalized exceedances ``max(0, |r|/limit - 1)`` for every stress and monitored DOF."""
    parts = [np.maximum(0.0, np.abs(s) / spec.stress - 1.0) for s in result.stresses]
    if spec.displacement is not None:
        mask = _monitored(model, tuple(spec.displacement_axes))
        parts += [np.maximum(0.0, np.abs(u[mask]) / spec.displacement - 1.0) for u in result.displacements]
    return np.concatenate(parts) if parts else np.zeros(0)


def penalize(W: float, g, cfg: PenaltyConfig = PenaltyConfig(), h=()) -> float:
    g = np.asarray(g, dtype=float)
    f = W + cfg.penalty * float(np.sum(np.maximum(0.0, g) ** 2))
    h = np.asarray(h, dtype=float)
    if h.size:
        f += cfg.penalty * float(np.sum(np.maximum(0.0, np.abs(h) - cfg.tolerance) ** 2))
    return f


def _ratios(model: TrussModel, result: AnalysisResult, spec: ConstraintSpec) -> tuple[float, float]:
    s = result.max_abs_stress() / spec.stress
    if spec.displacement is None:
        return s, float("nan")
    mask = _monitored(model, tuple(spec.displacement_axes))
    d = max((float(np.max(np.abs(u[mask]))) for u in result.displacements if u[mask].size), default=0.0)
    return s, d / spec.displacement


def evaluate_areas(
    model: TrussModel, spec: ConstraintSpec, cfg: PenaltyConfig, areas: NDArray
) -> Evaluation:
    try:
        result = analyze(model, areas)
    except KinematicInstabilityError:
        W = weight(model, areas)
        g = np.array([G_MAX])
        return Evaluation(W, penalize(W, g, cfg), False, g, float("inf"), float("inf"), stable=False)
    g = violations(model, result, spec)
    f = penalize(result.weight, g, cfg)
    feasible = not np.any(g > 0)
    s, d = _ratios(model, result, spec)
    return Evaluation(result.weight, result.weight if feasible else f, feasible, g, s, d)


def evaluate(
    model: TrussModel,
    space: DesignSpace,
    spec: ConstraintSpec,
    cfg: PenaltyConfig,
    x,
    mode: str = CONTINUOUS,
    counter: EvaluationCounter | None = None,
) -> Evaluation:
    """decode -> analyze -> violations -> penalize, charging one evaluation."""
    areas = decode(space, x, mode)
    if counter is not None:
        counter.increment()
    return evaluate_areas(model, spec, cfg, areas)


class Objective:
    """
    Truss objective as seen by the optimizers.

    Optimizers search over real variable values inside ``[lower, upper]``. In
    discrete mode every value is snapped to the nearest member of the discrete
    set before analysis, so all algorithms share one decoding rule.
    """

    def __init__(
        self,
        model: TrussModel,
        space: DesignSpace,
        spec: ConstraintSpec,
        mode: str = CONTINUOUS,
        penalty: PenaltyConfig = PenaltyConfig(),
    ) -> None:
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
        if mode == DISCRETE and space.discrete is None:
            raise ValueError("discrete mode needs a discrete set")
        self.model = model
        self.space = space
        self.spec = spec
        self.mode = mode
        self.penalty = penalty
        self.counter = EvaluationCounter()

    @property
    def lower(self) -> NDArray:
        return self.space.lower

    @property
    def upper(self) -> NDArray:
        return self.space.upper

    @property
    def dimension(self) -> int:
        return self.space.n_vars

    @property
    def evaluations(self) -> int:
        return self.counter.value

    def snap(self, values) -> NDArray:
        values = np.clip(np.asarray(values, dtype=float), self.lower, self.upper)
        if self.mode == DISCRETE:
            return self.space.discrete[nearest_index(self.space.discrete, values)]
        return values

    def to_design(self, values) -> NDArray:
        """Design vector in the form ``decode`` expects for this mode."""
        if self.mode == DISCRETE:
            return nearest_index(self.space.discrete, np.clip(values, self.lower, self.upper))
        return np.asarray(values, dtype=float)

    def evaluate(self, values) -> Evaluation:
        return evaluate(
            self.model, self.space, self.spec, self.penalty,
            self.to_design(values), self.mode, self.counter,
        )

    __call__ = evaluate


class FunctionProblem:
    """Adapts a plain function ``f(x) -> float`` to the optimizer interface."""

    def __init__(self, func: Callable[[NDArray], float], lower: Sequence[float], upper: Sequence[float]) -> None:
        self.func = func
        self.lower = np.asarray(lower, dtype=float)
        self.upper = np.asarray(upper, dtype=float)
        self.counter = EvaluationCounter()

    @property
    def dimension(self) -> int:
        return len(self.lower)

    @property
    def evaluations(self) -> int:
        return self.counter.value

    def snap(self, values) -> NDArray:
        return np.clip(np.asarray(values, dtype=float), self.lower, self.upper)

    def evaluate(self, values) -> Evaluation:
        self.counter.increment()
        f = float(self.func(self.snap(values)))
        return Evaluation(f, f, True, np.zeros(0))

    __call__ = evaluate


def as_objective(problem, mode: str | None = None):
    """Accept a benchmark problem (built into an Objective for ``mode``) or a ready objective."""
    if hasattr(problem, "objective"):
        return problem.objective(mode or CONTINUOUS)
    if mode is not None and getattr(problem, "mode", mode) != mode:
        raise ValueError(f"objective mode {problem.mode!r} does not match requested {mode!r}")
    return problem
