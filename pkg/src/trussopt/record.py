from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray

from .objective import Evaluation


@dataclass
class RunRecord:
    """Outcome of one optimizer run."""

    seed: int
    evaluations: int
    best_weight: float
    best_penalized: float
    best_design: NDArray
    feasible: bool
    history: list[float] = field(default_factory=list)  # best penalized value so far, per iteration
    algorithm: str = ""
    extra: dict = field(default_factory=dict)

    def same_as(self, other: "RunRecord") -> bool:
        return (
            self.seed == other.seed
            and self.evaluations == other.evaluations
            and self.best_weight == other.best_weight
            and self.best_penalized == other.best_penalized
            and self.feasible == other.feasible
            and np.array_equal(self.best_design, other.best_design)
            and self.history == other.history
        )


class BestTracker:
    """
    Follows a run's evaluations.

    ``value`` is the best penalized value seen so far (the optimizer's view,
    monotone). The reported incumbent prefers feasibility: the lightest
    feasible design seen, or the best penalized design while none is feasible.
    Under a finite penalty the penalized minimum can sit just outside the
    feasible region, so the two can differ.
    """

    def __init__(self) -> None:
        self.value = float("inf")
        self.evaluation: Evaluation | None = None
        self.design: NDArray | None = None

    @staticmethod
    def _key(ev: Evaluation) -> tuple[bool, float]:
        return (not ev.feasible, ev.penalized)

    def offer(self, evaluation: Evaluation, design) -> bool:
        """Returns True when the best penalized value improved."""
        if self.evaluation is None or self._key(evaluation) < self._key(self.evaluation):
            self.evaluation = evaluation
            self.design = np.array(design, dtype=float)
        if evaluation.penalized < self.value:
            self.value = evaluation.penalized
            return True
        return False

    def record(
        self, problem, seed: int, evaluations: int, history: list[float], algorithm: str, **extra
    ) -> RunRecord:
        ev = self.evaluation
        return RunRecord(
            seed=seed,
            evaluations=evaluations,
            best_weight=ev.weight,
            best_penalized=ev.penalized,
            best_design=problem.snap(self.design),
            feasible=ev.feasible,
            history=history,
            algorithm=algorithm,
            extra=extra,
        )
