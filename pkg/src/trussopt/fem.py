"""
Linear-elastic analysis of pin-jointed trusses by the direct stiffness method.

Works for planar (2 DOF per node) and space (3 DOF per node) trusses. Units
are whatever the model declares; nothing here converts them.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from numpy.typing import NDArray
from scipy.linalg import lapack

RCOND_MIN = 1e-12


class TrussError(ValueError):
    """Base class for truss model and analysis errors."""


class DegenerateGeometryError(TrussError):
    pass


class InvalidDesignError(TrussError):
    pass


class KinematicInstabilityError(TrussError):
    pass


@dataclass(frozen=True)
class LoadCase:
    """Point loads as ``(node, axis, magnitude)`` triples, node and axis 0-based."""

    loads: tuple[tuple[int, int, float], ...]
    name: str = ""


@dataclass(frozen=True)
class AnalysisResult:
    displacements: tuple[NDArray, ...]  # free DOFs, one array per load case
    stresses: tuple[NDArray, ...]  # per member, tension positive
    weight: float

    def max_abs_displacement(self) -> float:
        return max((float(np.max(np.abs(u))) for u in self.displacements if u.size), default=0.0)

    def max_abs_stress(self) -> float:
        return max(float(np.max(np.abs(s))) for s in self.stresses)


@dataclass(eq=False)
class TrussModel:
    """
    Geometry, connectivity, supports, material and loading of one truss.

    Parameters
    ----------
    nodes : array, shape (n_nodes, dim)
        Node coordinates, ``dim`` is 2 or 3.
    members : array, shape (n_members, 2)
        0-based end node indices.
    supports : iterable of (node, axis)
        Fixed degrees of freedom.
    elastic_modulus, density : float
        Material constants shared by all members.
    load_cases : list of LoadCase
    groups : array, shape (n_members,), optional
        Design-variable index of every member. Defaults to one group per member.
    """

    nodes: NDArray
    members: NDArray
    supports: frozenset
    elastic_modulus: float
    density: float
    load_cases: list = field(default_factory=list)
    groups: NDArray | None = None

    def __post_init__(self) -> None:
        self.nodes = np.array(self.nodes, dtype=float)
        self.members = np.array(self.members, dtype=int).reshape(-1, 2)
        self.supports = frozenset((int(n), int(a)) for n, a in self.supports)
        if self.nodes.ndim != 2 or self.nodes.shape[1] not in (2, 3):
            raise TrussError("nodes must be an (n, 2) or (n, 3) array")
        self.dim = self.nodes.shape[1]
        n_nodes = len(self.nodes)
        if self.groups is None:
            self.groups = np.arange(len(self.members))
        self.groups = np.asarray(self.groups, dtype=int)
        if self.groups.shape != (len(self.members),):
            raise TrussError("groups must hold one entry per member")

        for k, (a, b) in enumerate(self.members):
            if not (0 <= a < n_nodes and 0 <= b < n_nodes):
                raise TrussError(f"member {k} references a missing node")
            if a == b:
                raise DegenerateGeometryError(f"member {k} connects node {a} to itself")
        for n, a in self.supports:
            if not (0 <= n < n_nodes and 0 <= a < self.dim):
                raise TrussError(f"support ({n}, {a}) is not a valid degree of freedom")
        if self.elastic_modulus <= 0 or self.density <= 0:
            raise TrussError("elastic modulus and density must be positive")

        delta = self.nodes[self.members[:, 1]] - self.nodes[self.members[:, 0]]
        self.lengths = np.sqrt(np.sum(delta**2, axis=1))
        if np.any(self.lengths <= 0.0):
            k = int(np.argmin(self.lengths))
            raise DegenerateGeometryError(f"member {k} has zero length")
        self.cosines = delta / self.lengths[:, None]

        n_dof = self.dim * n_nodes
        fixed = {self.dim * n + a for n, a in self.supports}
        self.free_dofs = np.array([d for d in range(n_dof) if d not in fixed], dtype=int)
        self._dof_map = np.full(n_dof, -1, dtype=int)
        self._dof_map[self.free_dofs] = np.arange(len(self.free_dofs))
        self._build_scatter()
        self.load_matrix = np.column_stack(
            [self.load_vector(case) for case in self.load_cases]
        ) if self.load_cases else np.zeros((len(self.free_dofs), 0))

    # Precomputes, for every member, where each entry of its element stiffness
    # lands in the reduced matrix, so assembly is a single bincount.
    def _build_scatter(self) -> None:
        d = self.dim
        m = len(self.members)
        n_free = len(self.free_dofs)
        # element dof list: [a*d .. a*d+d-1, b*d .. b*d+d-1]
        edofs = np.concatenate(
            [self.members[:, :1] * d + np.arange(d), self.members[:, 1:] * d + np.arange(d)], axis=1
        )
        red = self._dof_map[edofs]  # (m, 2d), -1 where fixed
        t = np.concatenate([-self.cosines, self.cosines], axis=1)  # (m, 2d)
        unit = t[:, :, None] * t[:, None, :]  # (m, 2d, 2d), stiffness per unit EA/L
        rows = np.broadcast_to(red[:, :, None], unit.shape)
        cols = np.broadcast_to(red[:, None, :], unit.shape)
        keep = (rows >= 0) & (cols >= 0)
        member_idx = np.broadcast_to(np.arange(m)[:, None, None], unit.shape)
        self._sc_member = member_idx[keep]
        self._sc_flat = (rows * n_free + cols)[keep]
        self._sc_unit = unit[keep]
        self._edofs = edofs
        self._t = t

    @property
    def n_members(self) -> int:
        return len(self.members)

    @property
    def n_free(self) -> int:
        return len(self.free_dofs)

    def load_vector(self, case: LoadCase) -> NDArray:
        f = np.zeros(len(self.free_dofs))
        for node, axis, value in case.loads:
            if not (0 <= node < len(self.nodes) and 0 <= axis < self.dim):
                raise TrussError(f"load ({node}, {axis}) is not a valid degree of freedom")
            r = self._dof_map[self.dim * node + axis]
            if r < 0:
                raise TrussError(f"load applied to fixed degree of freedom ({node}, {axis})")
            f[r] += value
        return f

    def full_displacements(self, u: NDArray) -> NDArray:
        """Scatter free-DOF displacements into an (n_nodes, dim) array."""
        full = np.zeros(self.dim * len(self.nodes))
        full[self.free_dofs] = u
        return full.reshape(-1, self.dim)


def member_length(model: TrussModel, member_index: int) -> float:
    if not 0 <= member_index < model.n_members:
        raise IndexError(f"member index {member_index} out of range")
    a, b = model.members[member_index]
    length = float(np.linalg.norm(model.nodes[b] - model.nodes[a]))
    if length <= 0.0:
        raise DegenerateGeometryError(f"member {member_index} has zero length")
    return length


def _check_areas(model: TrussModel, areas) -> NDArray:
    areas = np.asarray(areas, dtype=float)
    if areas.shape != (model.n_members,):
        raise InvalidDesignError(f"expected {model.n_members} areas, got shape {areas.shape}")
    if not np.all(areas > 0):
        raise InvalidDesignError("all member areas must be positive")
    return areas


def weight(model: TrussModel, areas) -> float:
    """Structural weight (or mass) ``sum(A_i * rho * L_i)``."""
    areas = _check_areas(model, areas)
    return float(model.density * np.dot(areas, model.lengths))


def stiffness_matrix(model: TrussModel, areas) -> NDArray:
    """Reduced global stiffness matrix over the free DOFs."""
    return _stiffness(model, _check_areas(model, areas))


def _stiffness(model: TrussModel, areas: NDArray) -> NDArray:
    k_axial = model.elastic_modulus * areas / model.lengths
    n = model.n_free
    flat = np.bincount(
        model._sc_flat, weights=k_axial[model._sc_member] * model._sc_unit, minlength=n * n
    )
    return flat.reshape(n, n)


def _solve(model: TrussModel, areas, rhs: NDArray) -> NDArray:
    K = _stiffness(model, areas)
    if K.shape[0] == 0:
        return np.zeros_like(rhs)
    anorm = float(np.max(np.sum(np.abs(K), axis=0)))
    chol, info = lapack.dpotrf(K, lower=0)
    if info != 0:
        raise KinematicInstabilityError("stiffness matrix is not positive definite")
    rcond, info = lapack.dpocon(chol, anorm)
    if info != 0 or not rcond >= RCOND_MIN:
        raise KinematicInstabilityError(f"stiffness matrix is near singular (rcond={rcond:.3e})")
    u, info = lapack.dpotrs(chol, rhs.reshape(len(rhs), -1), lower=0)
    if info != 0:
        raise KinematicInstabilityError("back-substitution failed")
    return u.reshape(rhs.shape)


def assemble_and_solve(model: TrussModel, areas, case: LoadCase) -> NDArray:
    """Free-DOF displacements for one load case."""
    return _solve(model, _check_areas(model, areas), model.load_vector(case))


def member_stresses(model: TrussModel, areas, u: NDArray) -> NDArray:
    """Axial stress per member, tension positive. ``areas`` only fixes the member count."""
    _check_areas(model, areas)
    return _stresses(model, np.asarray(u, dtype=float))


def _stresses(model: TrussModel, u: NDArray) -> NDArray:
    full = np.zeros(model.dim * len(model.nodes) if u.ndim == 1 else (model.dim * len(model.nodes), u.shape[1]))
    full[model.free_dofs] = u
    ue = full[model._edofs]  # (m, 2d) or (m, 2d, n_cases)
    if u.ndim == 1:
        elong = np.sum(model._t * ue, axis=1)
        return model.elastic_modulus * elong / model.lengths
    elong = np.einsum("me,mec->mc", model._t, ue)
    return model.elastic_modulus * elong / model.lengths[:, None]


def analyze(model: TrussModel, areas) -> AnalysisResult:
    """Solve every load case with one factorization and collect the responses."""
    areas = _check_areas(model, areas)
    w = float(model.density * np.dot(areas, model.lengths))
    if not model.load_cases:
        return AnalysisResult((), (), w)
    U = _solve(model, areas, model.load_matrix)
    S = _stresses(model, U)
    n_cases = U.shape[1]
    return AnalysisResult(
        displacements=tuple(U[:, c].copy() for c in range(n_cases)),
        stresses=tuple(S[:, c].copy() for c in range(n_cases)),
        weight=w,
    )
