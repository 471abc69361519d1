"""
Benchmark truss problems shipped as YAML files, with published reference designs.

A problem file has the sections ``units``, ``dimension``, ``material``,
``nodes`` (``[label, x, y(, z)]``), ``members`` (``[label, node_a, node_b,
group]``), ``supports`` (``node: [axes]``), ``load_cases`` (``loads`` rows of
``[node, Fx, Fy(, Fz)]``), ``constraints``, ``design`` and ``budgets``, plus
an optional ``oracles`` list. Node, member and group labels are 1-based.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np
import yaml

from ..fem import LoadCase, TrussError, TrussModel, weight
from ..objective import (
    CONTINUOUS,
    DISCRETE,
    ConstraintSpec,
    DesignSpace,
    Objective,
    PenaltyConfig,
    encode,
)

PROBLEM_IDS = ("10bar", "15bar", "25bar", "52bar", "72bar", "200bar")
AXES = {"x": 0, "y": 1, "z": 2}
GEOMETRY_TOLERANCE = 1e-3


class ProblemLoadError(ValueError):
    """A problem file is malformed; the message names the offending field."""


class GeometryValidationError(AssertionError):
    """A reference design does not reproduce its published weight."""


@dataclass(frozen=True)
class OracleDesign:
    problem: str
    source: str
    mode: str
    values: tuple
    weight: float
    suspect: bool = False
    note: str = ""


@dataclass(frozen=True)
class BenchmarkProblem:
    id: str
    title: str
    model: TrussModel
    space: DesignSpace
    constraints: ConstraintSpec
    budgets: dict
    units: dict
    oracles: tuple = ()
    source: str = ""
    penalty: PenaltyConfig = field(default_factory=PenaltyConfig)

    @property
    def n_vars(self) -> int:
        return self.space.n_vars

    @property
    def n_members(self) -> int:
        return self.model.n_members

    @property
    def weight_unit(self) -> str:
        return self.units.get("weight", "")

    def objective(self, mode: str = CONTINUOUS) -> Objective:
        """A fresh objective (with its own evaluation counter) for one run."""
        return Objective(self.model, self.space, self.constraints, mode, self.penalty)

    def areas(self, values) -> np.ndarray:
        """Expand per-variable areas to one area per member."""
        values = np.asarray(values, dtype=float)
        if values.shape != (self.n_vars,):
            raise ValueError(f"{self.id} has {self.n_vars} design variables, got {values.shape}")
        return values[self.space.group_map]


def _data_dir() -> Path:
    return Path(str(resources.files(__package__) / "data"))


def problem_path(problem_id: str) -> Path:
    return _data_dir() / f"{problem_id}.yaml"


def _require(doc: dict, key: str, where: str = ""):
    if not isinstance(doc, dict) or key not in doc:
        raise ProblemLoadError(f"missing field '{where}{key}'")
    return doc[key]


def _parse_axis(value, where: str) -> int:
    if isinstance(value, str) and value.lower() in AXES:
        return AXES[value.lower()]
    if isinstance(value, int) and value in (0, 1, 2):
        return value
    raise ProblemLoadError(f"field '{where}' has invalid axis {value!r}")


def _parse(doc: dict, source: str) -> BenchmarkProblem:
    if not isinstance(doc, dict):
        raise ProblemLoadError("problem file must be a mapping")
    pid = str(_require(doc, "id"))
    dim = _require(doc, "dimension")
    if dim not in (2, 3):
        raise ProblemLoadError(f"field 'dimension' must be 2 or 3, got {dim!r}")

    material = _require(doc, "material")
    E = float(_require(material, "elastic_modulus", "material."))
    rho = float(_require(material, "density", "material."))

    node_rows = _require(doc, "nodes")
    node_index = {}
    coords = []
    for row in node_rows:
        if not isinstance(row, list) or len(row) != dim + 1:
            raise ProblemLoadError(f"field 'nodes' row {row!r} must be [label, {dim} coordinates]")
        if row[0] in node_index:
            raise ProblemLoadError(f"field 'nodes' repeats label {row[0]}")
        node_index[row[0]] = len(coords)
        coords.append([float(c) for c in row[1:]])

    member_rows = _require(doc, "members")
    pairs, groups = [], []
    for row in member_rows:
        if not isinstance(row, list) or len(row) != 4:
            raise ProblemLoadError(f"field 'members' row {row!r} must be [label, node_a, node_b, group]")
        _, a, b, g = row
        for n in (a, b):
            if n not in node_index:
                raise ProblemLoadError(f"field 'members' row {row!r} references missing node {n}")
        pairs.append((node_index[a], node_index[b]))
        groups.append(int(g) - 1)
    groups = np.asarray(groups)

    supports = []
    for node, axes in (_require(doc, "supports") or {}).items():
        if node not in node_index:
            raise ProblemLoadError(f"field 'supports' references missing node {node}")
        for ax in axes:
            supports.append((node_index[node], _parse_axis(ax, "supports")))

    cases = []
    for k, case in enumerate(_require(doc, "load_cases")):
        loads = []
        for row in _require(case, "loads", f"load_cases[{k}]."):
            if len(row) != dim + 1 or row[0] not in node_index:
                raise ProblemLoadError(f"field 'load_cases[{k}].loads' has invalid row {row!r}")
            for axis, value in enumerate(row[1:]):
                if value:
                    loads.append((node_index[row[0]], axis, float(value)))
        cases.append(LoadCase(tuple(loads), str(case.get("name", f"case {k + 1}"))))

    cons = _require(doc, "constraints")
    disp = cons.get("displacement")
    axes = tuple(_parse_axis(a, "constraints.displacement_axes") for a in cons.get("displacement_axes", ["x", "y"]))
    try:
        spec = ConstraintSpec(float(_require(cons, "stress", "constraints.")),
                              None if disp is None else float(disp), axes)
    except ValueError as exc:
        raise ProblemLoadError(f"field 'constraints': {exc}") from exc

    design = _require(doc, "design")
    n_vars = int(_require(design, "variables", "design."))
    if groups.min(initial=0) < 0 or set(groups.tolist()) != set(range(n_vars)):
        raise ProblemLoadError(f"field 'members' group labels must cover 1..{n_vars} without gaps")
    try:
        space = DesignSpace(groups, _require(design, "lower", "design."), _require(design, "upper", "design."),
                            design.get("discrete"))
    except ValueError as exc:
        raise ProblemLoadError(f"field 'design': {exc}") from exc

    try:
        model = TrussModel(coords, pairs, supports, E, rho, cases, groups)
    except TrussError as exc:
        raise ProblemLoadError(f"field 'nodes'/'members': {exc}") from exc

    oracles = []
    for k, o in enumerate(doc.get("oracles") or []):
        vals = tuple(float(v) for v in _require(o, "values", f"oracles[{k}]."))
        if len(vals) != n_vars:
            raise ProblemLoadError(f"field 'oracles[{k}].values' needs {n_vars} entries, got {len(vals)}")
        mode = _require(o, "mode", f"oracles[{k}].")
        suspect = bool(o.get("suspect", False))
        if mode == DISCRETE and not suspect:
            try:
                encode(space, vals, rtol=1e-6)
            except ValueError as exc:
                raise ProblemLoadError(f"field 'oracles[{k}].values': {exc}") from exc
        oracles.append(OracleDesign(pid, str(_require(o, "source", f"oracles[{k}].")), mode, vals,
                                    float(_require(o, "weight", f"oracles[{k}].")), suspect,
                                    str(o.get("note", ""))))

    return BenchmarkProblem(
        id=pid, title=str(doc.get("title", pid)), model=model, space=space, constraints=spec,
        budgets=dict(_require(doc, "budgets")), units=dict(_require(doc, "units")),
        oracles=tuple(oracles), source=source,
    )


def load_problem(id_or_path: str | os.PathLike) -> BenchmarkProblem:
    """Load a shipped benchmark by id (``"10bar"``) or any problem file by path."""
    key = str(id_or_path)
    path = problem_path(key) if key in PROBLEM_IDS else Path(key)
    try:
        with open(path) as fh:
            doc = yaml.safe_load(fh)
    except FileNotFoundError as exc:
        raise ProblemLoadError(f"unknown problem {key!r} (no file at {path})") from exc
    except yaml.YAMLError as exc:
        raise ProblemLoadError(f"{path}: not valid YAML: {exc}") from exc
    return _parse(doc, str(path))


def load_all() -> dict[str, BenchmarkProblem]:
    return {pid: load_problem(pid) for pid in PROBLEM_IDS}


def oracle_designs(problem_id: str | BenchmarkProblem, include_suspect: bool = True) -> list[OracleDesign]:
    problem = problem_id if isinstance(problem_id, BenchmarkProblem) else load_problem(problem_id)
    return [o for o in problem.oracles if include_suspect or not o.suspect]


@dataclass(frozen=True)
class GeometryCheck:
    source: str
    mode: str
    published: float
    computed: float

    @property
    def relative_error(self) -> float:
        return abs(self.computed - self.published) / self.published

    @property
    def ok(self) -> bool:
        return self.relative_error <= GEOMETRY_TOLERANCE


def validate_geometry(problem: BenchmarkProblem, tolerance: float = GEOMETRY_TOLERANCE,
                      raise_on_failure: bool = True) -> list[GeometryCheck]:
    """
    Recompute the weight of every non-suspect reference design.

    Raises GeometryValidationError naming the first design that misses its
    published weight by more than ``tolerance`` (relative).
    """
    report = []
    for o in problem.oracles:
        if o.suspect:
            continue
        w = weight(problem.model, problem.areas(o.values))
        report.append(GeometryCheck(o.source, o.mode, o.weight, w))
    if raise_on_failure:
        for check in report:
            if check.relative_error > tolerance:
                raise GeometryValidationError(
                    f"{problem.id}: {check.source} ({check.mode}) weighs {check.computed:.4f}, "
                    f"published {check.published}, off by {100 * check.relative_error:.3f}%"
                )
    return report
