import numpy as np
import pytest

from trussopt.benchmarks import load_problem
from trussopt.fem import LoadCase, TrussModel


@pytest.fixture(scope="session")
def problems():
    cache = {}

    def get(pid):
        if pid not in cache:
            cache[pid] = load_problem(pid)
        return cache[pid]

    return get


def random_truss(seed: int, dim: int = 2, n_nodes: int = 5, n_cases: int = 2) -> TrussModel:
    """Fully connected truss on random nodes; the first ``dim`` nodes (2D: two) are pinned."""
    rng = np.random.default_rng(seed)
    nodes = rng.uniform(-10.0, 10.0, size=(n_nodes, dim))
    members = [(a, b) for a in range(n_nodes) for b in range(a + 1, n_nodes)]
    n_fixed = 2 if dim == 2 else 3
    supports = [(n, a) for n in range(n_fixed) for a in range(dim)]
    cases = []
    for _ in range(n_cases):
        loads = tuple((n, a, float(rng.uniform(-50, 50))) for n in range(n_fixed, n_nodes) for a in range(dim))
        cases.append(LoadCase(loads))
    return TrussModel(nodes, members, supports, float(rng.uniform(1e3, 3e4)), 0.1, cases)


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
