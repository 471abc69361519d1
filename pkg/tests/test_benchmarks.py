import time

import numpy as np
import pytest
import yaml

from trussopt.benchmarks import (
    PROBLEM_IDS,
    GeometryValidationError,
    ProblemLoadError,
    load_all,
    load_problem,
    oracle_designs,
    problem_path,
    validate_geometry,
)

COUNTS = {"10bar": (10, 10), "15bar": (15, 15), "25bar": (25, 8), "52bar": (52, 12), "72bar": (72, 16),
          "200bar": (200, 29)}


@pytest.mark.parametrize("pid", PROBLEM_IDS)
def test_member_and_variable_counts(pid):
    p = load_problem(pid)
    assert (p.n_members, p.n_vars) == COUNTS[pid]
    assert sorted(set(p.space.group_map.tolist())) == list(range(p.n_vars))


def test_discrete_sets():
    p = load_all()
    s10 = p["10bar"].space.discrete
    assert len(s10) == 41 and s10[0] == 1.62 and s10[-1] == 33.5
    assert len(p["15bar"].space.discrete) == 16
    s25 = p["25bar"].space.discrete
    # the printed listing skips 2.5, so it holds 29 values
    assert len(s25) == 29 and s25[-1] == 3.4 and 2.5 not in s25
    aisc_in = p["72bar"].space.discrete
    aisc_mm = p["52bar"].space.discrete
    assert len(aisc_in) == len(aisc_mm) == 64
    assert aisc_in[0] == 0.111 and aisc_in[-1] == 33.5
    np.testing.assert_allclose(aisc_mm / 645.16, aisc_in, rtol=5e-3)
    for prob in p.values():
        if prob.space.discrete is not None:
            assert np.all(np.diff(prob.space.discrete) > 0)
    assert p["200bar"].space.discrete is None


def test_ten_bar_budget_row():
    p = load_problem("10bar")
    assert p.budgets["sfoa"]["population"] == 10 and p.budgets["sfoa"]["budget"] == 2000


def _loads(p, case):
    out = {}
    for node, axis, f in p.model.load_cases[case].loads:
        out.setdefault(node + 1, [0.0] * p.model.dim)[axis] = f
    return out


def test_load_tables():
    p25 = load_problem("25bar")
    assert _loads(p25, 0)[1] == [1.0, -10.0, -10.0]
    p72 = load_problem("72bar")
    assert len(p72.model.load_cases) == 2
    assert _loads(p72, 0) == {17: [5.0, 5.0, -5.0]}
    assert _loads(p72, 1) == {n: [0.0, 0.0, -5.0] for n in (17, 18, 19, 20)}
    p200 = load_problem("200bar")
    assert len(p200.model.load_cases) == 3
    assert len(_loads(p200, 0)) == 10 and len(_loads(p200, 1)) == 55


def test_oracle_lookup():
    hs = [o for o in oracle_designs("25bar") if o.source == "HS"][0]
    assert hs.values == (0.1, 0.3, 3.4, 0.1, 2.1, 1.0, 0.5, 3.4) and hs.weight == 484.85
    msos = [o for o in oracle_designs("52bar") if o.source == "mSOS"][0]
    assert len(msos.values) == 12 and msos.values[-1] == pytest.approx(506.451, abs=1e-3)
    assert msos.weight == 1899.654
    assert [o for o in oracle_designs("10bar") if o.source == "HPSO"][0].weight == 5531.98
    flagged = [o for o in oracle_designs("25bar") if o.suspect]
    assert {o.source for o in flagged} == {"s-FOA", "cFOA"}
    assert all(not o.suspect for o in oracle_designs("25bar", include_suspect=False))


def test_discrete_oracles_are_set_members():
    for p in load_all().values():
        for o in p.oracles:
            if o.mode == "discrete" and not o.suspect:
                assert all(np.isclose(p.space.discrete, v, rtol=1e-6).any() for v in o.values)


def test_validate_geometry_named_examples():
    checks = {(c.source, c.mode): c for c in validate_geometry(load_problem("10bar"), raise_on_failure=False)}
    assert checks[("aeDE", "discrete")].ok
    checks = {(c.source, c.mode): c for c in validate_geometry(load_problem("72bar"), raise_on_failure=False)}
    assert checks[("ECBO", "discrete")].ok


def test_perturbed_node_fails_validation(tmp_path):
    doc = yaml.safe_load(problem_path("10bar").read_text())
    doc["nodes"][0][1] += 40.0
    path = tmp_path / "bent.yaml"
    path.write_text(yaml.safe_dump(doc))
    with pytest.raises(GeometryValidationError, match="HPSO|MBA|aeDE"):
        validate_geometry(load_problem(path))


@pytest.mark.parametrize("edit, field", [
    (lambda d: d["members"].append([11, 1, 99, 1]), "members"),
    (lambda d: d.pop("material"), "material"),
    (lambda d: d["members"].__setitem__(0, [1, 3, 5, 12]), "members"),
    (lambda d: d["design"].__setitem__("discrete", [1.0, 0.5]), "design"),
    (lambda d: d["oracles"][0].__setitem__("values", [1.0]), "oracles"),
    (lambda d: d["supports"].__setitem__(42, ["x"]), "supports"),
])
def test_load_errors_name_the_field(tmp_path, edit, field):
    doc = yaml.safe_load(problem_path("10bar").read_text())
    edit(doc)
    path = tmp_path / "bad.yaml"
    path.write_text(yaml.safe_dump(doc))
    with pytest.raises(ProblemLoadError, match=field):
        load_problem(path)


def test_unknown_problem():
    with pytest.raises(ProblemLoadError):
        load_problem("11bar")


def test_loading_is_deterministic():
    a, b = load_problem("200bar"), load_problem("200bar")
    assert np.array_equal(a.model.nodes, b.model.nodes)
    assert np.array_equal(a.space.group_map, b.space.group_map)


def test_all_geometry_validates_quickly():
    start = time.perf_counter()
    reports = {pid: validate_geometry(load_problem(pid), raise_on_failure=False) for pid in PROBLEM_IDS}
    assert time.perf_counter() - start < 5.0
    assert sum(len(r) for r in reports.values()) >= 15
