"""
Regenerate the benchmark problem files under src/trussopt/benchmarks/data.

Geometry is produced programmatically from the standard layouts so that the
YAML files stay consistent; the files themselves are the shipped artefact.

    python3 tools/make_benchmarks.py
"""

from __future__ import annotations

from pathlib import Path

import yaml

DATA = Path(__file__).resolve().parents[1] / "src" / "trussopt" / "benchmarks" / "data"

AISC_IN2 = [
    0.111, 0.141, 0.196, 0.250, 0.307, 0.391, 0.442, 0.563, 0.602, 0.766, 0.785, 0.994, 1.000,
    1.228, 1.266, 1.457, 1.563, 1.620, 1.800, 1.990, 2.130, 2.380, 2.620, 2.630, 2.880, 2.930,
    3.090, 3.130, 3.380, 3.470, 3.550, 3.630, 3.840, 3.870, 3.880, 4.180, 4.220, 4.490, 4.590,
    4.800, 4.970, 5.120, 5.740, 7.220, 7.970, 8.530, 9.300, 10.850, 11.500, 13.500, 13.900,
    14.200, 15.500, 16.000, 16.900, 18.800, 19.900, 22.000, 22.900, 24.500, 26.500, 28.000,
    30.000, 33.500,
]
AISC_MM2 = [
    71.613, 90.968, 126.451, 161.290, 198.064, 252.258, 285.161, 363.225, 388.386, 494.193,
    506.451, 641.289, 645.160, 792.456, 816.773, 939.998, 1008.385, 1045.159, 1161.288,
    1283.868, 1374.191, 1535.481, 1690.319, 1696.771, 1858.061, 1890.319, 1993.544, 2019.351,
    2180.641, 2238.705, 2290.318, 2341.931, 2477.414, 2496.769, 2503.221, 2696.769, 2722.575,
    2896.768, 2961.284, 3096.768, 3206.445, 3303.219, 3703.218, 4658.055, 5141.925, 5503.215,
    5999.988, 6999.986, 7419.340, 8709.660, 8967.724, 9161.272, 9999.980, 10322.560,
    10903.204, 12128.008, 12838.684, 14193.520, 14774.154, 15806.420, 17096.740, 18064.480,
    19354.800, 21612.860,
]

SFOA = dict(delay=5, radius=0.95, resolution=10, contraction=0.9)
CFOA = dict(delay=320, radius=0.95, resolution=50, contraction=0.92)


def budgets(sfoa_pop, sfoa_budget, cfoa_budget, de, pso):
    de_pop, de_budget, cr, f = de
    pso_pop, pso_budget = pso
    return {
        "sfoa": dict(population=sfoa_pop, budget=sfoa_budget, **SFOA),
        "cfoa": dict(population=sfoa_pop, budget=cfoa_budget, **CFOA),
        "de": dict(population=de_pop, budget=de_budget, crossover=cr, mutation=f),
        "pso": dict(population=pso_pop, budget=pso_budget, inertia=0.8, cognitive=1.5, social=2.0),
    }


def oracle(source, mode, weight, values, suspect=False, note=None):
    d = {"source": source, "mode": mode, "weight": weight, "values": list(values), "suspect": suspect}
    if note:
        d["note"] = note
    return d


def members_block(pairs, groups):
    return [[k + 1, a, b, g] for k, ((a, b), g) in enumerate(zip(pairs, groups))]


def nodes_block(coords):
    return [[k + 1, *c] for k, c in enumerate(coords)]


# ----------------------------------------------------------------------------

def ten_bar():
    coords = [(720, 360), (720, 0), (360, 360), (360, 0), (0, 360), (0, 0)]
    pairs = [(3, 5), (1, 3), (4, 6), (2, 4), (3, 4), (1, 2), (4, 5), (3, 6), (2, 3), (1, 4)]
    S = [1.62, 1.80, 1.99, 2.13, 2.38, 2.62, 2.88, 2.93, 3.09, 3.13, 3.38, 3.47, 3.55, 3.63,
         3.84, 3.87, 3.88, 4.18, 4.22, 4.49, 4.59, 4.80, 4.97, 5.12, 5.74, 7.22, 7.97, 11.50,
         13.50, 13.90, 14.20, 15.50, 16.00, 16.90, 18.80, 19.90, 22.00, 22.90, 26.50, 30.00, 33.50]
    best = [33.5, 1.62, 22.9, 14.2, 1.62, 1.62, 7.97, 22.9, 22, 1.62]
    oracles = [
        oracle("HPSO", "discrete", 5531.98, [30, 1.62, 22.9, 13.5, 1.62, 1.62, 7.97, 26.5, 22, 1.8]),
        oracle("MBA", "discrete", 5507.75, [30, 1.62, 22.9, 16.9, 1.62, 1.62, 7.97, 22.9, 22.9, 1.62]),
        oracle("aeDE", "discrete", 5490.738, best),
        oracle("DE (literature)", "discrete", 5490.738, best),
        oracle("SOS", "discrete", 5490.738, best),
        oracle("mSOS", "discrete", 5490.738, best),
        oracle("s-FOA", "discrete", 5490.738, best),
        oracle("TLBO", "discrete", 5490.738, best),
        oracle("PSO", "discrete", 5490.738, best),
        oracle("DE", "discrete", 5490.738, best),
        oracle("GA", "discrete", 5526.962, [30, 2.93, 22.9, 18.8, 1.8, 2.38, 7.97, 18.8, 16.9, 2.38],
               True, "area vector gives about 5181.6 lb and violates the displacement limit"),
        oracle("cFOA", "discrete", 5491.717, best, True,
               "published weight disagrees with its own area vector, which is the 5490.738 design"),
        oracle("s-FOA", "continuous", 5421.2,
               [31.6141, 1.6218, 23.3547, 14.8084, 1.1627, 1.2364, 8.269, 22.8569, 21.534, 1.6257]),
        oracle("TLBO", "continuous", 5495.8,
               [32.7009, 1.62, 23.8969, 15.0507, 1.636, 1.6396, 8.146, 21.7906, 22.2357, 1.6508]),
        oracle("PSO", "continuous", 5485.2,
               [31.7749, 1.6295, 23.906, 15.146, 1.6201, 1.62, 8.6446, 22.8267, 21.1247, 1.62]),
        oracle("DE", "continuous", 5487.8,
               [33.5, 1.6462, 22.4672, 15.4151, 1.6209, 1.6203, 7.9847, 23.3522, 20.9034, 1.62]),
        oracle("GA", "continuous", 5698.5,
               [32.7403, 3.0609, 25.5496, 19.8758, 1.8382, 2.4316, 11.7973, 19.1187, 17.9177, 2.6401]),
        oracle("cFOA", "continuous", 5484.2,
               [32.554386, 1.613358, 22.782222, 15.63543, 1.615788, 1.622592, 8.411202, 22.61358,
                21.460788, 1.618056]),
    ]
    return {
        "id": "10bar",
        "title": "10-bar planar cantilever truss",
        "units": {"length": "in", "force": "kip", "stress": "ksi", "area": "in^2", "weight": "lb"},
        "dimension": 2,
        "material": {"elastic_modulus": 1.0e4, "density": 0.1},
        "nodes": nodes_block(coords),
        "members": members_block(pairs, range(1, 11)),
        "supports": {5: ["x", "y"], 6: ["x", "y"]},
        "load_cases": [{"name": "tip loads", "loads": [[2, 0, -100], [4, 0, -100]]}],
        "constraints": {"stress": 25.0, "displacement": 2.0, "displacement_axes": ["x", "y"]},
        "design": {"variables": 10, "lower": S[0], "upper": S[-1], "discrete": S},
        "budgets": budgets(10, 2000, 2000, (12, 2000, 0.2368, 0.6702), (12, 2000)),
        "oracles": oracles,
    }


def fifteen_bar():
    # reconstructed cantilever: three 60 in (1524 mm) panels, 120 in (3048 mm) deep
    a, h = 1524.0, 3048.0
    coords = [(0, h), (a, h), (2 * a, h), (3 * a, h), (0, 0), (a, 0), (2 * a, 0), (3 * a, 0)]
    pairs = [
        (1, 2), (2, 3), (3, 4),  # top chord
        (5, 6), (6, 7), (7, 8),  # bottom chord
        (2, 6), (3, 7), (4, 8),  # verticals
        (1, 6), (2, 5), (2, 7), (3, 6), (3, 8), (4, 7),  # panel diagonals
    ]
    S = [113.2, 143.2, 145.9, 174.9, 185.9, 235.9, 265.9, 297.1, 308.6, 334.3, 338.2, 497.8,
         507.6, 736.7, 791.2, 1063.7]
    P = -35000.0
    return {
        "id": "15bar",
        "title": "15-bar planar truss",
        "units": {"length": "mm", "force": "N", "stress": "MPa", "area": "mm^2", "weight": "kg"},
        "dimension": 2,
        "material": {"elastic_modulus": 2.0e5, "density": 7.8e-6},
        "nodes": nodes_block(coords),
        "members": members_block(pairs, range(1, 16)),
        "supports": {1: ["x", "y"], 5: ["x", "y"]},
        "load_cases": [
            {"name": "P1 P2 P3", "loads": [[8, 0, P], [7, 0, P], [6, 0, P]]},
            {"name": "P1 P3", "loads": [[8, 0, P], [6, 0, P]]},
            {"name": "P1 P2", "loads": [[8, 0, P], [7, 0, P]]},
        ],
        "constraints": {"stress": 120.0, "displacement": 10.0, "displacement_axes": ["x", "y"]},
        "design": {"variables": 15, "lower": S[0], "upper": S[-1], "discrete": S},
        "budgets": budgets(15, 1950, 2000, (28, 2000, 0.9426, 0.6607), (28, 2000)),
        "oracles": [],
    }


def twentyfive_bar():
    coords = [
        (-37.5, 0, 200), (37.5, 0, 200), (-37.5, 37.5, 100), (37.5, 37.5, 100),
        (37.5, -37.5, 100), (-37.5, -37.5, 100), (-100, 100, 0), (100, 100, 0),
        (100, -100, 0), (-100, -100, 0),
    ]
    pairs = [
        (1, 2), (1, 4), (2, 3), (1, 5), (2, 6), (2, 4), (2, 5), (1, 3), (1, 6), (3, 6), (4, 5),
        (3, 4), (5, 6), (3, 10), (6, 7), (4, 9), (5, 8), (3, 8), (4, 7), (6, 9), (5, 10),
        (3, 7), (4, 8), (5, 9), (6, 10),
    ]
    groups = [1] + [2] * 4 + [3] * 4 + [4] * 2 + [5] * 2 + [6] * 4 + [7] * 4 + [8] * 4
    S = [round(0.1 * k, 1) for k in range(1, 25)] + [2.6, 2.8, 3.0, 3.2, 3.4]
    hs = [0.1, 0.3, 3.4, 0.1, 2.1, 1.0, 0.5, 3.4]
    oracles = [oracle(s, "discrete", 484.85, hs) for s in ("HS", "HPSO", "MBA", "DE (literature)", "SOS", "mSOS")]
    oracles += [
        oracle("SGA", "discrete", 486.29, [0.1, 0.5, 3.4, 0.1, 1.5, 0.9, 0.6, 3.4]),
        oracle("TLBO", "discrete", 487.07, [0.1, 0.4, 3.4, 0.1, 1.9, 1.0, 0.5, 3.4]),
        oracle("PSO", "discrete", 488.57, [0.1, 0.4, 3.4, 0.1, 2.0, 1.0, 0.5, 3.4]),
        oracle("DE", "discrete", 485.57, [0.1, 0.4, 3.4, 0.1, 1.8, 1.0, 0.5, 3.4]),
        oracle("GA", "discrete", 489.49, [0.1, 0.7, 3.4, 0.1, 1.5, 0.8, 0.6, 3.4]),
        oracle("s-FOA", "discrete", 483.67, [0.1, 0.4, 3.4, 0.2, 1.7, 0.9, 0.5, 3.5], True,
               "uses 3.5 in^2, which is outside the discrete set"),
        oracle("cFOA", "discrete", 483.67, [0.1, 0.4, 3.4, 0.2, 1.7, 0.9, 0.5, 3.5], True,
               "uses 3.5 in^2, which is outside the discrete set"),
        oracle("TLBO", "continuous", 484.3278, [0.1012, 0.3621, 3.3967, 0.1019, 1.8504, 0.9904, 0.5107, 3.4]),
        oracle("PSO", "continuous", 484.3331, [0.1, 0.3163, 3.4, 0.1, 2.0739, 0.9809, 0.5055, 3.4]),
        oracle("DE", "continuous", 484.9171, [0.1, 0.3864, 3.4, 0.1, 1.7151, 0.9456, 0.5812, 3.3885]),
        oracle("GA", "continuous", 489.6039, [0.1043, 0.7715, 3.345, 0.126, 1.4307, 0.8461, 0.5675, 3.3693]),
        oracle("s-FOA", "continuous", 483.8986,
               [0.14331, 0.39318, 3.4493, 0.25793, 1.75214, 0.93785, 0.45127, 3.4493]),
    ]
    return {
        "id": "25bar",
        "title": "25-bar space transmission tower",
        "units": {"length": "in", "force": "kip", "stress": "ksi", "area": "in^2", "weight": "lb"},
        "dimension": 3,
        "material": {"elastic_modulus": 1.0e4, "density": 0.1},
        "nodes": nodes_block(coords),
        "members": members_block(pairs, groups),
        "supports": {n: ["x", "y", "z"] for n in (7, 8, 9, 10)},
        "load_cases": [{"name": "tower loads", "loads": [
            [1, 1, -10, -10], [2, 0, -10, -10], [3, 0.5, 0, 0], [6, 0.6, 0, 0]]}],
        "constraints": {"stress": 40.0, "displacement": 0.35, "displacement_axes": ["x", "y"]},
        "design": {"variables": 8, "lower": S[0], "upper": S[-1], "discrete": S},
        "budgets": budgets(8, 2000, 2000, (12, 2000, 0.2368, 0.6702), (37, 2000)),
        "oracles": oracles,
    }


def fiftytwo_bar():
    coords = [(x, y) for y in (0, 3000, 6000, 9000, 12000) for x in (0, 2000, 4000, 6000)]
    pairs, groups = [], []
    for s in range(4):
        b = 4 * s + 1
        t = b + 4
        pairs += [
            (b, t), (b + 1, t + 1), (b + 2, t + 2), (b + 3, t + 3),
            (b, t + 1), (b + 1, t), (b + 1, t + 2), (b + 2, t + 1), (b + 2, t + 3), (b + 3, t + 2),
            (t, t + 1), (t + 1, t + 2), (t + 2, t + 3),
        ]
        groups += [3 * s + 1] * 4 + [3 * s + 2] * 6 + [3 * s + 3] * 3
    oracles = [
        oracle("mSOS", "discrete", 1899.654,
               [4658.055, 1161.288, 494.193, 3303.219, 939.998, 506.451, 2238.705, 1008.385,
                388.386, 1283.868, 1161.288, 506.451]),
        oracle("DE (literature)", "discrete", 1899.654,
               [4658.055, 1161.288, 494.193, 3303.219, 939.998, 506.451, 2238.705, 1008.385,
                388.386, 1283.868, 1161.288, 506.451]),
        oracle("HPSO", "discrete", 1905.49,
               [4658.055, 1161.288, 363.225, 3303.219, 939.998, 494.193, 2238.705, 1008.385,
                388.386, 1283.868, 1161.288, 792.456]),
        oracle("MBA", "discrete", 1902.605,
               [4658.055, 1161.288, 494.193, 3303.219, 939.998, 494.193, 2238.705, 1008.385,
                494.193, 1283.868, 1161.288, 494.193]),
        oracle("SOS", "discrete", 1902.605,
               [4658.055, 1161.288, 494.193, 3303.219, 939.998, 494.193, 2238.705, 1008.385,
                494.193, 1283.868, 1161.288, 494.193]),
        oracle("s-FOA", "discrete", 1912.524,
               [4658.055, 1161.288, 252.258, 3703.218, 939.998, 252.258, 2290.318, 1008.385,
                285.161, 1283.868, 1161.288, 494.193]),
        oracle("TLBO", "discrete", 1912.524,
               [4658.055, 1161.288, 252.258, 3703.218, 939.998, 252.258, 2290.318, 1008.385,
                285.161, 1283.868, 1161.288, 494.193]),
        oracle("PSO", "discrete", 1912.524,
               [4658.055, 1161.288, 252.258, 3703.218, 939.998, 252.258, 2290.318, 1008.385,
                285.161, 1283.868, 1161.288, 494.193]),
        oracle("DE", "discrete", 1914.076,
               [4658.055, 1161.288, 285.161, 3703.218, 939.998, 252.258, 2290.318, 1008.385,
                285.161, 1283.868, 1161.288, 494.193]),
        oracle("cFOA", "discrete", 1927.828,
               [4658.055, 1161.288, 363.225, 3703.218, 939.998, 285.161, 2290.318, 1008.385,
                285.161, 1374.191, 1045.159, 494.193],
               True, "area vector gives about 1908.1 kg, 1% below the published weight"),
        oracle("TLBO", "continuous", 1816.4,
               [4386.8, 1129.2, 318.4, 3376.2, 861.9, 236, 2295.7, 968.3, 282.7, 1305, 1062, 451.9]),
        oracle("s-FOA", "continuous", 1819.2,
               [4417.6, 1121.7, 266.6, 3393.2, 877.8, 241, 2312.4, 960.3, 257.3, 1345.9, 1050, 414.4]),
        oracle("DE", "continuous", 1820.9,
               [4396.1, 1126.7, 293.2, 3375.6, 885.5, 252.9, 2304.2, 964.3, 268.9, 1312.5, 1068.9, 433.3]),
        oracle("PSO", "continuous", 1822.5,
               [4390.6, 1124.8, 282.5, 3372.4, 870.3, 271.3, 2281.3, 973.6, 294.9, 1281.7, 1092.8, 500.1]),
    ]
    return {
        "id": "52bar",
        "title": "52-bar planar tower",
        "units": {"length": "mm", "force": "N", "stress": "MPa", "area": "mm^2", "weight": "kg"},
        "dimension": 2,
        "material": {"elastic_modulus": 2.07e5, "density": 7.86e-6},
        "nodes": nodes_block(coords),
        "members": members_block(pairs, groups),
        "supports": {n: ["x", "y"] for n in (1, 2, 3, 4)},
        "load_cases": [{"name": "roof loads", "loads": [[n, 1.0e5, -2.0e5] for n in (17, 18, 19, 20)]}],
        "constraints": {"stress": 180.0, "displacement": None},
        "design": {"variables": 12, "lower": AISC_MM2[0], "upper": AISC_MM2[-1], "discrete": AISC_MM2},
        "budgets": budgets(20, 14000, 14000, (28, 14000, 0.9426, 0.6607), (28, 14000)),
        "oracles": oracles,
    }


def seventytwo_bar():
    plan = [(0, 0), (120, 0), (120, 120), (0, 120)]
    coords = [(x, y, z) for z in (0, 60, 120, 180, 240) for x, y in plan]
    pairs, groups = [], []
    for s in range(4):
        b = [4 * s + i + 1 for i in range(4)]
        t = [4 * (s + 1) + i + 1 for i in range(4)]
        pairs += [(b[i], t[i]) for i in range(4)]
        for i in range(4):
            j = (i + 1) % 4
            pairs += [(b[i], t[j]), (b[j], t[i])]
        pairs += [(t[i], t[(i + 1) % 4]) for i in range(4)]
        pairs += [(t[0], t[2]), (t[1], t[3])]
        groups += [4 * s + 1] * 4 + [4 * s + 2] * 8 + [4 * s + 3] * 4 + [4 * s + 4] * 2
    oracles = [
        oracle("s-FOA", "discrete", 403.22,
               [1.8, 0.563, 0.111, 0.111, 1.457, 0.602, 0.111, 0.111, 0.442, 0.563, 0.111, 0.111,
                0.141, 0.563, 0.391, 0.563]),
        oracle("CBO", "discrete", 391.07,
               [1.62, 0.563, 0.111, 0.111, 1.457, 0.442, 0.111, 0.111, 0.602, 0.563, 0.111, 0.111,
                0.196, 0.602, 0.391, 0.563]),
        oracle("ECBO", "discrete", 389.33,
               [1.99, 0.563, 0.111, 0.111, 1.228, 0.442, 0.111, 0.111, 0.563, 0.563, 0.111, 0.111,
                0.196, 0.563, 0.391, 0.563], False,
               "A5 printed as 1.288, which is not an AISC section; 1.228 reproduces the weight"),
        oracle("cFOA", "discrete", 408.51,
               [1.99, 0.563, 0.141, 0.141, 1.457, 0.563, 0.111, 0.111, 0.442, 0.563, 0.141, 0.141,
                0.141, 0.563, 0.391, 0.563]),
        oracle("GA", "discrete", 594.42,
               [2.38, 0.391, 0.307, 0.141, 1.266, 1.0, 0.307, 0.766, 2.38, 0.563, 0.111, 0.111,
                3.13, 0.563, 0.307, 0.602]),
        oracle("HPSO", "discrete", 393.09,
               [4.97, 1.228, 0.111, 0.111, 2.88, 1.457, 0.141, 0.111, 1.563, 1.228, 0.111, 0.196,
                0.391, 1.457, 0.766, 1.563], True, "area vector does not reproduce the published weight"),
        oracle("SGA", "discrete", 427.203,
               [0.196, 0.602, 0.307, 0.766, 0.391, 0.391, 0.141, 0.111, 0.8, 0.602, 0.141, 0.307,
                1.563, 0.766, 0.141, 0.111], True,
               "area vector does not reproduce the published weight; 0.8 is not an AISC section"),
        oracle("s-FOA", "continuous", 403.5532,
               [1.9877, 0.5367, 0.1086, 0.111, 1.3584, 0.6117, 0.0882, 0.079, 0.4876, 0.5575,
                0.1106, 0.1103, 0.1563, 0.5803, 0.4351, 0.4881]),
        oracle("TLBO", "continuous", 404.1224,
               [1.9691, 0.5344, 0.1111, 0.1118, 1.3882, 0.5921, 0.1112, 0.1129, 0.4895, 0.5577,
                0.111, 0.111, 0.1552, 0.5713, 0.408, 0.5604]),
        oracle("PSO", "continuous", 404.0382,
               [1.9119, 0.5354, 0.111, 0.111, 1.3905, 0.5936, 0.111, 0.111, 0.5408, 0.5564, 0.111,
                0.111, 0.1543, 0.5699, 0.4152, 0.5545]),
        oracle("DE", "continuous", 409.1085,
               [2.1191, 0.4829, 0.111, 0.1282, 1.5096, 0.5753, 0.111, 0.1116, 0.4232, 0.6054,
                0.1145, 0.128, 0.1674, 0.5973, 0.3945, 0.5077]),
        oracle("cFOA", "continuous", 409.1748,
               [1.9495041, 0.5275275, 0.1427016, 0.1601286, 1.3779207, 0.5971467, 0.1151736,
                0.1137861, 0.5016645, 0.5509707, 0.1581861, 0.1618047, 0.1502829, 0.5735703,
                0.3995112, 0.5398152]),
    ]
    return {
        "id": "72bar",
        "title": "72-bar four-storey space truss",
        "units": {"length": "in", "force": "kip", "stress": "ksi", "area": "in^2", "weight": "lb"},
        "dimension": 3,
        "material": {"elastic_modulus": 1.0e4, "density": 0.1},
        "nodes": nodes_block(coords),
        "members": members_block(pairs, groups),
        "supports": {n: ["x", "y", "z"] for n in (1, 2, 3, 4)},
        "load_cases": [
            {"name": "case 1", "loads": [[17, 5, 5, -5]]},
            {"name": "case 2", "loads": [[n, 0, 0, -5] for n in (17, 18, 19, 20)]},
        ],
        "constraints": {"stress": 25.0, "displacement": 0.25, "displacement_axes": ["x", "y"]},
        "design": {"variables": 16, "lower": AISC_IN2[0], "upper": AISC_IN2[-1], "discrete": AISC_IN2},
        "budgets": budgets(16, 9600, 9600, (37, 10500, 0.9455, 0.6497), (37, 10500)),
        "oracles": oracles,
    }


GROUPS_200 = [
    [1, 2, 3, 4], [5, 8, 11, 14, 17], [19, 20, 21, 22, 23, 24],
    [18, 25, 56, 63, 94, 101, 132, 139, 170, 177], [26, 29, 32, 35, 38],
    [6, 7, 9, 10, 12, 13, 15, 16, 27, 28, 30, 31, 33, 34, 36, 37], [39, 40, 41, 42],
    [43, 46, 49, 52, 55], [57, 58, 59, 60, 61, 62], [64, 67, 70, 73, 76],
    [44, 45, 47, 48, 50, 51, 53, 54, 65, 66, 68, 69, 71, 72, 74, 75], [77, 78, 79, 80],
    [81, 84, 87, 90, 93], [95, 96, 97, 98, 99, 100], [102, 105, 108, 111, 114],
    [82, 83, 85, 86, 88, 89, 91, 92, 103, 104, 106, 107, 109, 110, 112, 113],
    [115, 116, 117, 118], [119, 122, 125, 128, 131], [133, 134, 135, 136, 137, 138],
    [140, 143, 146, 149, 152],
    [120, 121, 123, 124, 126, 127, 129, 130, 141, 142, 144, 145, 147, 148, 150, 151],
    [153, 154, 155, 156], [157, 160, 163, 166, 169], [171, 172, 173, 174, 175, 176],
    [178, 181, 184, 187, 190],
    [158, 159, 161, 162, 164, 165, 167, 168, 179, 180, 182, 183, 185, 186, 188, 189],
    [191, 192, 193, 194], [195, 197, 198, 200], [196, 199],
]


def twohundred_bar():
    rows, coords = [], []
    for r in range(11):
        y = 360 + (10 - r) * 144
        step = 240 if r % 2 == 0 else 120
        ids = []
        for x in range(0, 961, step):
            coords.append((x, y))
            ids.append(len(coords))
        rows.append(ids)
    coords += [(240, 0), (720, 0)]
    pairs = []
    for mod in range(5):
        a, b, c = rows[2 * mod], rows[2 * mod + 1], rows[2 * mod + 2]
        pairs += [(a[i], a[i + 1]) for i in range(4)]
        for i in range(5):
            pairs.append((a[i], b[2 * i]))
            if i < 4:
                pairs += [(a[i], b[2 * i + 1]), (a[i + 1], b[2 * i + 1])]
        pairs += [(b[j], b[j + 1]) for j in range(8)]
        for i in range(5):
            pairs.append((b[2 * i], c[i]))
            if i < 4:
                pairs += [(b[2 * i + 1], c[i]), (b[2 * i + 1], c[i + 1])]
    a = rows[10]
    pairs += [(a[i], a[i + 1]) for i in range(4)]
    pairs += [(a[0], 76), (a[1], 76), (a[2], 76), (a[2], 77), (a[3], 77), (a[4], 77)]
    groups = [0] * 200
    for g, ms in enumerate(GROUPS_200, start=1):
        for m in ms:
            groups[m - 1] = g
    lateral = [1, 6, 15, 20, 29, 43, 48, 57, 62, 71]
    gravity = [1, 2, 3, 4, 5, 6, 8, 10, 12, 14, 15, 16, 17, 18, 19, 20, 22, 24, 26, 28, 29, 30,
               31, 32, 33, 34, 36, 38, 40, 42, 43, 44, 45, 46, 47, 48, 50, 52, 54, 56, 57, 58,
               59, 60, 61, 62, 64, 66, 68, 70, 71, 72, 73, 74, 75]
    c1 = [[n, 1.0, 0.0] for n in lateral]
    c2 = [[n, 0.0, -10.0] for n in gravity]
    designs = {
        "HS": (25447.1, [0.1253, 1.0157, 0.1069, 0.1096, 1.9369, 0.2686, 0.1042, 2.9731, 0.1309,
                         4.1831, 0.3967, 0.4416, 5.1873, 0.1912, 6.241, 0.6994, 0.1158, 7.7643,
                         0.1, 8.8279, 0.6986, 1.5563, 10.9806, 0.1317, 12.1492, 1.6373, 5.0032,
                         9.3545, 15.091]),
        "TLBO": (25497, [0.1002, 0.9446, 0.35, 0.1124, 1.9457, 0.2879, 0.1449, 3.1724, 0.1011,
                         4.1576, 0.3097, 0.1824, 5.3714, 0.1417, 6.4221, 0.4274, 0.548, 7.7648,
                         0.1099, 8.7661, 0.7582, 0.502, 10.6533, 0.6135, 11.6602, 1.3, 6.4437,
                         10.5826, 13.9279]),
        "PSO": (25962, [0.1, 0.9763, 0.1, 0.1, 1.9781, 0.145, 0.4787, 3.0254, 0.114, 4.049,
                        0.3991, 0.4129, 5.2903, 0.4163, 6.2992, 0.7178, 0.3752, 8.0483, 0.6505,
                        9.0707, 1.1272, 0.2648, 11.7034, 0.9308, 12.7045, 1.6645, 4.1803, 9.0751,
                        15.4446]),
        "DE": (26189, [0.1464, 1.1397, 0.2703, 0.1481, 2.2242, 0.2667, 0.187, 3.2557, 0.1,
                       4.2936, 0.3697, 0.3315, 5.5847, 0.1, 6.481, 0.6262, 0.4016, 8.0576, 0.1297,
                       8.9544, 0.7092, 1.2072, 11.3708, 0.3314, 12.4438, 1.6162, 5.0998, 10.0299,
                       14.6571]),
        "GA": (31264, [0.1976, 1.0795, 0.1196, 0.1992, 4.5599, 0.1386, 0.1442, 5.8761, 0.2381,
                       4.5466, 0.2686, 0.2601, 4.9692, 1.1107, 5.7642, 0.9245, 0.5035, 7.1131,
                       0.9186, 7.9984, 0.6227, 5.5998, 8.6013, 1.8583, 9.6234, 2.3529, 10.7055,
                       14.4036, 12.9477]),
        "s-FOA": (25505, [0.1008, 0.9946, 0.1035, 0.1184, 1.9909, 0.1651, 0.3790, 3.0480, 0.1100,
                          4.0586, 0.5880, 0.2053, 5.3936, 0.2111, 6.3832, 0.4990, 0.3609, 7.8628,
                          0.1003, 8.8603, 0.6673, 0.4757, 10.6563, 0.2405, 11.6516, 1.0313,
                          6.9146, 10.8883, 13.5963]),
    }
    oracles = [oracle(k, "continuous", w, v) for k, (w, v) in designs.items()]
    oracles.append(oracle(
        "cFOA", "continuous", 26746,
        [0.84276, 1.42356, 0.1783, 0.97888, 2.00472, 0.30422, 0.44632, 3.20697, 0.20619, 4.13978,
         0.41515, 0.17381, 5.29643, 0.83119, 6.25224, 0.79046, 0.13696, 8.64241, 0.12575,
         8.98813, 0.6403, 0.20019, 10.60984, 0.33525, 11.65307, 0.86093, 6.94793, 11.96894,
         13.27711],
        True, "area vector gives about 26851 lb, 0.4% above the published weight"))
    return {
        "id": "200bar",
        "title": "200-bar planar truss",
        "units": {"length": "in", "force": "kip", "stress": "ksi", "area": "in^2", "weight": "lb"},
        "dimension": 2,
        "material": {"elastic_modulus": 3.0e4, "density": 0.283},
        "nodes": nodes_block(coords),
        "members": members_block(pairs, groups),
        "supports": {76: ["x", "y"], 77: ["x", "y"]},
        "load_cases": [
            {"name": "lateral", "loads": c1},
            {"name": "gravity", "loads": c2},
            {"name": "combined", "loads": c1 + c2},
        ],
        "constraints": {"stress": 10.0, "displacement": None},
        "design": {"variables": 29, "lower": 0.1, "upper": 20.0, "discrete": None},
        "budgets": budgets(60, 45000, 45000, (75, 48000, 0.8803, 0.4717), (75, 48000)),
        "oracles": oracles,
    }


BUILDERS = [ten_bar, fifteen_bar, twentyfive_bar, fiftytwo_bar, seventytwo_bar, twohundred_bar]


class _Dumper(yaml.SafeDumper):
    pass


def _flow_list(dumper, data):
    # short numeric rows stay on one line
    flow = all(not isinstance(v, (list, dict)) for v in data)
    return dumper.represent_sequence("tag:yaml.org,2002:seq", data, flow_style=flow)


_Dumper.add_representer(list, _flow_list)


def main() -> None:
    DATA.mkdir(parents=True, exist_ok=True)
    for build in BUILDERS:
        spec = build()
        path = DATA / f"{spec['id']}.yaml"
        with path.open("w") as fh:
            yaml.dump(spec, fh, Dumper=_Dumper, sort_keys=False, width=100)
        print(f"wrote {path}")


if __name__ == "__main__":
    main()
