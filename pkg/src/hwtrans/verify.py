"""End-to-end checks shared by the CLI, the scripts and the acceptance suite.

Each function returns a plain dict with an ``ok`` flag so callers can emit
it as JSON unchanged.
"""

from collections import defaultdict

from .combinatorics import partition, weak_compositions
from .hwv import (build_u, enumerate_labels, evaluation_rank, expected_weight, phi_point,
                  random_point, sample_nilpotent)
from .oracle import brute_force_hwv_dim, graded_nilcone_dim, lowest_degree, multigraded_multiplicity
from .polyring import multidegree, torus_weight, unipotent_invariance_proof


def minimal_rs(lam, mu):
    return max(len(partition(mu)), 1), max(len(partition(lam)), 1)


def verify_labels(lam, mu, m, r=None, s=None, seed=0, brute_force=True, invariance=True):
    """Per-multidegree label counts against both oracles, plus evaluation rank."""
    lam, mu = partition(lam), partition(mu)
    r0, s0 = minimal_rs(lam, mu)
    r = r or r0
    s = s or s0
    t = sum(lam)
    weight = expected_weight(lam, mu, r, s)
    rows = []
    ok = True
    for nu in weak_compositions(t, m):
        labels = enumerate_labels(lam, mu, m, r, s, nu=nu)
        polys = [build_u(L, r, s, m) for L in labels]
        mult = multigraded_multiplicity(lam, mu, nu)
        row = {"nu": list(nu), "labels": len(labels), "multiplicity": mult}
        good = len(labels) == mult
        if brute_force:
            bf = brute_force_hwv_dim(r, s, m, nu, lam, mu)
            row["brute_force"] = bf
            good = good and bf == len(labels)
        if polys:
            pts = [random_point((m, r, s), seed + k) for k in range(len(polys) + 2)]
            row["rank"] = evaluation_rank(polys, pts)
            good = good and row["rank"] == len(polys)
            if invariance:
                inv = all(bool(unipotent_invariance_proof(p)) for p in polys)
                wt = all(torus_weight(p) == weight and multidegree(p) == tuple(nu) for p in polys)
                row["invariant"] = inv
                row["weight_ok"] = wt
                good = good and inv and wt
        row["ok"] = good
        ok = ok and good
        rows.append(row)
    return {"lambda": list(lam), "mu": list(mu), "m": m, "r": r, "s": s, "multidegrees": rows, "ok": ok}


def pulled_back_degree(nu):
    """Total degree of the pullback along phi: sum of l * nu_l."""
    return sum(l * x for l, x in enumerate(nu, start=1))


def pullback_rank_by_degree(lam, mu, m, r, s, jordan_type, seeds, max_degree=None):
    """Evaluation rank of the phi-pulled-back labels, grouped by total degree.

    Each label polynomial is evaluated at the lower-left corners of the
    powers of a seeded nilpotent matrix, which equals evaluating its
    pullback at that matrix.
    """
    points = [phi_point(sample_nilpotent(jordan_type, seed=sd), r, s, m) for sd in seeds]
    by_degree = defaultdict(list)
    for nu in weak_compositions(sum(lam), m):
        d = pulled_back_degree(nu)
        if max_degree is not None and d > max_degree:
            continue
        for L in enumerate_labels(lam, mu, m, r, s, nu=nu):
            by_degree[d].append(build_u(L, r, s, m))
    out = {}
    for d in sorted(by_degree):
        polys = by_degree[d]
        rk = evaluation_rank(polys, points)
        out[d] = {"labels": len(polys), "rank": rk}
    return out


def pullback_rank_by_multidegree(lam, mu, m, r, s, jordan_type, seeds):
    points = [phi_point(sample_nilpotent(jordan_type, seed=sd), r, s, m) for sd in seeds]
    out = []
    for nu in weak_compositions(sum(lam), m):
        polys = [build_u(L, r, s, m) for L in enumerate_labels(lam, mu, m, r, s, nu=nu)]
        rk = evaluation_rank(polys, points) if polys else 0
        out.append({"nu": list(nu), "labels": len(polys), "rank": rk})
    return out


DATA_POINT_A = {"chi": (3, 3, 0, -2, -2, -2), "lowest_degree": 9, "dimension": 2}
DATA_POINT_B = ({"chi": (4, 4, 4, -3, -3, -3, -3), "lowest_degree": 18},
             {"chi": (4, 4, 4, 0, -3, -3, -3, -3), "lowest_degree": 17})


def reproduce_data_point_a():
    poly = graded_nilcone_dim(DATA_POINT_A["chi"])
    d, c = lowest_degree(poly)
    ok = d == DATA_POINT_A["lowest_degree"] and c == DATA_POINT_A["dimension"]
    return {"check": "remark3-a", "chi": list(DATA_POINT_A["chi"]), "lowest_degree": d,
            "dimension": c, "expected": [DATA_POINT_A["lowest_degree"], DATA_POINT_A["dimension"]],
            "ok": ok}


def reproduce_data_point_b():
    rows = []
    for case in DATA_POINT_B:
        d, c = lowest_degree(graded_nilcone_dim(case["chi"]))
        rows.append({"chi": list(case["chi"]), "n": len(case["chi"]), "lowest_degree": d,
                     "dimension": c, "expected": case["lowest_degree"],
                     "ok": d == case["lowest_degree"]})
    return {"check": "remark3-b", "cases": rows, "ok": all(r["ok"] for r in rows)}

