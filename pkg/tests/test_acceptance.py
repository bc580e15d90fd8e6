"""Acceptance criteria 1-10.  Each test prints one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py -v`` to see the lines; they are
printed with capture disabled so they also show up in a plain run.
"""

import time
from itertools import permutations, product

from hwtrans.combinatorics import (SkewDiagram, compositions, enumerate_tableaux, kostka_number,
                                   kostka_polynomial, partitions, skew_diagrams, transpose,
                                   weak_compositions)
from hwtrans.hwv import (build_u, build_uT, build_vT, dual_points, enumerate_labels, evaluation_rank,
                         flip, pullback_phi, sample_nilpotent, spanning_corollary, special_tableaux)
from hwtrans.linalg import rank
from hwtrans.oracle import (graded_nilcone_dim, kronecker, multigraded_multiplicity,
                            nilcone_instances)
from hwtrans.pictures import count_admissible
from hwtrans.polyring import MatrixTuple, evaluate, unipotent_invariance_proof
from hwtrans.specht import homspace_basis_vectors, homspace_rank, verify_coinvariants
from hwtrans.verify import (DATA_POINT_A, pullback_rank_by_degree, pullback_rank_by_multidegree,
                            reproduce_data_point_a, reproduce_data_point_b, verify_labels)
from oracles import lr_coefficient, weyl_formula


def report(capsys, k, ok, detail, start):
    elapsed = time.perf_counter() - start
    with capsys.disabled():
        print(f"\nCRITERION {k}: {'PASS' if ok else 'FAIL'} {detail} [{elapsed:.1f}s]")
    return elapsed


def contained(kappa, lam):
    return len(kappa) <= len(lam) and all(k <= l for k, l in zip(kappa, lam))


# ---------------------------------------------------------------------------

def test_criterion_1_picture_counts(capsys):
    start = time.perf_counter()
    bad, n = [], 0
    for t in range(1, 7):
        for k in range(0, 7):
            for lam in partitions(t + k):
                for kappa in partitions(k):
                    if not contained(kappa, lam):
                        continue
                    E = SkewDiagram(lam, kappa)
                    for mu in partitions(t):
                        n += 1
                        if count_admissible(SkewDiagram.straight(mu), E) != lr_coefficient(lam, kappa, mu):
                            bad.append((lam, kappa, mu))
        for lam in partitions(t):
            for mu in partitions(t):
                n += 1
                if count_admissible(SkewDiagram.straight(mu), SkewDiagram.straight(lam)) != int(lam == mu):
                    bad.append((lam, (), mu))
    elapsed = report(capsys, 1, not bad, f"{n} picture counts vs LR rule, |kappa| <= 6, mismatches={bad[:3]}", start)
    assert not bad
    assert elapsed < 60


def test_criterion_2_homspace_basis(capsys):
    start = time.perf_counter()
    bad, n = [], 0
    for t in range(1, 6):
        ds = skew_diagrams(t)
        for E in ds:
            for F in ds:
                n += 1
                c = count_admissible(F, E)
                vecs = homspace_basis_vectors(E, F)
                if homspace_rank(E, F) != c or len(vecs) != c or rank(vecs) != c:
                    bad.append((E, F))
    elapsed = report(capsys, 2, not bad, f"{n} skew pairs with t <= 5, mismatches={bad[:3]}", start)
    assert not bad
    assert elapsed < 300


def test_criterion_3_coinvariants(capsys):
    start = time.perf_counter()
    bad, n = [], 0
    for t in range(1, 6):
        for E in partitions(t):
            for F in partitions(t):
                for nu in compositions(t):
                    n += 1
                    count, dim, independent = verify_coinvariants(E, F, nu)
                    if count != dim or not independent:
                        bad.append((E, F, nu, count, dim))
    elapsed = report(capsys, 3, not bad, f"{n} (E, F, nu) with t <= 5, mismatches={bad[:3]}", start)
    assert not bad
    assert elapsed < 600


def test_criterion_4_special_weights(capsys):
    start = time.perf_counter()
    counts, identity, invariant, flipped = [], [], [], []
    n = 0
    for t in range(1, 6):
        for lam in partitions(t):
            for m in range(lam[0], 4):
                r, s = t, len(lam)
                Ts = special_tableaux(lam, m)
                if len(Ts) != weyl_formula(transpose(lam), m):
                    counts.append((lam, m))
                pts = dual_points(lam, m, r, s)
                for S in Ts:
                    n += 1
                    u = build_uT(lam, S, r, s, m)
                    v = build_vT(lam, S, r, s, m)
                    row = [evaluate(u, A) for _, A in pts]
                    if row != [int(T == S) for T, _ in pts]:
                        identity.append((lam, m, S.rows()))
                    if not (unipotent_invariance_proof(u) and unipotent_invariance_proof(v)):
                        invariant.append((lam, m, S.rows()))
                    if flip(u) not in (v, v * -1):
                        flipped.append((lam, m, S.rows()))
    ok = not (counts or identity or invariant or flipped)
    detail = (f"{n} tableaux; Weyl count mismatches={len(counts)}, identity failures={len(identity)}"
              f" (first {identity[:1]}), invariance failures={len(invariant)}, flip failures={len(flipped)}")
    elapsed = report(capsys, 4, ok, detail, start)
    assert not counts
    assert not invariant
    assert not flipped
    assert elapsed < 300
    assert not identity, f"evaluation matrix at dual points is not the identity: {identity}"


def test_criterion_5_label_counts(capsys):
    start = time.perf_counter()
    bad, n = [], 0
    for t in range(1, 5):
        for lam in partitions(t):
            for mu in partitions(t):
                for m in range(1, 4):
                    res = verify_labels(lam, mu, m)
                    n += len(res["multidegrees"])
                    if not res["ok"]:
                        bad.append((lam, mu, m))
    elapsed = report(capsys, 5, not bad, f"{n} (lambda, mu, nu) slices with t <= 4, m <= 3, failures={bad[:3]}", start)
    assert not bad
    assert elapsed < 1800


def test_criterion_6_corollary_spanning(capsys):
    start = time.perf_counter()
    bad, n = [], 0
    for t in range(1, 4):
        for lam in partitions(t):
            for mu in partitions(t):
                for m in (1, 2):
                    r, s = len(mu), len(lam)
                    labels = [build_u(L, r, s, m).terms for L in enumerate_labels(lam, mu, m, r, s)]
                    cor = [spanning_corollary(lam, mu, g, tau, r, s, m).terms
                           for g in product(range(1, m + 1), repeat=t)
                           for tau in permutations(range(1, t + 1))]
                    n += 1
                    if not rank(cor) == rank(labels) == rank(cor + labels):
                        bad.append((lam, mu, m))
    elapsed = report(capsys, 6, not bad, f"{n} (lambda, mu, m) spans with t <= 3, m <= 2, failures={bad}", start)
    assert not bad
    assert elapsed < 300


def test_criterion_7_data_point_a(capsys):
    start = time.perf_counter()
    res = reproduce_data_point_a()
    # chi = [lambda, mu] with lambda = (3,3), mu = (2,2,2); n = 6, pulled back along the regular nilpotent
    lam, mu, n = (3, 3), (2, 2, 2), len(DATA_POINT_A["chi"])
    m, r, s = n - 1, len(mu), len(lam)
    ranks = pullback_rank_by_degree(lam, mu, m, r, s, (n,), range(4), max_degree=9)
    # the lowest possible degree is t = 6; degrees without labels contribute rank 0
    below = {d: ranks.get(d, {"labels": 0, "rank": 0}) for d in range(sum(lam), 9)}
    lower = all(v["rank"] == 0 for v in below.values())
    at9 = ranks.get(9, {"labels": 0, "rank": 0})
    ok = res["ok"] and lower and at9["rank"] >= 2
    detail = (f"lowest degree {res['lowest_degree']} dim {res['dimension']} (expected 9, 2); "
              f"pullback ranks below 9 = {below}, at 9 = {at9}")
    elapsed = report(capsys, 7, ok, detail, start)
    assert res["ok"]
    assert lower and at9["rank"] >= 2
    assert elapsed < 1800


def test_criterion_8_data_point_b(capsys):
    start = time.perf_counter()
    res = reproduce_data_point_b()
    got = [(c["n"], c["lowest_degree"]) for c in res["cases"]]
    elapsed = report(capsys, 8, res["ok"], f"(n, lowest degree) = {got}, expected [(7, 18), (8, 17)]", start)
    assert res["ok"]
    assert elapsed < 300


def test_criterion_9_oracle_consistency(capsys):
    start = time.perf_counter()
    nil_bad, n_nil = [], 0
    for n, chi, dims in nilcone_instances(4, 6):
        n_nil += 1
        graded = graded_nilcone_dim(chi)
        if any(graded.get(d, 0) != c for d, c in dims.items()):
            nil_bad.append(chi)
    kr_bad = []
    for t in range(1, 7):
        parts = list(partitions(t))
        for a, b, c in product(parts, repeat=3):
            g = kronecker(a, b, c)
            if g < 0 or not g == kronecker(b, a, c) == kronecker(a, c, b) == kronecker(c, b, a):
                kr_bad.append((a, b, c))
    ko_bad = []
    for t in range(1, 7):
        for lam in partitions(t):
            for mu in partitions(t):
                direct = len(enumerate_tableaux(SkewDiagram.straight(lam), "semistandard", weight=mu))
                if sum(kostka_polynomial(lam, mu).values()) != direct or kostka_number(lam, mu) != direct:
                    ko_bad.append((lam, mu))
    ok = not (nil_bad or kr_bad or ko_bad)
    detail = (f"{n_nil} nilcone weights (n <= 4, d <= 6) mismatches={nil_bad}; "
              f"Kronecker failures={len(kr_bad)}; Kostka K(1) failures={len(ko_bad)}")
    elapsed = report(capsys, 9, ok, detail, start)
    assert ok
    assert elapsed < 600


def test_criterion_10_pullback_isomorphism(capsys):
    start = time.perf_counter()
    lam = mu = (1, 1)
    m, r, s, n = 2, 2, 2, 6
    assert n >= (m + 1) * max(r, s)
    jordan = (3, 3)   # X^3 = 0 generically, so the orbit closure is N_{6,2}
    seeds = range(6)
    rows = pullback_rank_by_multidegree(lam, mu, m, r, s, jordan, seeds)
    # the same ranks from the symbolic pullbacks evaluated at the matrices themselves
    Xs = [MatrixTuple((sample_nilpotent(jordan, seed=sd),)) for sd in seeds]
    symbolic = []
    for nu in weak_compositions(sum(lam), m):
        pulled = [pullback_phi(build_u(L, r, s, m), n) for L in enumerate_labels(lam, mu, m, r, s, nu=nu)]
        symbolic.append(evaluation_rank(pulled, Xs) if pulled else 0)
    ok = all(row["rank"] == row["labels"] == sym == multigraded_multiplicity(lam, mu, row["nu"])
             for row, sym in zip(rows, symbolic))
    detail = f"per multidegree (nu, labels, rank) = {[(tuple(x['nu']), x['labels'], x['rank']) for x in rows]}"
    elapsed = report(capsys, 10, ok, detail, start)
    assert ok
    assert elapsed < 600
