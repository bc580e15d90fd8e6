from itertools import product
from math import factorial

import pytest

from hwtrans.combinatorics import kostka_number, partitions, transpose, weak_compositions
from hwtrans import oracle
from hwtrans.config import BoundError, Bounds
from hwtrans.oracle import (DEFAULT_DEGREE_MAP, CharacterTable, DegreeMap, brute_force_hwv_dim,
                            brute_force_nilcone_hwv_dim, calibrate_degree_map, centralizer_order,
                            character, class_size, closed_form_column_case, dominant_weights,
                            fitted_degree_map, graded_nilcone_dim, kronecker, lowest_degree,
                            multigraded_multiplicity, nilcone_instances, principal_minor_sums,
                            qpoly_to_json, shifted_shape)
from hwtrans.polyring import Poly
from oracles import hook_formula, weyl_formula


def class_sign(cls):
    return (-1) ** (sum(cls) - len(cls))


# ---------------------------------------------------------------- characters

@pytest.mark.parametrize("t", range(1, 7))
def test_trivial_and_sign_characters(t):
    for cls in partitions(t):
        assert character((t,), cls) == 1
        assert character((1,) * t, cls) == class_sign(cls)
    for lam in partitions(t):
        assert character(lam, (1,) * t) == hook_formula(lam)


@pytest.mark.parametrize("t", range(1, 7))
def test_orthogonality(t):
    table = CharacterTable.build(t).values
    parts = list(partitions(t))
    assert sum(class_size(c) for c in parts) == factorial(t)
    for lam in parts:
        for mu in parts:
            s = sum(class_size(c) * table[(lam, c)] * table[(mu, c)] for c in parts)
            assert s == (factorial(t) if lam == mu else 0)
    for a in parts:
        for b in parts:
            s = sum(table[(lam, a)] * table[(lam, b)] for lam in parts)
            assert s == (centralizer_order(a) if a == b else 0)


def test_character_errors():
    with pytest.raises(ValueError):
        character((2,), (1,))
    with pytest.raises(BoundError):
        character((11,), (11,))


# ------------------------------------------------------------------ Kronecker

def test_kronecker_examples():
    assert kronecker((2, 1), (2, 1), (2, 1)) == 1
    for t in range(1, 6):
        for lam in partitions(t):
            for eta in partitions(t):
                assert kronecker(lam, (t,), eta) == int(lam == eta)
                assert kronecker(lam, (1,) * t, eta) == int(eta == transpose(lam))


@pytest.mark.parametrize("t", range(1, 7))
def test_kronecker_symmetric_and_nonnegative(t):
    parts = list(partitions(t))
    for a, b, c in product(parts, repeat=3):
        g = kronecker(a, b, c)
        assert g >= 0
        assert g == kronecker(b, a, c) == kronecker(c, b, a) == kronecker(a, c, b)


# ------------------------------------------------------ multigraded counts

def test_multigraded_examples():
    assert multigraded_multiplicity((2,), (2,), (2,)) == 1
    assert multigraded_multiplicity((2,), (1,), (1,)) == 0
    for nu in weak_compositions(2, 1):
        assert multigraded_multiplicity((1, 1), (2,), nu) == 0


@pytest.mark.parametrize("m", range(1, 4))
def test_multigraded_total_for_column_partner(m):
    # summing over nu evaluates s_{1^t} * s_lam at 1^m, which is s_{lam'}(1^m)
    for t in range(1, 5):
        for lam in partitions(t):
            total = sum(multigraded_multiplicity((1,) * t, lam, nu) for nu in weak_compositions(t, m))
            assert total == weyl_formula(transpose(lam), m)


def test_brute_force_hwv_examples():
    assert brute_force_hwv_dim(1, 1, 1, (1,), (1,), (1,)) == 1
    for r, s in [(1, 2), (2, 1), (2, 2)]:
        assert brute_force_hwv_dim(r, s, 1, (2,), (1, 1), (2,)) == 0
        assert brute_force_hwv_dim(r, s, 1, (2,), (2,), (1, 1)) == 0
    # the 2 x 2 determinant
    assert brute_force_hwv_dim(2, 2, 1, (2,), (1, 1), (1, 1)) == 1


@pytest.mark.parametrize("t", range(1, 4))
def test_brute_force_matches_multigraded_grid(t):
    for m in (1, 2):
        for lam in partitions(t):
            for mu in partitions(t):
                r, s = len(mu), len(lam)
                for nu in weak_compositions(t, m):
                    assert brute_force_hwv_dim(r, s, m, nu, lam, mu) == multigraded_multiplicity(lam, mu, nu)


def test_brute_force_bound_is_enforced(monkeypatch):
    monkeypatch.setattr(oracle, "current_bounds", lambda: Bounds(brute_force_monomials=3))
    with pytest.raises(BoundError):
        brute_force_hwv_dim(2, 2, 2, (1, 1), (1, 1), (1, 1))


# ------------------------------------------------------------- nilpotent cone

def test_graded_examples():
    for n in range(1, 6):
        assert graded_nilcone_dim((0,) * n) == {0: 1}
    assert graded_nilcone_dim((1, -1)) == {1: 1}
    assert graded_nilcone_dim((2, -2)) == {2: 1}
    assert shifted_shape((3, 3, 0, -2, -2, -2)) == ((5, 5, 2), 2)
    with pytest.raises(ValueError):
        graded_nilcone_dim((-1, 1))
    with pytest.raises(ValueError):
        graded_nilcone_dim((1, 0))


def test_principal_minor_sums_small():
    dims = (1, 2, 2)
    s1, s2 = principal_minor_sums(2)
    assert s1 == Poly.var(1, 1, 1, dims) + Poly.var(1, 2, 2, dims)
    assert s2 == Poly.var(1, 1, 1, dims) * Poly.var(1, 2, 2, dims) - Poly.var(1, 1, 2, dims) * Poly.var(1, 2, 1, dims)


def test_brute_force_nilcone_examples():
    assert brute_force_nilcone_hwv_dim(2, (1, -1), 1) == 1
    assert brute_force_nilcone_hwv_dim(2, (0, 0), 1) == 0
    assert brute_force_nilcone_hwv_dim(2, (0, 0), 0) == 1
    brute = {d: brute_force_nilcone_hwv_dim(3, (1, 0, -1), d) for d in range(7)}
    assert {d: c for d, c in brute.items() if c} == graded_nilcone_dim((1, 0, -1)) == {1: 1, 2: 1}
    with pytest.raises(BoundError):
        brute_force_nilcone_hwv_dim(5, (0,) * 5, 1)


def test_graded_matches_brute_force_up_to_three():
    for n, chi, dims in nilcone_instances(3, 6):
        graded = graded_nilcone_dim(chi)
        assert all(graded.get(d, 0) == dims[d] for d in dims), chi


@pytest.mark.parametrize("n", range(1, 7))
def test_closed_form_column_case(n):
    for chi in dominant_weights(n, 4):
        if chi and chi[-1] < -1:
            with pytest.raises(ValueError):
                closed_form_column_case(chi)
            continue
        assert graded_nilcone_dim(chi) == closed_form_column_case(chi)


@pytest.mark.parametrize("n", range(1, 7))
def test_graded_at_one_is_kostka(n):
    for chi in dominant_weights(n, 4):
        lam_bar, s = shifted_shape(chi)
        assert sum(graded_nilcone_dim(chi).values()) == kostka_number(lam_bar, (s,) * n)


def test_calibration_is_unique():
    instances = nilcone_instances(3, 6)
    closed = [chi for n in range(1, 6) for chi in dominant_weights(n, 3) if not chi or chi[-1] >= -1]
    assert calibrate_degree_map(instances, closed) == [DEFAULT_DEGREE_MAP]
    assert fitted_degree_map(instances, closed) == DEFAULT_DEGREE_MAP
    # with no data every candidate fits, and the fit must refuse to choose
    with pytest.raises(BoundError):
        fitted_degree_map([], ())


def test_cocharge_map_differs():
    chi = (1, 0, 0, -1)
    assert graded_nilcone_dim(chi) == {1: 1, 2: 1, 3: 1}
    assert graded_nilcone_dim(chi, DegreeMap("cocharge", 1, 0)) == {3: 1, 4: 1, 5: 1}


def test_lowest_degree_and_json():
    poly = graded_nilcone_dim((3, 3, 0, -2, -2, -2))
    assert lowest_degree(poly) == (9, 2)
    js = qpoly_to_json({2: 1, 1: 3})
    assert js["coeffs"] == [[1, 3], [2, 1]]
    assert js["degree_map"] == {"statistic": "charge", "a": 1, "b": 0}
