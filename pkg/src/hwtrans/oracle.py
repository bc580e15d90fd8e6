"""Independent dimension oracles.

Symmetric-group characters (Murnaghan-Nakayama on beta-sets), Kronecker
coefficients, multigraded multiplicities, graded dimensions of highest
weight vectors on the nilpotent cone via charge, and brute-force kernels
computed by exact linear algebra.
"""

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, combinations_with_replacement, permutations
from math import factorial, prod

from .combinatorics import (SkewDiagram, charge, enumerate_tableaux, kostka_number, n_statistic,
                            partition, partitions, reversed_kostka, transpose)
from .config import BoundError, check, current_bounds
from .linalg import EchelonBasis, rank
from .polyring import Poly, conjugation_raising, unipotent_action
from .specht import sign


# -------------------------------------------------------------- characters

@lru_cache(maxsize=None)
def character(lam, cls):
    """chi^lam at the class of cycle type ``cls`` (Murnaghan-Nakayama)."""
    lam, cls = partition(lam), partition(cls)
    if sum(lam) != sum(cls):
        raise ValueError("character needs |lam| = |class|")
    check(sum(lam), current_bounds().character_max_t, "t")
    return _mn(lam, cls)


def _mn(lam, cls):
    if not cls:
        return 1
    k, rest = cls[0], cls[1:]
    L = len(lam)
    beta = [lam[i] + (L - 1 - i) for i in range(L)]
    bset = set(beta)
    total = 0
    for b in beta:
        nb = b - k
        if nb < 0 or nb in bset:
            continue
        height = sum(1 for x in beta if nb < x < b)
        new = sorted((bset - {b}) | {nb}, reverse=True)
        mu = partition(tuple(x - (L - 1 - i) for i, x in enumerate(new)))
        total += (-1) ** height * _mn_cached(mu, rest)
    return total


@lru_cache(maxsize=None)
def _mn_cached(lam, cls):
    return _mn(lam, cls)


def centralizer_order(cls):
    c = Counter(partition(cls))
    return prod(k ** m * factorial(m) for k, m in c.items())


def class_size(cls):
    return factorial(sum(cls)) // centralizer_order(cls)


@dataclass(frozen=True)
class CharacterTable:
    t: int
    values: dict

    @classmethod
    def build(cls, t):
        parts = list(partitions(t))
        return cls(t, {(lam, mu): character(lam, mu) for lam in parts for mu in parts})


def kronecker(lam, mu, eta):
    """g_{lam,mu,eta} = (1/t!) sum_classes |class| chi chi chi."""
    lam, mu, eta = partition(lam), partition(mu), partition(eta)
    t = sum(lam)
    if sum(mu) != t or sum(eta) != t:
        raise ValueError("Kronecker coefficients need equal sizes")
    total = sum(class_size(c) * character(lam, c) * character(mu, c) * character(eta, c)
                for c in partitions(t))
    q, rem = divmod(total, factorial(t))
    assert rem == 0
    return q


def multigraded_multiplicity(lam, mu, nu):
    """Coefficient of z^nu in s_lam * s_mu (internal product)."""
    lam, mu = partition(lam), partition(mu)
    t = sum(lam)
    if sum(mu) != t:
        return 0
    if sum(nu) != t:
        raise ValueError("sum(nu) must equal |lam|")
    return sum(kronecker(lam, mu, eta) * kostka_number(eta, nu) for eta in partitions(t))


# ------------------------------------------------ brute-force hwv dimension

def _slice_monomials(r, s, m, nu, row_counts, col_counts):
    """Monomials in x(l)_{ij} with the given multidegree and row/column counts."""
    cells = [(i, j) for i in range(1, r + 1) for j in range(1, s + 1)]
    rows = list(row_counts)
    cols = list(col_counts)
    out = []

    def per_component(l, cur):
        if l > m:
            if not any(rows) and not any(cols):
                out.append(tuple(sorted(cur)))
            return
        fill(l, 0, nu[l - 1], cur)

    def fill(l, k, left, cur):
        if left == 0:
            per_component(l + 1, cur)
            return
        if k == len(cells):
            return
        i, j = cells[k]
        cap = min(left, rows[i - 1], cols[j - 1])
        for e in range(cap, -1, -1):
            if e:
                rows[i - 1] -= e
                cols[j - 1] -= e
                fill(l, k + 1, left - e, cur + [((l, i, j), e)])
                rows[i - 1] += e
                cols[j - 1] += e
            else:
                fill(l, k + 1, left, cur)

    per_component(1, [])
    return out


def brute_force_hwv_dim(r, s, m, nu, lam, mu):
    """dim of U_r x U_s invariants of multidegree nu and weight ((-mu)^rev, lam).

    The kernel of f -> u(1).f - f over all elementary generators; invariance
    under u(1) already forces invariance under every u(c) in characteristic 0.
    """
    lam, mu = partition(lam), partition(mu)
    if len(lam) > s or len(mu) > r:
        return 0
    if sum(nu) != sum(lam) or sum(lam) != sum(mu):
        return 0
    row_counts = [0] * r
    for k, x in enumerate(mu):
        row_counts[r - 1 - k] = x
    col_counts = list(lam) + [0] * (s - len(lam))
    monos = _slice_monomials(r, s, m, tuple(nu), row_counts, col_counts)
    check(len(monos), current_bounds().brute_force_monomials, "monomial count")
    dims = (m, r, s)
    basis = EchelonBasis()
    for mono in monos:
        p = Poly({mono: 1}, dims)
        vec = {}
        for side, size in (("r", r), ("s", s)):
            for i in range(1, size):
                diff = unipotent_action(p, side, i, 1) - p
                for k, c in diff.terms.items():
                    vec[(side, i, k)] = c
        basis.add(vec)
    return len(monos) - len(basis)


# -------------------------------------------------------- nilpotent cone

@dataclass(frozen=True)
class DegreeMap:
    """degree = a * statistic + b, statistic in {charge, cocharge}."""

    statistic: str = "charge"
    a: int = 1
    b: int = 0

    def __call__(self, T, mu):
        c = charge(T)
        if self.statistic == "cocharge":
            c = n_statistic(mu) - c
        return self.a * c + self.b


DEFAULT_DEGREE_MAP = DegreeMap()


def _check_weight(chi):
    chi = tuple(int(x) for x in chi)
    if any(a < b for a, b in zip(chi, chi[1:])):
        raise ValueError(f"weight {chi} is not dominant")
    if sum(chi) != 0:
        raise ValueError(f"weight {chi} does not sum to zero")
    return chi


def shifted_shape(chi):
    """(lam_bar, s) with s = -chi_n and lam_bar = chi + s * 1_n."""
    chi = _check_weight(chi)
    if not chi:
        return (), 0
    s = -chi[-1]
    return partition(tuple(x + s for x in chi)), s


@lru_cache(maxsize=None)
def _charge_tableaux(lam_bar, weight):
    return tuple(enumerate_tableaux(SkewDiagram.straight(lam_bar), "semistandard", weight=weight))


def graded_nilcone_dim(chi, degree_map=DEFAULT_DEGREE_MAP):
    """Graded dimension {degree: dim} of weight-chi U_n invariants on the nilpotent cone."""
    chi = _check_weight(chi)
    n = len(chi)
    lam_bar, s = shifted_shape(chi)
    weight = (s,) * n if s else ()
    out = Counter()
    for T in _charge_tableaux(lam_bar, weight):
        d = degree_map(T, weight)
        if d < 0:
            raise ValueError("degree map produced a negative degree")
        out[d] += 1
    return dict(sorted(out.items()))


def closed_form_column_case(chi):
    """K~_{lam_bar', 1^n}(q) with lam_bar = chi + 1_n (valid when chi_n >= -1)."""
    chi = _check_weight(chi)
    n = len(chi)
    if chi and chi[-1] < -1:
        raise ValueError("closed form needs chi_n >= -1")
    lam_bar = partition(tuple(x + 1 for x in chi))
    return reversed_kostka(transpose(lam_bar), (1,) * n)


def lowest_degree(poly):
    d = min(poly)
    return d, poly[d]


def dominant_weights(n, max_positive):
    """Dominant sum-zero integer weights of length n with positive part <= max_positive."""
    out = []
    for p in range(max_positive + 1):
        for lam in partitions(p, max_len=n):
            for mu in partitions(p, max_len=n - len(lam)):
                chi = list(lam) + [0] * (n - len(lam) - len(mu)) + [-x for x in reversed(mu)]
                out.append(tuple(chi))
    return out


@lru_cache(maxsize=None)
def _mat_monomials(n, d):
    """Degree-d monomials in the entries of an n x n matrix, bucketed by weight."""
    variables = [(1, a, b) for a in range(1, n + 1) for b in range(1, n + 1)]
    buckets = {}
    for combo in combinations_with_replacement(variables, d):
        w = [0] * n
        c = Counter(combo)
        for (_, a, b) in combo:
            w[a - 1] -= 1
            w[b - 1] += 1
        buckets.setdefault(tuple(w), []).append(tuple(sorted(c.items())))
    return buckets


@lru_cache(maxsize=None)
def principal_minor_sums(n):
    """s_1, ..., s_n: sums of principal k-minors of the generic n x n matrix."""
    dims = (1, n, n)
    out = []
    for k in range(1, n + 1):
        terms = {}
        for S in combinations(range(1, n + 1), k):
            for p in permutations(range(k)):
                sg = sign(tuple(x + 1 for x in p))
                mono = tuple(sorted(Counter((1, S[a], S[p[a]]) for a in range(k)).items()))
                terms[mono] = terms.get(mono, 0) + sg
        out.append(Poly(terms, dims))
    return tuple(out)


def _ideal_slice(n, d, chi):
    """Spanning vectors of the degree-d weight-chi part of (s_1, ..., s_n)."""
    vecs = []
    for k, sk in enumerate(principal_minor_sums(n), start=1):
        if k > d:
            break
        for mono in _mat_monomials(n, d - k).get(tuple(chi), ()):
            vecs.append((sk * Poly({mono: 1}, sk.dims)).terms)
    return vecs


def brute_force_nilcone_hwv_dim(n, chi, d):
    """dim of degree-d weight-chi U_n invariants of k[Mat_n]/(s_1..s_n).

    K = {f in P_{d,chi} : E_i f in I for all i} and the answer is
    dim K - dim I_{d,chi}.
    """
    chi = _check_weight(chi)
    if len(chi) != n:
        raise ValueError("weight length must be n")
    b = current_bounds()
    check(n, b.nilcone_max_n, "n")
    check(d, b.nilcone_max_degree, "degree")
    monos = _mat_monomials(n, d).get(chi, [])
    if not monos:
        return 0
    dims = (1, n, n)
    total = EchelonBasis()
    ideal_rank = 0
    for i in range(1, n):
        target = list(chi)
        target[i - 1] += 1
        target[i] -= 1
        block = EchelonBasis()
        for v in _ideal_slice(n, d, target):
            keyed = {(i, k): c for k, c in v.items()}
            block.add(keyed)
            total.add(keyed)
        ideal_rank += len(block)
    for mono in monos:
        p = Poly({mono: 1}, dims)
        vec = {}
        for i in range(1, n):
            for k, c in conjugation_raising(p, i).terms.items():
                vec[(i, k)] = c
        total.add(vec)
    map_rank = len(total) - ideal_rank
    kernel = len(monos) - map_rank
    return kernel - rank(_ideal_slice(n, d, chi))


# ------------------------------------------------------------ calibration

def nilcone_instances(max_n=4, max_d=6):
    """(n, chi, {d: brute-force dim}) over all small dominant sum-zero weights."""
    out = []
    for n in range(1, max_n + 1):
        for chi in dominant_weights(n, max_d):
            dims = {d: brute_force_nilcone_hwv_dim(n, chi, d) for d in range(max_d + 1)}
            out.append((n, chi, dims))
    return out


def candidate_degree_maps(max_a=2, b_range=range(-3, 4)):
    return [DegreeMap(st, a, b) for st in ("charge", "cocharge") for a in range(1, max_a + 1)
            for b in b_range]


def _fits(dm, chi, observed, max_d):
    try:
        pred = graded_nilcone_dim(chi, dm)
    except ValueError:
        return False
    for d in range(max_d + 1):
        if pred.get(d, 0) != observed.get(d, 0):
            return False
    return True


def calibrate_degree_map(instances, closed_form_weights=(), max_d=6, candidates=None):
    """All affine degree maps consistent with every calibration instance.

    ``instances`` are (n, chi, {d: dim}) triples, typically brute force;
    ``closed_form_weights`` are weights with chi_n >= -1 whose full graded
    dimension is given by the reversed Kostka polynomial.
    """
    if candidates is None:
        candidates = candidate_degree_maps()
    fits = []
    for dm in candidates:
        ok = all(_fits(dm, chi, dims, max_d) for _, chi, dims in instances)
        if ok:
            for chi in closed_form_weights:
                try:
                    if graded_nilcone_dim(chi, dm) != closed_form_column_case(chi):
                        ok = False
                        break
                except ValueError:
                    ok = False
                    break
        if ok:
            fits.append(dm)
    return fits


def fitted_degree_map(instances, closed_form_weights=(), max_d=6):
    fits = calibrate_degree_map(instances, closed_form_weights, max_d)
    if len(fits) != 1:
        raise BoundError(f"degree-map calibration is not unique: {fits}")
    return fits[0]


def qpoly_to_json(poly, degree_map=DEFAULT_DEGREE_MAP):
    return {"coeffs": [[d, c] for d, c in sorted(poly.items())],
            "degree_map": {"statistic": degree_map.statistic, "a": degree_map.a, "b": degree_map.b}}
