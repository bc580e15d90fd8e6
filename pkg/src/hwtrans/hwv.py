"""Explicit highest weight vectors on tuples of r x s matrices and their pullbacks.

All constructions return :class:`~hwtrans.polyring.Poly` objects whose
``dims`` are ``(m, r, s)``.  Pullbacks to n x n matrices use dims
``(1, n, n)`` (one matrix) or ``(l, n, n)`` (an l-tuple).
"""

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product

from .combinatorics import (SkewDiagram, Tableau, canonical_tableaux, enumerate_tableaux,
                            partition, tableau_to_json, weak_compositions)
from .config import check, current_bounds
from .linalg import rank
from .pictures import DiagramMapping, mapping_to_json
from .polyring import MatrixTuple, Poly, evaluate, matmul, matrix_inverse, substitute
from .specht import (block_group, column_blocks, column_permutations, representative_tableaux,
                     sign)


class ConstraintError(ValueError):
    """Sizes violate the hypotheses of a construction."""


def _shape(lam):
    return lam if isinstance(lam, SkewDiagram) else SkewDiagram.straight(partition(lam))


def _det_terms(columns, rows):
    """Expand det of the matrix whose k-th column has entry ``columns[k](row)``.

    ``columns[k]`` maps a row index to a variable; yields (sign, variables).
    """
    t = len(columns)
    for rho in permutations(range(t)):
        yield sign(tuple(x + 1 for x in rho)), tuple(columns[k](rows[rho[k]]) for k in range(t))


def _accumulate(out, sgn, variables):
    d = {}
    for v in variables:
        d[v] = d.get(v, 0) + 1
    mono = tuple(sorted(d.items()))
    out[mono] = out.get(mono, 0) + sgn


def column_orbit(T):
    """Tableaux obtained from T by permuting entries within columns (as a set)."""
    E = T.shape
    seen = set()
    out = []
    for m, _ in column_permutations(E):
        S = Tableau(E, tuple(T[m[c]] for c in E.cells))
        if S.entries not in seen:
            seen.add(S.entries)
            out.append(S)
    return out


def _check_special(lam, T, r, s, m):
    t = len(lam.cells)
    check(t, current_bounds().max_t, "t")
    if t > r:
        raise ConstraintError(f"|lambda| = {t} exceeds r = {r}")
    if len(lam.outer) > s:
        raise ConstraintError(f"l(lambda) = {len(lam.outer)} exceeds s = {s}")
    if T is not None:
        if T.shape != lam:
            raise ConstraintError("tableau shape differs from lambda")
        if T.entries and max(T.entries) > m:
            raise ConstraintError(f"tableau entries exceed m = {m}")


def psi_f(lam, S, r, s, m):
    """The single determinant of columns A_{S_ij} e_i restricted to the last t rows."""
    lam = _shape(lam)
    _check_special(lam, S, r, s, m)
    t = len(lam.cells)
    rows = list(range(r - t + 1, r + 1))
    cols = [(lambda row, l=S[c], i=c[0]: (l, row, i)) for c in lam.cells]
    out = {}
    for sg, vs in _det_terms(cols, rows):
        _accumulate(out, sg, vs)
    return Poly(out, (m, r, s))


def build_uT(lam, T, r, s, m):
    """u_T: sum of psi_f(S) over the column orbit of T (orbit taken as a set)."""
    lam = _shape(lam)
    _check_special(lam, T, r, s, m)
    t = len(lam.cells)
    rows = list(range(r - t + 1, r + 1))
    out = {}
    for S in column_orbit(T):
        cols = [(lambda row, l=S[c], i=c[0]: (l, row, i)) for c in lam.cells]
        for sg, vs in _det_terms(cols, rows):
            _accumulate(out, sg, vs)
    return Poly(out, (m, r, s))


def build_vT(lam, T, r, s, m):
    """v_T on s x r matrices: columns A'_{S_ij} e_{s-i+1}, first t rows."""
    lam = _shape(lam)
    _check_special(lam, T, r, s, m)
    t = len(lam.cells)
    rows = list(range(1, t + 1))
    out = {}
    for S in column_orbit(T):
        cols = [(lambda c_, l=S[c], i=c[0]: (l, s - i + 1, c_)) for c in lam.cells]
        for sg, vs in _det_terms(cols, rows):
            _accumulate(out, sg, vs)
    return Poly(out, (m, s, r))


def flip(p):
    """Phi: x(l)_{ij} -> x(l)_{s+1-j, r+1-i}, from r x s to s x r matrices."""
    m, r, s = p.dims
    out = {}
    for mono, c in p.terms.items():
        new = tuple(sorted(((l, s + 1 - j, r + 1 - i), e) for (l, i, j), e in mono))
        out[new] = out.get(new, 0) + c
    return Poly(out, (m, s, r))


def special_tableaux(lam, m):
    """Row semi-standard tableaux of shape lam with entries <= m."""
    return enumerate_tableaux(_shape(lam), "row_semistandard", max_entry=m)


def dual_point(lam, T, r, s, m):
    """A(T): A_h e_i = e_{r-t+(T_lam)_ij} when T_ij = h, all else zero.

    The offset r - t places the images in the last t rows, which are the rows
    the determinants read.
    """
    lam = _shape(lam)
    _check_special(lam, T, r, s, m)
    t = len(lam.cells)
    TL, _ = canonical_tableaux(lam)
    mats = [[[0] * s for _ in range(r)] for _ in range(m)]
    for c in lam.cells:
        i = c[0]
        mats[T[c] - 1][r - t + TL[c] - 1][i - 1] = 1
    return MatrixTuple(tuple(tuple(tuple(row) for row in M) for M in mats))


def dual_points(lam, m, r, s, flavor="row_semistandard"):
    """(T, A(T)) for every T of the given flavor (rows strictly increasing)."""
    lam = _shape(lam)
    if flavor == "row_strict":
        Ts = _row_strict_tableaux(lam, m)
    else:
        Ts = enumerate_tableaux(lam, flavor, max_entry=m)
    return [(T, dual_point(lam, T, r, s, m)) for T in Ts]


def _row_strict_tableaux(lam, m):
    rows = [list(combinations(range(1, m + 1), len(row))) for row in lam.rows]
    return [Tableau(lam, tuple(x for r in pick for x in r)) for pick in product(*rows)]


# ------------------------------------------------------------------ labels

@dataclass(frozen=True)
class HwvLabel:
    nu: tuple
    P: Tableau
    Q: Tableau
    alpha: DiagramMapping   # mu -> lambda with P o alpha = Q

    @property
    def lam(self):
        return self.P.shape

    @property
    def mu(self):
        return self.Q.shape


def label_to_json(label):
    return {"nu": list(label.nu), "P": tableau_to_json(label.P), "Q": tableau_to_json(label.Q),
            "alpha": mapping_to_json(label.alpha)}


def _check_main(lam, mu, r, s):
    t = len(lam.cells)
    if len(mu.cells) != t:
        raise ConstraintError("|lambda| != |mu|")
    check(t, current_bounds().max_t, "t")
    if len(mu.outer) > r:
        raise ConstraintError(f"l(mu) = {len(mu.outer)} exceeds r = {r}")
    if len(lam.outer) > s:
        raise ConstraintError(f"l(lambda) = {len(lam.outer)} exceeds s = {s}")


def enumerate_labels(lam, mu, m, r, s, nu=None):
    """Labels (nu, P, Q, alpha), with one admissible picture per piece."""
    lam, mu = _shape(lam), _shape(mu)
    _check_main(lam, mu, r, s)
    t = len(lam.cells)
    nus = [tuple(nu)] if nu is not None else list(weak_compositions(t, m))
    out = []
    for n in nus:
        if len(n) != m or sum(n) != t:
            raise ConstraintError(f"multidegree {n} does not fit m = {m}, t = {t}")
        for P in enumerate_tableaux(lam, "ordered", weight=n):
            for Q in enumerate_tableaux(mu, "ordered", weight=n):
                for _, alpha in representative_tableaux(P, Q, n):
                    a = DiagramMapping.from_dict(mu, lam, alpha)
                    assert a.pullback(P) == Q
                    out.append(HwvLabel(n, P, Q, a))
    return out


def build_u(label, r, s, m):
    """u_{nu,P,Q,alpha} expanded over the column stabilizers of mu and lambda."""
    lam, mu = label.lam, label.mu
    _check_main(lam, mu, r, s)
    alpha = label.alpha.as_dict
    Q = label.Q
    C_mu = list(column_permutations(mu))
    C_lam = list(column_permutations(lam))
    cells = mu.cells
    comps = [Q[a] for a in cells]
    out = {}
    for pi, sp in C_mu:
        rows = [r - pi[a][0] + 1 for a in cells]
        for sigma, ss in C_lam:
            vs = [(l, i, sigma[alpha[a]][0]) for l, i, a in zip(comps, rows, cells)]
            _accumulate(out, sp * ss, vs)
    return Poly(out, (m, r, s))


def spanning_corollary(lam, mu, gamma, tau, r, s, m):
    """The signed double sum indexed by a word gamma and a permutation tau."""
    lam, mu = _shape(lam), _shape(mu)
    _check_main(lam, mu, r, s)
    t = len(lam.cells)
    if len(gamma) != t or len(tau) != t:
        raise ConstraintError("gamma and tau must have length t")
    if any(not 1 <= g <= m for g in gamma):
        raise ConstraintError("gamma entries must lie in 1..m")
    a_scan = canonical_tableaux(mu)[1].entries
    b_scan = canonical_tableaux(lam)[1].entries
    C_mu = list(block_group(column_blocks(mu), t))
    C_lam = list(block_group(column_blocks(lam), t))
    out = {}
    for pi, sp in C_mu:
        rows = [r - a_scan[pi[i] - 1] + 1 for i in range(t)]
        for sigma, ss in C_lam:
            vs = [(gamma[i], rows[i], b_scan[sigma[tau[i] - 1] - 1]) for i in range(t)]
            _accumulate(out, sp * ss, vs)
    return Poly(out, (m, r, s))


def expected_weight(lam, mu, r, s):
    """((-mu)^rev padded to r, lambda padded to s)."""
    lam, mu = partition(lam), partition(mu)
    row = [0] * r
    for k, x in enumerate(mu):
        row[r - 1 - k] = -x
    col = list(lam) + [0] * (s - len(lam))
    return tuple(row), tuple(col)


# --------------------------------------------------------------- pullbacks

def _power_rows(n, rows, m, component=1):
    """Symbolic rows of X^l (l = 1..m) for the given row indices."""
    dims = (1, n, n)
    X = [[Poly.var(component, a, b, dims) for b in range(1, n + 1)] for a in range(1, n + 1)]
    out = {}
    for a in rows:
        cur = X[a - 1]
        out[(1, a)] = cur
        for l in range(2, m + 1):
            cur = [sum((cur[k] * X[k][b] for k in range(n)), Poly({}, dims)) for b in range(n)]
            out[(l, a)] = cur
    return out


def pullback_phi(p, n):
    """Substitute x(l)_{ij} -> (X^l)_{n-r+i, j}."""
    m, r, s = p.dims
    if r + s > n:
        raise ConstraintError(f"r + s = {r + s} exceeds n = {n}")
    rows = sorted({n - r + i for (l, i, j) in p.variables()})
    powers = _power_rows(n, rows, m)
    mapping = {(l, i, j): powers[(l, n - r + i)][j - 1] for (l, i, j) in p.variables()}
    return substitute(p, mapping, dims=(1, n, n))


def phi_point(X, r, s, m):
    """Lower-left r x s corners of X, X^2, ..., X^m."""
    n = len(X)
    mats = []
    P = X
    for l in range(1, m + 1):
        if l > 1:
            P = matmul(P, X)
        mats.append(tuple(tuple(P[n - r + i][j] for j in range(s)) for i in range(r)))
    return MatrixTuple(tuple(mats))


def words(l, max_len):
    """Nonempty words over 1..l ordered by length, then lexicographically."""
    out = []
    for k in range(1, max_len + 1):
        out.extend(product(range(1, l + 1), repeat=k))
    return out


def pullback_psi(p, n, l, max_word_len):
    """Substitute x(k)_{ij} -> (X_{xi_1} ... X_{xi_j})_{n-r+i, j} for the k-th word xi."""
    m, r, s = p.dims
    if r + s > n:
        raise ConstraintError(f"r + s = {r + s} exceeds n = {n}")
    ws = words(l, max_word_len)
    used = {v[0] for v in p.variables()}
    if used and max(used) > len(ws):
        raise ConstraintError(f"component {max(used)} has no word (only {len(ws)} words)")
    dims = (l, n, n)
    Xs = [[[Poly.var(c, a, b, dims) for b in range(1, n + 1)] for a in range(1, n + 1)]
          for c in range(1, l + 1)]
    zero = Poly({}, dims)
    row_cache = {}

    def word_row(a, w):
        key = (a, w)
        got = row_cache.get(key)
        if got is None:
            if len(w) == 1:
                got = Xs[w[0] - 1][a - 1]
            else:
                prev = word_row(a, w[:-1])
                X = Xs[w[-1] - 1]
                got = [sum((prev[k] * X[k][b] for k in range(n)), zero) for b in range(n)]
            row_cache[key] = got
        return got

    mapping = {}
    for (k, i, j) in p.variables():
        mapping[(k, i, j)] = word_row(n - r + i, ws[k - 1])[j - 1]
    return substitute(p, mapping, dims=dims)


def psi_point(Xs, r, s, max_word_len):
    n = len(Xs[0])
    mats = []
    for w in words(len(Xs), max_word_len):
        P = Xs[w[0] - 1]
        for c in w[1:]:
            P = matmul(P, Xs[c - 1])
        mats.append(tuple(tuple(P[n - r + i][j] for j in range(s)) for i in range(r)))
    return MatrixTuple(tuple(mats))


# ------------------------------------------------------------------ points

def jordan_matrix(jordan_type):
    lam = partition(jordan_type)
    n = sum(lam)
    J = [[Fraction(0)] * n for _ in range(n)]
    pos = 0
    for b in lam:
        for k in range(b - 1):
            J[pos + k][pos + k + 1] = Fraction(1)
        pos += b
    return tuple(tuple(row) for row in J)


def random_invertible(n, rng, lo=-3, hi=3):
    while True:
        M = tuple(tuple(Fraction(rng.randint(lo, hi)) for _ in range(n)) for _ in range(n))
        try:
            return M, matrix_inverse(M)
        except ValueError:
            continue


def sample_nilpotent(jordan_type, seed=0, conjugate=True):
    """A nilpotent rational matrix of the given Jordan type (seeded)."""
    J = jordan_matrix(jordan_type)
    n = len(J)
    if not conjugate or n == 0:
        X = J
    else:
        g, ginv = random_invertible(n, random.Random(seed))
        X = matmul(matmul(g, J), ginv)
    k = max(partition(jordan_type), default=0)
    if n:
        P = X
        for _ in range(k - 1):
            P = matmul(P, X)
        assert not any(any(row) for row in P), "X^k must vanish"
        if k > 1:
            Q = X
            for _ in range(k - 2):
                Q = matmul(Q, X)
            assert any(any(row) for row in Q), "X^(k-1) must not vanish"
    return X


_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59, 61, 67, 71)


def random_point(dims, seed):
    """Entries in {-2..2} shifted by reciprocals of distinct primes (seeded)."""
    m, r, s = dims
    rng = random.Random(seed)
    k = 0
    mats = []
    for _ in range(m):
        M = []
        for _ in range(r):
            row = []
            for _ in range(s):
                row.append(Fraction(rng.randint(-2, 2)) + Fraction(1, _PRIMES[k % len(_PRIMES)] ** (1 + k // len(_PRIMES))))
                k += 1
            M.append(tuple(row))
        mats.append(tuple(M))
    return MatrixTuple(tuple(mats))


def evaluation_rank(polys, points):
    return rank({k: evaluate(p, pt) for k, pt in enumerate(points)} for p in polys)
