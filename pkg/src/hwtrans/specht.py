"""Group algebra of Sym_t over the rationals, tabloids and polytabloids.

Permutations are tuples of images of 1..t.  Products compose right to left:
``(p * q)(i) = p(q(i))``.  A t-tableau ``T`` of shape ``F`` corresponds to
the permutation ``g`` with ``T = g o T_F``.
"""

from fractions import Fraction
from itertools import permutations, product
from math import factorial, prod

from .combinatorics import SkewDiagram, Tableau, canonical_tableaux, enumerate_tableaux
from .config import check, current_bounds
from .linalg import EchelonBasis, rank
from .pictures import enumerate_admissible, representative_standard_tableau


# ------------------------------------------------------------ permutations

def identity(t):
    return tuple(range(1, t + 1))


def compose(p, q):
    return tuple(p[x - 1] for x in q)


def inverse(p):
    out = [0] * len(p)
    for i, x in enumerate(p, start=1):
        out[x - 1] = i
    return tuple(out)


def sign(p):
    seen = [False] * len(p)
    s = 1
    for i in range(len(p)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = p[j] - 1
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def block_group(blocks, t):
    """All (permutation, sign) of {1..t} preserving every block setwise."""
    blocks = [tuple(b) for b in blocks if len(b) > 1]
    choices = [list(permutations(b)) for b in blocks]
    for pick in product(*choices):
        img = list(range(1, t + 1))
        for b, p in zip(blocks, pick):
            for x, y in zip(b, p):
                img[x - 1] = y
        g = tuple(img)
        yield g, sign(g)


def permutation_of(T):
    """g with T = g o T_F, i.e. g(k) = T(k-th cell of F)."""
    return tuple(T.entries)


def tableau_of(g, F):
    return Tableau(F, tuple(g))


# ------------------------------------------------------- group algebra

class GroupAlgebraElement:
    """Sparse rational combination of permutations of a fixed degree."""

    __slots__ = ("t", "terms")

    def __init__(self, t, terms=None):
        self.t = t
        self.terms = {g: c for g, c in (terms or {}).items() if c}

    @classmethod
    def of(cls, g, coeff=1):
        return cls(len(g), {tuple(g): coeff})

    @classmethod
    def one(cls, t):
        return cls.of(identity(t))

    def __add__(self, other):
        out = dict(self.terms)
        for g, c in other.terms.items():
            out[g] = out.get(g, 0) + c
        return GroupAlgebraElement(self.t, out)

    def __neg__(self):
        return GroupAlgebraElement(self.t, {g: -c for g, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        return GroupAlgebraElement(self.t, {g: c * v for g, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, GroupAlgebraElement):
            return self.scale(other)
        out = {}
        for g, a in self.terms.items():
            for h, b in other.terms.items():
                k = compose(g, h)
                out[k] = out.get(k, 0) + a * b
        return GroupAlgebraElement(self.t, out)

    __rmul__ = scale

    def star(self):
        return GroupAlgebraElement(self.t, {inverse(g): c for g, c in self.terms.items()})

    def __eq__(self, other):
        return isinstance(other, GroupAlgebraElement) and self.terms == other.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        return f"GroupAlgebraElement(t={self.t}, {len(self.terms)} terms)"


def ga_to_json(x):
    return [{"perm": list(g), "coeff": str(Fraction(c))} for g, c in sorted(x.terms.items())]


def ga_from_json(obj, t=None):
    terms = {tuple(d["perm"]): Fraction(d["coeff"]) for d in obj}
    if t is None:
        t = len(next(iter(terms))) if terms else 0
    return GroupAlgebraElement(t, terms)


# ------------------------------------------------------------- symmetrizers

def row_blocks(E):
    T, _ = canonical_tableaux(E)
    return [tuple(r) for r in T.rows() if r]


def column_blocks(E):
    T, _ = canonical_tableaux(E)
    return [tuple(T[c] for c in col) for col in E.columns]


def young_symmetrizers(E):
    """(e1, e2): signed column sum and row sum for T_E."""
    t = len(E)
    check(t, current_bounds().group_algebra_max_t, "t")
    e1 = GroupAlgebraElement(t, dict(block_group(column_blocks(E), t)))
    e2 = GroupAlgebraElement(t, {g: 1 for g, _ in block_group(row_blocks(E), t)})
    return e1, e2


def young_symmetrizer(E):
    e1, e2 = young_symmetrizers(E)
    return e1 * e2


# -------------------------------------------------------- tabloid vectors

class TabloidVector:
    """Sparse rational combination of tabloids of one shape.

    A tabloid is keyed by the scan of its row-sorted representative.
    """

    __slots__ = ("shape", "terms")

    def __init__(self, shape, terms=None):
        self.shape = shape
        self.terms = {k: c for k, c in (terms or {}).items() if c}

    @staticmethod
    def key(T):
        return T.row_sorted().entries

    @classmethod
    def tabloid(cls, T, coeff=1):
        return cls(T.shape, {cls.key(T): coeff})

    def __add__(self, other):
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return TabloidVector(self.shape, out)

    def scale(self, c):
        return TabloidVector(self.shape, {k: c * v for k, v in self.terms.items()})

    def act(self, g):
        """Left action of a permutation: relabel every entry by g."""
        out = {}
        rows = [len(r) for r in self.shape.rows]
        for k, c in self.terms.items():
            nk = _act_key(g, k, rows)
            out[nk] = out.get(nk, 0) + c
        return TabloidVector(self.shape, out)

    def __eq__(self, other):
        return isinstance(other, TabloidVector) and self.shape == other.shape and self.terms == other.terms

    def __repr__(self):
        return f"TabloidVector({self.shape!r}, {self.terms})"


def tabloid_vector_to_json(v):
    return [{"tabloid": list(k), "coeff": str(Fraction(c))} for k, c in sorted(v.terms.items())]


def column_permutations(E):
    """(cell map, sign) for every element of the column stabilizer of E."""
    cols = E.columns
    choices = [list(permutations(col)) for col in cols]
    for pick in product(*choices):
        m = {}
        for col, img in zip(cols, pick):
            m.update(zip(col, img))
        # sign of a product of column permutations
        s = 1
        for col, img in zip(cols, pick):
            idx = {c: k for k, c in enumerate(col)}
            s *= sign(tuple(idx[c] + 1 for c in img))
        yield m, s


def polytabloid(T):
    """[T] = sum over the column stabilizer C of sgn(pi) {T o pi}."""
    if not T.is_t_tableau():
        raise ValueError("polytabloids need a t-tableau")
    E = T.shape
    out = {}
    for m, s in column_permutations(E):
        k = TabloidVector.key(Tableau(E, tuple(T[m[c]] for c in E.cells)))
        out[k] = out.get(k, 0) + s
    return TabloidVector(E, out)


def specht_basis(E):
    check(len(E), current_bounds().group_algebra_max_t, "t")
    return [polytabloid(T) for T in enumerate_tableaux(E, "standard")]


def all_polytabloids(E):
    t = len(E)
    return [polytabloid(Tableau(E, g)) for g in permutations(range(1, t + 1))]


# ------------------------------------------------------ hom-space bases

def homspace_element(E, F, g):
    """e* g f = e2 e1 g f1 f2 as a group-algebra element."""
    e1, e2 = young_symmetrizers(E)
    f1, f2 = young_symmetrizers(F)
    return e2 * (e1 * (GroupAlgebraElement.of(g) * (f1 * f2)))


def _row_sets(E):
    return [frozenset(b) for b in row_blocks(E)]


def double_coset_key(h, rows_E, rows_F):
    """Intersection matrix N_ij = |row_i(T_E) & h(row_j(T_F))|."""
    imgs = [frozenset(h[x - 1] for x in rj) for rj in rows_F]
    return tuple(tuple(len(ri & hj) for hj in imgs) for ri in rows_E)


def homspace_vector(E, F, g, _cache=None):
    """Coordinates of e* g f in the basis of row-double-coset sums of e2 A f2.

    e2 h f2 equals prod(N_ij!) times the sum over the double coset of h, so
    the coordinate at a double coset is the coefficient of any element in it.
    """
    if _cache is None:
        _cache = _homspace_data(E, F)
    cols_E, cols_F, rows_E, rows_F = _cache
    vec = {}
    for c, sc in cols_E:
        cg = compose(c, g)
        for d, sd in cols_F:
            h = compose(cg, d)
            key = double_coset_key(h, rows_E, rows_F)
            w = sc * sd * prod(factorial(x) for row in key for x in row)
            vec[key] = vec.get(key, 0) + w
    return {k: v for k, v in vec.items() if v}


def _homspace_data(E, F):
    t = len(E)
    return (list(block_group(column_blocks(E), t)), list(block_group(column_blocks(F), t)),
            _row_sets(E), _row_sets(F))


def ga_to_coset_coordinates(x, E, F):
    """Read off double-coset coordinates of an element of e2 A f2."""
    rows_E, rows_F = _row_sets(E), _row_sets(F)
    out = {}
    for h, c in x.terms.items():
        k = double_coset_key(h, rows_E, rows_F)
        if k in out and out[k] != c:
            raise ValueError("element is not in e2 A f2")
        out[k] = c
    return out


def homspace_rank(E, F):
    """Exact rank of {e* g f : g in Sym_t}.

    e* c g c' f = sgn(c) sgn(c') e* g f for column-stabilizer elements c, c',
    so one g per column double coset suffices.
    """
    t = len(E)
    check(t, current_bounds().group_algebra_max_t, "t")
    data = _homspace_data(E, F)
    cols_E, cols_F = data[0], data[1]
    seen = set()
    basis = EchelonBasis()
    for g in permutations(range(1, t + 1)):
        if g in seen:
            continue
        for c, _ in cols_E:
            cg = compose(c, g)
            for d, _ in cols_F:
                seen.add(compose(cg, d))
        basis.add(homspace_vector(E, F, g, data))
    return len(basis)


def homspace_basis(E, F):
    """e* g_T f for the standard representative T of each admissible tableau."""
    return [homspace_element(E, F, permutation_of(representative_standard_tableau(S, E)))
            for S, _ in enumerate_admissible(F, E)]


def homspace_basis_vectors(E, F):
    data = _homspace_data(E, F)
    return [homspace_vector(E, F, permutation_of(representative_standard_tableau(S, E)), data)
            for S, _ in enumerate_admissible(F, E)]


def left_ideal_rank(a):
    """dim A a."""
    t = a.t
    return rank((GroupAlgebraElement.of(g) * a).terms for g in permutations(range(1, t + 1)))


# ------------------------------------------------------------- coinvariants

def young_blocks(nu):
    """Consecutive blocks Lambda_i of 1..t for the composition nu."""
    out, start = [], 0
    for n in nu:
        out.append(tuple(range(start + 1, start + n + 1)))
        start += n
    return out


def skew_piece(P, i):
    """The cells of P carrying i, as a skew diagram in ambient coordinates."""
    shape = P.shape
    outer = list(shape.inner) + [0] * (len(shape.outer) - len(shape.inner))
    inner = list(outer)
    for (r, c), v in P.items():
        if v < i:
            inner[r - 1] = max(inner[r - 1], c)
            outer[r - 1] = max(outer[r - 1], c)
        elif v == i:
            outer[r - 1] = max(outer[r - 1], c)
    return SkewDiagram(tuple(outer), tuple(inner))


def tableau_for_ordered(P, nu):
    """T_P: fill the cells carrying i, in scan order, with Lambda_i."""
    blocks = young_blocks(nu)
    it = {i + 1: iter(b) for i, b in enumerate(blocks)}
    return Tableau(P.shape, tuple(next(it[v]) for v in P.entries))


def _pieces(P, m):
    return [skew_piece(P, i) for i in range(1, m + 1)]


def representative_tableaux(P, Q, nu):
    """All T of shape F belonging to Q whose pieces give admissible pictures.

    Yields ``(T, alpha)`` with alpha the union of the per-piece pictures
    Q^{-1}(i) -> P^{-1}(i).
    """
    m = len(nu)
    TP = tableau_for_ordered(P, nu)
    per_piece = []
    for i in range(1, m + 1):
        if nu[i - 1] == 0:
            continue
        Fi, Ei = skew_piece(Q, i), skew_piece(P, i)
        per_piece.append([a for _, a in enumerate_admissible(Fi, Ei)])
    for pick in product(*per_piece):
        alpha = {}
        for a in pick:
            alpha.update(a.as_dict)
        T = Tableau(Q.shape, tuple(TP[alpha[c]] for c in Q.shape.cells))
        yield T, alpha


def coinvariants_basis(E, F, nu):
    """Pairs (T_P, T) indexing the coinvariant basis of (Ae (x) Af) for Sym_nu."""
    E, F = _straight(E), _straight(F)
    t = len(E)
    if sum(nu) != t or len(F) != t:
        raise ValueError("sizes do not match")
    check(t, current_bounds().group_algebra_max_t, "t")
    out = []
    for P in enumerate_tableaux(E, "ordered", weight=tuple(nu)):
        TP = tableau_for_ordered(P, nu)
        for Q in enumerate_tableaux(F, "ordered", weight=tuple(nu)):
            for T, _ in representative_tableaux(P, Q, nu):
                out.append((TP, T))
    return out


def _straight(E):
    if isinstance(E, SkewDiagram):
        if not E.is_straight:
            raise ValueError("coinvariants need straight shapes")
        return E
    return SkewDiagram.straight(tuple(E))


def _tensor(u, v):
    return {(a, b): x * y for a, x in u.terms.items() for b, y in v.terms.items()}


def _act_key(g, key, rows):
    new = [g[x - 1] for x in key]
    pos = 0
    for n in rows:
        new[pos:pos + n] = sorted(new[pos:pos + n])
        pos += n
    return tuple(new)


def _act_pair(g, vec, E, F):
    re = [len(r) for r in E.rows]
    rf = [len(r) for r in F.rows]
    out = {}
    for (a, b), c in vec.items():
        k = (_act_key(g, a, re), _act_key(g, b, rf))
        out[k] = out.get(k, 0) + c
    return out


def coinvariant_quotient(E, F, nu):
    """(quotient dimension, relation basis) of (Ae (x) Af)_{Sym_nu}."""
    E, F = _straight(E), _straight(F)
    t = len(E)
    gens = []
    for b in young_blocks(nu):
        for k in b[:-1]:
            g = list(range(1, t + 1))
            g[k - 1], g[k] = k + 1, k
            gens.append(tuple(g))
    space = [_tensor(u, v) for u in specht_basis(E) for v in specht_basis(F)]
    rel = EchelonBasis()
    for x in space:
        for g in gens:
            y = _act_pair(g, x, E, F)
            diff = dict(y)
            for k, c in x.items():
                diff[k] = diff.get(k, 0) - c
            rel.add({k: c for k, c in diff.items() if c})
    return len(space) - len(rel), rel


def coinvariant_images(E, F, nu):
    E, F = _straight(E), _straight(F)
    return [_tensor(polytabloid(TP), polytabloid(T)) for TP, T in coinvariants_basis(E, F, nu)]


def verify_coinvariants(E, F, nu):
    """Return (candidate count, quotient dimension, candidates independent mod relations)."""
    dim, rel = coinvariant_quotient(E, F, nu)
    cands = coinvariant_images(E, F, nu)
    independent = all(rel.add(v) for v in cands)
    return len(cands), dim, independent
