"""Sparse polynomials in the matrix entries x(l)_{ij} of tuples of matrices.

A variable is a triple ``(l, i, j)``: component ``l`` (1..m), row ``i``
(1..r), column ``j`` (1..s).  A monomial is a tuple of ``(variable, exponent)``
pairs sorted by variable.  Coefficients are ``int`` or ``Fraction``.

Conventions, fixed here for the whole package: GL_r x GL_s acts on a tuple by
``(R, S) . A = R A S^{-1}`` and on functions by ``((R, S) . f)(A) = f(R^{-1} A S)``.
The variable x(l)_{ij} then has torus weight ``(-e_i, e_j)``, and the highest
weight corner is x(l)_{r,1}.  For n x n matrices under conjugation the weight of
x_{ab} is ``-e_a + e_b``.
"""

from dataclasses import dataclass
from fractions import Fraction


class InhomogeneousError(ValueError):
    pass


def _mono_mul(a, b):
    if not a:
        return b
    if not b:
        return a
    d = dict(a)
    for v, e in b:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


def _mono_degree(mono):
    return sum(e for _, e in mono)


def sort_key(mono):
    return (_mono_degree(mono), mono)


class Poly:
    """Immutable-by-convention sparse polynomial with ambient sizes (m, r, s)."""

    __slots__ = ("terms", "dims")

    def __init__(self, terms=None, dims=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}
        self.dims = dims

    # construction ------------------------------------------------------
    @classmethod
    def var(cls, l, i, j, dims=None):
        return cls({(((l, i, j), 1),): 1}, dims)

    @classmethod
    def const(cls, c, dims=None):
        return cls({(): c} if c else {}, dims)

    def _dims(self, other):
        return self.dims if self.dims is not None else getattr(other, "dims", None)

    # arithmetic --------------------------------------------------------
    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return Poly(out, self._dims(other))

    __radd__ = __add__

    def __neg__(self):
        return Poly({k: -v for k, v in self.terms.items()}, self.dims)

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly({k: v * other for k, v in self.terms.items()}, self.dims)
        out = {}
        for a, x in self.terms.items():
            for b, y in other.terms.items():
                k = _mono_mul(a, b)
                out[k] = out.get(k, 0) + x * y
        return Poly(out, self._dims(other))

    __rmul__ = __mul__

    def __pow__(self, e):
        result = Poly.const(1, self.dims)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for mono in sorted(self.terms, key=sort_key):
            c = self.terms[mono]
            m = "*".join(f"x{l}_{i}{j}" + (f"^{e}" if e > 1 else "") for (l, i, j), e in mono)
            parts.append(f"{c}*{m}" if m else f"{c}")
        return " + ".join(parts)

    # inspection --------------------------------------------------------
    def monomials(self):
        return sorted(self.terms, key=sort_key)

    def variables(self):
        return sorted({v for mono in self.terms for v, _ in mono})

    def degree(self):
        return max((_mono_degree(m) for m in self.terms), default=0)

    def with_dims(self, dims):
        return Poly(self.terms, dims)


def canonical_terms(p):
    return [(mono, p.terms[mono]) for mono in p.monomials()]


# ------------------------------------------------------------------ points

@dataclass(frozen=True)
class MatrixTuple:
    """A tuple of equally sized rational matrices (lists of rows)."""

    mats: tuple

    def __post_init__(self):
        mats = tuple(tuple(tuple(Fraction(x) for x in row) for row in M) for M in self.mats)
        shapes = {(len(M), len(M[0]) if M else 0) for M in mats}
        if len(shapes) > 1:
            raise ValueError("components have different sizes")
        object.__setattr__(self, "mats", mats)

    @property
    def rows(self):
        return len(self.mats[0]) if self.mats else 0

    @property
    def cols(self):
        return len(self.mats[0][0]) if self.mats and self.mats[0] else 0

    def __len__(self):
        return len(self.mats)

    def __getitem__(self, l):
        return self.mats[l]


def evaluate(p, pt):
    """Exact value of ``p`` at a matrix tuple (x(l)_{ij} = pt[l-1][i-1][j-1])."""
    if not isinstance(pt, MatrixTuple):
        pt = MatrixTuple(tuple(pt))
    if p.dims is not None:
        m, r, s = p.dims
        if len(pt) < m or pt.rows != r or pt.cols != s:
            raise ValueError(f"point of size {len(pt)}x{pt.rows}x{pt.cols} does not match dims {p.dims}")
    cache = {}
    total = 0
    for mono, c in p.terms.items():
        val = c
        for v, e in mono:
            x = cache.get(v)
            if x is None:
                l, i, j = v
                try:
                    x = pt[l - 1][i - 1][j - 1]
                except IndexError:
                    raise ValueError(f"variable {v} outside the point") from None
                cache[v] = x
            val *= x ** e
            if not val:
                break
        total += val
    return total


# ------------------------------------------------------------ substitution

def substitute(p, mapping, dims=None):
    """Replace variables by polynomials (unmapped variables are kept)."""
    power_cache = {}

    def power(v, e):
        key = (v, e)
        got = power_cache.get(key)
        if got is None:
            got = mapping[v] ** e
            power_cache[key] = got
        return got

    out = {}
    for mono, c in p.terms.items():
        keep = []
        factors = []
        for v, e in mono:
            if v in mapping:
                factors.append(power(v, e))
            else:
                keep.append((v, e))
        acc = {tuple(keep): c}
        for f in factors:
            nxt = {}
            for a, x in acc.items():
                for b, y in f.terms.items():
                    k = _mono_mul(a, b)
                    nxt[k] = nxt.get(k, 0) + x * y
            acc = nxt
        for k, v in acc.items():
            out[k] = out.get(k, 0) + v
    return Poly(out, dims if dims is not None else p.dims)


def act(p, R, S):
    """((R, S) . p)(A) = p(R^{-1} A S) on every component; R, S invertible."""
    m, r, s = p.dims
    Rinv = _inverse(R)
    mapping = {}
    for l, i, j in {v for mono in p.terms for v, _ in mono}:
        terms = {}
        for a in range(r):
            if not Rinv[i - 1][a]:
                continue
            for b in range(s):
                c = Rinv[i - 1][a] * S[b][j - 1]
                if c:
                    terms[(((l, a + 1, b + 1), 1),)] = c
        mapping[(l, i, j)] = Poly(terms, p.dims)
    return substitute(p, mapping)


def act_point(R, S, pt):
    """The point R^{-1} A S for every component A."""
    Rinv = _inverse(R)
    return MatrixTuple(tuple(matmul(matmul(Rinv, A), S) for A in pt.mats))


def matmul(A, B):
    return tuple(tuple(sum(A[i][k] * B[k][j] for k in range(len(B))) for j in range(len(B[0])))
                 for i in range(len(A)))


def identity_matrix(n):
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def _inverse(M):
    n = len(M)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(M)]
    for col in range(n):
        piv = next((r for r in range(col, n) if A[r][col]), None)
        if piv is None:
            raise ValueError("singular matrix")
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for r in range(n):
            if r != col and A[r][col]:
                f = A[r][col]
                A[r] = [x - f * y for x, y in zip(A[r], A[col])]
    return tuple(tuple(row[n:]) for row in A)


matrix_inverse = _inverse


# ---------------------------------------------------------------- gradings

def monomial_weight(mono, r, s):
    row = [0] * r
    col = [0] * s
    for (_, i, j), e in mono:
        row[i - 1] -= e
        col[j - 1] += e
    return tuple(row), tuple(col)


def monomial_multidegree(mono, m):
    out = [0] * m
    for (l, _, _), e in mono:
        out[l - 1] += e
    return tuple(out)


def _homogeneous(p, f, what):
    first = None
    value = None
    for mono in p.monomials():
        w = f(mono)
        if first is None:
            first, value = mono, w
        elif w != value:
            raise InhomogeneousError(f"{what} differs between monomials {first} and {mono}")
    return value


def torus_weight(p, r=None, s=None):
    """(GL_r weight, GL_s weight) of a weight-homogeneous polynomial."""
    if r is None:
        _, r, s = p.dims
    return _homogeneous(p, lambda mono: monomial_weight(mono, r, s), "torus weight")


def multidegree(p, m=None):
    if m is None:
        m = p.dims[0]
    return _homogeneous(p, lambda mono: monomial_multidegree(mono, m), "multidegree")


def total_degree(p):
    """Sum over l of l times the degree in the l-th component."""
    return _homogeneous(p, lambda mono: sum(l * e for (l, _, _), e in mono), "total degree")


def conjugation_weight(p, n=None):
    """Weight under the diagonal torus of GL_n acting by conjugation."""
    if n is None:
        n = p.dims[1]

    def w(mono):
        out = [0] * n
        for (_, a, b), e in mono:
            out[a - 1] -= e
            out[b - 1] += e
        return tuple(out)

    return _homogeneous(p, w, "conjugation weight")


# ------------------------------------------------------ unipotent invariance

@dataclass(frozen=True)
class InvarianceResult:
    ok: bool
    witness: tuple = None   # (side, index, c, monomial with nonzero difference)

    def __bool__(self):
        return self.ok


def _linear_map(p, rule):
    """Substitution by linear forms; ``rule(var)`` returns {var: coeff} or None."""
    mapping = {}
    for v in {v for mono in p.terms for v, _ in mono}:
        form = rule(v)
        if form is not None:
            mapping[v] = Poly({((w, 1),): c for w, c in form.items()}, p.dims)
    return substitute(p, mapping)


def unipotent_action(p, side, i, c):
    """Apply the elementary unipotent generator with parameter c.

    side "r": row i gets row i + c * row (i+1), i.e. f(A) -> f(u A).
    side "s": column i+1 gets column (i+1) + c * column i, i.e. f(A) -> f(A u).
    """
    if side == "r":
        def rule(v):
            l, a, b = v
            return {v: 1, (l, i + 1, b): c} if a == i else None
    elif side == "s":
        def rule(v):
            l, a, b = v
            return {v: 1, (l, a, i): c} if b == i + 1 else None
    else:
        raise ValueError(side)
    return _linear_map(p, rule)


def unipotent_invariance_proof(p, r=None, s=None):
    """Decide U_r x U_s invariance exactly.

    For each generator, (u(c) . p - p) is a polynomial in c of degree at most
    deg(p) with zero constant term, so vanishing at c = 1 .. deg(p)+1 proves
    it is identically zero.
    """
    if r is None:
        _, r, s = p.dims
    d = p.degree()
    for side, size in (("r", r), ("s", s)):
        for i in range(1, size):
            for c in range(1, d + 2):
                diff = unipotent_action(p, side, i, c) - p
                if diff:
                    return InvarianceResult(False, (side, i, c, diff.monomials()[0]))
    return InvarianceResult(True)


def _derive(p, var, repl_var, coeff=1):
    """coeff * repl_var * d p / d var."""
    out = {}
    for mono, c in p.terms.items():
        d = dict(mono)
        e = d.get(var)
        if not e:
            continue
        if e == 1:
            del d[var]
        else:
            d[var] = e - 1
        d[repl_var] = d.get(repl_var, 0) + 1
        k = tuple(sorted(d.items()))
        out[k] = out.get(k, 0) + c * e * coeff
    return Poly(out, p.dims)


def raising_operator(p, side, i):
    """The derivation of the generator u_i(c) at c = 0."""
    m, r, s = p.dims
    out = Poly({}, p.dims)
    for v in p.variables():
        l, a, b = v
        if side == "r" and a == i:
            out = out + _derive(p, v, (l, i + 1, b))
        elif side == "s" and b == i + 1:
            out = out + _derive(p, v, (l, a, i))
    return out


def raising_invariance(p):
    """Invariance decided by the derivations (must agree with the proof above)."""
    m, r, s = p.dims
    return all(not raising_operator(p, "r", i) for i in range(1, r)) and \
        all(not raising_operator(p, "s", j) for j in range(1, s))


# ----------------------------------------------- conjugation (n x n matrices)

def conjugation_action(p, i, c):
    """f(X) -> f(u^{-1} X u) on every component, u = 1 + c E_{i,i+1}."""
    def rule(v):
        l, a, b = v
        form = {v: 1}
        if a == i:
            form[(l, i + 1, b)] = form.get((l, i + 1, b), 0) - c
        if b == i + 1:
            form[(l, a, i)] = form.get((l, a, i), 0) + c
        if a == i and b == i + 1:
            form[(l, i + 1, i)] = form.get((l, i + 1, i), 0) - c * c
        if len(form) == 1:
            return None
        return {k: x for k, x in form.items() if x}
    return _linear_map(p, rule)


def conjugation_invariance_proof(p, n=None):
    """U_n invariance under simultaneous conjugation; c-degree is at most 2 deg."""
    if n is None:
        n = p.dims[1]
    d = p.degree()
    for i in range(1, n):
        for c in range(1, 2 * d + 2):
            diff = conjugation_action(p, i, c) - p
            if diff:
                return InvarianceResult(False, ("conj", i, c, diff.monomials()[0]))
    return InvarianceResult(True)


def conjugation_raising(p, i):
    """Derivation of f(u^{-1} X u) at c = 0."""
    out = Poly({}, p.dims)
    for v in p.variables():
        l, a, b = v
        if a == i:
            out = out - _derive(p, v, (l, i + 1, b))
        if b == i + 1:
            out = out + _derive(p, v, (l, a, i))
    return out


# -------------------------------------------------------------------- JSON

def _coeff_str(c):
    return str(Fraction(c))


def poly_to_json(p):
    m, r, s = p.dims
    return {
        "vars": {"m": m, "r": r, "s": s},
        "terms": [{"coeff": _coeff_str(c), "monomial": [[l, i, j, e] for (l, i, j), e in mono]}
                  for mono, c in canonical_terms(p)],
    }


def poly_from_json(obj):
    v = obj["vars"]
    dims = (v["m"], v["r"], v["s"])
    terms = {}
    for t in obj["terms"]:
        mono = tuple(sorted(((l, i, j), e) for l, i, j, e in t["monomial"]))
        c = Fraction(t["coeff"])
        terms[mono] = c.numerator if c.denominator == 1 else c
    return Poly(terms, dims)


def poly_vector(p):
    """Sparse coefficient vector keyed by monomial (for rank computations)."""
    return dict(p.terms)
