"""Exact rank computations over the rationals.

Vectors are sparse mappings ``key -> number`` where numbers are ``int`` or
``Fraction``.  Keys must be mutually comparable; the smallest key of a reduced
vector is its pivot.  Elimination is fraction-free: every stored row is a
primitive integer vector and a new vector is cleared against a pivot row by
cross-multiplication followed by content removal.
"""

from fractions import Fraction
from math import gcd, lcm


def _integer_row(vec):
    """Scale a rational sparse vector to a primitive integer vector."""
    den = 1
    for v in vec.values():
        if isinstance(v, Fraction) and v.denominator != 1:
            den = lcm(den, v.denominator)
    row = {}
    for k, v in vec.items():
        if v:
            row[k] = int(v * den)
    return _primitive(row)


def _primitive(row):
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            return row
    if g > 1:
        return {k: v // g for k, v in row.items()}
    return row


class EchelonBasis:
    """Incrementally maintained echelon form of a set of sparse vectors.

    >>> b = EchelonBasis()
    >>> b.add({0: 1, 1: 2}), b.add({0: 2, 1: 4}), b.add({1: Fraction(1, 3)})
    (True, False, True)
    >>> len(b)
    2
    """

    def __init__(self):
        self._rows = {}

    def __len__(self):
        return len(self._rows)

    def reduce(self, vec):
        """Return the (primitive, integer) remainder of ``vec`` modulo the span."""
        row = _integer_row(vec)
        rows = self._rows
        while row:
            k = min(row)
            piv = rows.get(k)
            if piv is None:
                return row
            a = row[k]
            b = piv[k]
            g = gcd(a, b)
            fa, fb = b // g, a // g
            new = {key: val * fa for key, val in row.items()} if fa != 1 else dict(row)
            for key, val in piv.items():
                nv = new.get(key, 0) - fb * val
                if nv:
                    new[key] = nv
                else:
                    del new[key]
            row = _primitive(new)
        return row

    def add(self, vec):
        """Insert ``vec``; return True iff it was independent of the span."""
        row = self.reduce(vec)
        if not row:
            return False
        self._rows[min(row)] = row
        return True

    def contains(self, vec):
        return not self.reduce(vec)


def rank(vectors):
    """Exact rank of an iterable of sparse vectors."""
    basis = EchelonBasis()
    for v in vectors:
        basis.add(v)
    return len(basis)


def dense_rows(matrix):
    """Convert a dense row-major matrix to sparse row vectors keyed by column."""
    return [{j: x for j, x in enumerate(row) if x} for row in matrix]


def matrix_rank(matrix):
    return rank(dense_rows(matrix))


def independent_subset(vectors):
    """Indices of a maximal independent subfamily, chosen greedily in order."""
    basis = EchelonBasis()
    return [i for i, v in enumerate(vectors) if basis.add(v)]
