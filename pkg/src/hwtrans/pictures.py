"""Diagram mappings between skew diagrams and admissible mappings (pictures).

A :class:`DiagramMapping` ``alpha: F -> E`` is stored as the tuple of target
cells listed in the scan order of the source ``F``.
"""

from dataclasses import dataclass
from functools import cached_property, lru_cache
from itertools import permutations

from .combinatorics import SkewDiagram, Tableau, canonical_tableaux, enumerate_tableaux


class PreconditionError(ValueError):
    pass


@dataclass(frozen=True)
class DiagramMapping:
    source: SkewDiagram
    target: SkewDiagram
    images: tuple

    def __post_init__(self):
        if len(self.images) != len(self.source.cells):
            raise ValueError("image count does not match the source")
        if set(self.images) != set(self.target.cells) or len(set(self.images)) != len(self.images):
            raise ValueError("not a bijection onto the target cells")

    @classmethod
    def from_dict(cls, source, target, mapping):
        return cls(source, target, tuple(mapping[c] for c in source.cells))

    @classmethod
    def identity(cls, E):
        return cls(E, E, E.cells)

    @cached_property
    def as_dict(self):
        return dict(zip(self.source.cells, self.images))

    def __call__(self, cell):
        return self.as_dict[cell]

    def inverse(self):
        inv = {b: a for a, b in self.as_dict.items()}
        return DiagramMapping.from_dict(self.target, self.source, inv)

    def pullback(self, T):
        """The tableau ``T o alpha`` of shape ``source`` for ``T`` of shape ``target``."""
        return Tableau(self.source, tuple(T[b] for b in self.images))

    def swap_sources(self, a, b):
        """``alpha o (a b)``: exchange the images of the source cells a and b."""
        d = dict(self.as_dict)
        d[a], d[b] = d[b], d[a]
        return DiagramMapping.from_dict(self.source, self.target, d)

    def union(self, other):
        d = dict(self.as_dict)
        d.update(other.as_dict)
        return d


def mapping_to_json(alpha):
    return [[list(a), list(b)] for a, b in zip(alpha.source.cells, alpha.images)]


def mapping_from_json(obj, source, target):
    return DiagramMapping.from_dict(source, target, {tuple(a): tuple(b) for a, b in obj})


# -------------------------------------------------- tableau <-> mapping

def mapping_from_tableau(T, E):
    """alpha_T = T_E^{-1} o T for a t-tableau T (entries exactly 1..t)."""
    if not T.is_t_tableau():
        raise ValueError("entries must be a permutation of 1..t")
    if len(E) != len(T):
        raise ValueError("size mismatch")
    return DiagramMapping(T.shape, E, tuple(E.cells[v - 1] for v in T.entries))


def tableau_from_mapping(alpha):
    """T_E o alpha."""
    idx = alpha.target.index
    return Tableau(alpha.source, tuple(idx[b] + 1 for b in alpha.images))


# ----------------------------------------------------------- admissibility

def _le(a, b):
    return a[0] <= b[0] and a[1] <= b[1]


def _prec(a, b):
    """Strict version of the linear order: row-major with columns reversed."""
    return a[0] < b[0] or (a[0] == b[0] and a[1] > b[1])


def _order_preserving(pairs):
    for a, x in pairs:
        for b, y in pairs:
            if a != b and _le(a, b) and not _prec(x, y):
                return False
    return True


def is_admissible_order(alpha):
    """Both alpha and its inverse are order preserving from (<=) to the linear order."""
    fwd = list(zip(alpha.source.cells, alpha.images))
    return _order_preserving(fwd) and _order_preserving([(y, x) for x, y in fwd])


def direction(a, b):
    """Wind direction of ``a`` as seen from ``b`` (rows grow southwards)."""
    dr = (a[0] > b[0]) - (a[0] < b[0])
    dc = (a[1] > b[1]) - (a[1] < b[1])
    return {
        (0, 1): "E", (0, -1): "W", (1, 0): "S", (-1, 0): "N",
        (1, -1): "SW", (1, 1): "SE", (-1, 1): "NE", (-1, -1): "NW", (0, 0): "",
    }[(dr, dc)]


WIND_RULES = {
    "E": ("W", "SW"),
    "S": ("SW", "S"),
    "NE": ("NE", "N", "NW", "W", "SW"),
}
SE_RULE = ("SW",)


def wind_conditions(alpha, rules=WIND_RULES):
    pairs = list(zip(alpha.source.cells, alpha.images))
    for a, x in pairs:
        for b, y in pairs:
            d = direction(a, b)
            allowed = rules.get(d)
            if allowed is not None and direction(x, y) not in allowed:
                return False
    return True


def is_admissible_wind(alpha):
    """Wind-direction test, applied to alpha and to its inverse."""
    return wind_conditions(alpha) and wind_conditions(alpha.inverse())


def is_admissible(alpha):
    return is_admissible_order(alpha)


# ------------------------------------------------ semi-standard properties

def row_tableau(alpha):
    """S_E o alpha."""
    return alpha.pullback(canonical_tableaux(alpha.target)[1])


def has_property_b(alpha, strict_columns=False):
    """If alpha(b) lies strictly below alpha(a) in one column, then b lies in a
    strictly lower row than a (and, with ``strict_columns``, in a column weakly
    to the left of a)."""
    pairs = list(zip(alpha.source.cells, alpha.images))
    for a, x in pairs:
        for b, y in pairs:
            if y[1] == x[1] and y[0] > x[0]:
                if b[0] <= a[0]:
                    return False
                if strict_columns and b[1] > a[1]:
                    return False
    return True


def _first_offender(alpha):
    inv = alpha.inverse().as_dict
    E = alpha.target
    for a in alpha.source.cells:
        r, s = alpha(a)
        below = (r + 1, s)
        if below in E:
            b = inv[below]
            if b[1] > a[1]:
                return a, b
    return None


def normalize_to_bprime(alpha, return_steps=False):
    """Swap images until the strengthened column property holds.

    At the first source cell ``a`` (scan order) whose image has a target cell
    directly below it with preimage ``b`` strictly to the right of ``a``, the
    images of ``b`` and of the cell directly below ``a`` are exchanged.  The
    tableau ``S_E o alpha`` is unchanged by every swap.
    """
    S = row_tableau(alpha)
    if not S.is_semistandard():
        raise PreconditionError("S_E o alpha is not semi-standard")
    if not has_property_b(alpha):
        raise PreconditionError("alpha violates the column-descent property")
    limit = len(alpha.images) ** 2 + 1
    steps = 0
    while True:
        hit = _first_offender(alpha)
        if hit is None:
            break
        a, b = hit
        b1 = (a[0] + 1, a[1])
        if b[0] != a[0] + 1 or b1 not in alpha.source:
            raise PreconditionError(f"unexpected offender configuration at {a}, {b}")
        alpha = alpha.swap_sources(b, b1)
        steps += 1
        if steps > limit:
            raise RuntimeError("normalization did not terminate")
    assert row_tableau(alpha) == S
    assert has_property_b(alpha, strict_columns=True)
    return (alpha, steps) if return_steps else alpha


# ------------------------------------------------------------ enumeration

def candidate_for(S, E):
    """The only mapping with S = S_E o alpha that can be admissible.

    Row i of E, read left to right, is sent by the inverse onto the cells of
    S carrying i, sorted by the linear order (row ascending, column descending).
    """
    by_value = {}
    for c, v in S.items():
        by_value.setdefault(v, []).append(c)
    inv = {}
    for i, row in enumerate(E.rows, start=1):
        cells = sorted(by_value.get(i, ()), key=lambda c: (c[0], -c[1]))
        if len(cells) != len(row):
            raise PreconditionError("weight of S does not match the rows of E")
        inv.update(zip(row, cells))
    return DiagramMapping.from_dict(S.shape, E, {a: b for b, a in inv.items()})


@lru_cache(maxsize=None)
def enumerate_admissible(F, E):
    """All admissible semi-standard S of shape F, each with its picture F -> E."""
    if len(F) != len(E):
        raise ValueError("|F| != |E|")
    out = []
    for S in enumerate_tableaux(F, "semistandard", weight=E.row_lengths):
        alpha = candidate_for(S, E)
        if is_admissible(alpha):
            out.append((S, alpha))
    return tuple(out)


def count_admissible(F, E):
    return len(enumerate_admissible(F, E))


def all_bijections(F, E):
    for perm in permutations(E.cells):
        yield DiagramMapping(F, E, perm)


def representative_standard_tableau(S, E):
    """A standard T of shape F with S = S_E o alpha_T.

    The numbers of row i of T_E are placed, in increasing order, into the
    cells of S carrying i taken in scan order.
    """
    F = S.shape
    if S.weight(len(E.row_lengths)) != E.row_lengths:
        raise PreconditionError("weight of S does not match the rows of E")
    TE, _ = canonical_tableaux(E)
    vals = {}
    for i, row in enumerate(E.rows, start=1):
        nums = [TE[c] for c in row]
        cells = [c for c, v in S.items() if v == i]
        vals.update(zip(cells, nums))
    T = Tableau(F, tuple(vals[c] for c in F.cells))
    if not T.is_standard():
        raise PreconditionError("S is not realizable by a standard tableau")
    return T
