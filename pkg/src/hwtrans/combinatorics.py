"""Partitions, skew diagrams and tableaux.

Partitions are plain tuples of positive integers (trailing zeros trimmed).
Cells are 1-based ``(row, column)`` pairs.  A :class:`Tableau` stores its
entries in the standard scan order of its shape: row by row from the top,
each row from left to right.
"""

from collections import Counter
from dataclasses import dataclass
from functools import cached_property, lru_cache
from math import factorial, prod


# ---------------------------------------------------------------- partitions

def partition(parts):
    """Validate and canonicalise a partition (drop trailing zeros)."""
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def is_partition(parts):
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(p >= 0 for p in parts)


def transpose(lam):
    lam = partition(lam)
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))


def dominance_le(mu, lam):
    """True iff ``mu <= lam`` in the dominance order."""
    mu, lam = partition(mu), partition(lam)
    if sum(mu) != sum(lam):
        raise ValueError(f"dominance order needs equal sizes: {mu}, {lam}")
    smu = slam = 0
    for i in range(max(len(mu), len(lam))):
        smu += mu[i] if i < len(mu) else 0
        slam += lam[i] if i < len(lam) else 0
        if smu > slam:
            return False
    return True


def partitions(t, max_len=None, max_part=None):
    """All partitions of ``t`` in reverse lexicographic order."""
    max_part = t if max_part is None else min(max_part, t)

    def rec(rest, cap, length):
        if rest == 0:
            yield ()
            return
        if max_len is not None and length >= max_len:
            return
        for p in range(min(rest, cap), 0, -1):
            for tail in rec(rest - p, p, length + 1):
                yield (p,) + tail

    yield from rec(t, max_part, 0)


def weak_compositions(t, m):
    """All ``m``-tuples of nonnegative integers summing to ``t`` (lex decreasing)."""
    if m == 0:
        if t == 0:
            yield ()
        return
    for first in range(t, -1, -1):
        for rest in weak_compositions(t - first, m - 1):
            yield (first,) + rest


def compositions(t):
    """Compositions of ``t`` into positive parts."""
    if t == 0:
        yield ()
        return
    for first in range(t, 0, -1):
        for rest in compositions(t - first):
            yield (first,) + rest


def n_statistic(lam):
    """n(lam) = sum (i-1) lam_i."""
    return sum(i * p for i, p in enumerate(partition(lam)))


def hook_length_count(lam):
    """Number of standard tableaux of straight shape ``lam``."""
    lam = partition(lam)
    conj = transpose(lam)
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    return factorial(sum(lam)) // hooks


def weyl_dimension(lam, m):
    """Dimension of the irreducible GL_m module of highest weight ``lam``."""
    lam = partition(lam)
    if len(lam) > m:
        return 0
    w = lam + (0,) * (m - len(lam))
    num = prod(w[i] - w[j] + j - i for i in range(m) for j in range(i + 1, m))
    den = prod(j - i for i in range(m) for j in range(i + 1, m))
    return num // den


# ------------------------------------------------------------- skew diagrams

@dataclass(frozen=True)
class SkewDiagram:
    """The skew diagram ``outer/inner``; a straight diagram has empty inner."""

    outer: tuple
    inner: tuple = ()

    def __post_init__(self):
        outer = partition(self.outer)
        inner = partition(self.inner)
        if len(inner) > len(outer) or any(a > b for a, b in zip(inner, outer)):
            raise ValueError(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @classmethod
    def straight(cls, lam):
        return cls(tuple(lam), ())

    @classmethod
    def antidiagonal(cls, t):
        """The diagram Delta_t: one cell per row, running from top right to bottom left."""
        return cls(tuple(range(t, 0, -1)), tuple(range(t - 1, -1, -1)))

    @classmethod
    def from_cells(cls, cells):
        """The skew diagram with exactly these cells (must be a valid skew shape)."""
        cells = set(cells)
        if not cells:
            return cls((), ())
        nrows = max(i for i, _ in cells)
        outer, inner = [], []
        for i in range(1, nrows + 1):
            cols = sorted(j for r, j in cells if r == i)
            if cols:
                if cols != list(range(cols[0], cols[-1] + 1)):
                    raise ValueError("row is not an interval")
                inner.append(cols[0] - 1)
                outer.append(cols[-1])
            else:
                inner.append(None)
                outer.append(None)
        # empty rows: squeeze between neighbours so that both stay partitions
        for i in range(nrows - 1, -1, -1):
            if outer[i] is None:
                below = inner[i + 1] if i + 1 < nrows and inner[i + 1] is not None else 0
                below_o = outer[i + 1] if i + 1 < nrows and outer[i + 1] is not None else 0
                v = max(below, below_o)
                outer[i] = inner[i] = v
        d = cls(tuple(outer), tuple(inner))
        if set(d.cells) != cells:
            raise ValueError("cells do not form a skew diagram")
        return d

    @cached_property
    def cells(self):
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        return tuple((i + 1, j) for i, (a, b) in enumerate(zip(inner, self.outer))
                     for j in range(a + 1, b + 1))

    @cached_property
    def index(self):
        """cell -> position in the standard scan."""
        return {c: k for k, c in enumerate(self.cells)}

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cell):
        return cell in self.index

    @property
    def is_straight(self):
        return not self.inner

    @cached_property
    def row_lengths(self):
        """Row-length vector indexed by ambient rows 1..len(outer)."""
        inner = self.inner + (0,) * (len(self.outer) - len(self.inner))
        return tuple(b - a for a, b in zip(inner, self.outer))

    @cached_property
    def rows(self):
        """Cells grouped by ambient row (empty rows included)."""
        out = [[] for _ in self.outer]
        for c in self.cells:
            out[c[0] - 1].append(c)
        return tuple(tuple(r) for r in out)

    @cached_property
    def columns(self):
        """Nonempty columns, each a tuple of cells from top to bottom."""
        cols = {}
        for c in self.cells:
            cols.setdefault(c[1], []).append(c)
        return tuple(tuple(cols[j]) for j in sorted(cols))

    def normalized(self):
        """Drop empty rows and empty columns (relative cell positions are kept)."""
        cells = self.cells
        rows = sorted({i for i, _ in cells})
        cols = sorted({j for _, j in cells})
        rmap = {r: k + 1 for k, r in enumerate(rows)}
        cmap = {c: k + 1 for k, c in enumerate(cols)}
        return SkewDiagram.from_cells((rmap[i], cmap[j]) for i, j in cells)

    def __repr__(self):
        if self.is_straight:
            return f"SkewDiagram({self.outer})"
        return f"SkewDiagram({self.outer}/{self.inner})"


def skew_diagrams(t):
    """All normalized skew diagrams with ``t`` cells (no empty rows or columns)."""
    seen = {}
    for size in range(t, t * t + 1):
        for outer in partitions(size, max_len=t, max_part=t):
            for k in range(size - t, size - t + 1):
                for inner in _sub_partitions(outer, k):
                    d = SkewDiagram(outer, inner).normalized()
                    seen.setdefault(d.cells, d)
    return sorted(seen.values(), key=lambda d: (d.outer, d.inner))


def _sub_partitions(outer, k):
    def rec(i, rest, cap):
        if i == len(outer):
            if rest == 0:
                yield ()
            return
        for p in range(min(rest, cap, outer[i]), -1, -1):
            for tail in rec(i + 1, rest - p, p):
                yield (p,) + tail

    for inner in rec(0, k, k):
        yield partition(inner)


# ----------------------------------------------------------------- tableaux

FLAVORS = ("ordered", "semistandard", "row_semistandard", "standard")


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew diagram by positive integers."""

    shape: SkewDiagram
    entries: tuple

    def __post_init__(self):
        if len(self.entries) != len(self.shape.cells):
            raise ValueError("entry count does not match the shape")

    @classmethod
    def from_rows(cls, rows, shape=None):
        """Build from rows; ``None`` marks an inner (absent) cell.

        Without an explicit shape, leading ``None``s in a row give the inner
        partition.
        """
        if shape is None:
            outer = tuple(len(r) for r in rows)
            inner = tuple(sum(1 for x in r if x is None) for r in rows)
            shape = SkewDiagram(outer, inner)
        entries = tuple(x for r in rows for x in r if x is not None)
        return cls(shape, entries)

    def __getitem__(self, cell):
        return self.entries[self.shape.index[cell]]

    def __len__(self):
        return len(self.entries)

    def rows(self):
        """Entries by ambient row (empty rows give empty tuples)."""
        idx = self.shape.index
        return tuple(tuple(self.entries[idx[c]] for c in row) for row in self.shape.rows)

    def padded_rows(self):
        """Rows with ``None`` in the inner cells (JSON layout)."""
        inner = self.shape.inner + (0,) * (len(self.shape.outer) - len(self.shape.inner))
        return [[None] * a + list(r) for a, r in zip(inner, self.rows())]

    def standard_scan(self):
        return self.entries

    def weight(self, length=None):
        top = max(self.entries, default=0)
        if length is None:
            length = top
        elif length < top:
            raise ValueError(f"entry {top} exceeds weight length {length}")
        c = Counter(self.entries)
        return tuple(c.get(i, 0) for i in range(1, length + 1))

    def items(self):
        return zip(self.shape.cells, self.entries)

    def relabel(self, f):
        return Tableau(self.shape, tuple(f(x) for x in self.entries))

    def row_sorted(self):
        """The row-ordered tableau row-equivalent to this one."""
        return Tableau(self.shape, tuple(x for r in self.rows() for x in sorted(r)))

    def column_sorted(self):
        vals = dict(self.items())
        for col in self.shape.columns:
            for c, v in zip(col, sorted(vals[c] for c in col)):
                vals[c] = v
        return Tableau(self.shape, tuple(vals[c] for c in self.shape.cells))

    def cells_with(self, value):
        return tuple(c for c, v in self.items() if v == value)

    # flavors ------------------------------------------------------------
    def _pairs(self, direction):
        idx = self.shape.index
        e = self.entries
        for (i, j), k in idx.items():
            nb = (i, j + 1) if direction == "row" else (i + 1, j)
            k2 = idx.get(nb)
            if k2 is not None:
                yield e[k], e[k2]

    def is_row_ordered(self, strict=False):
        return all(a < b if strict else a <= b for a, b in self._pairs("row"))

    def is_column_ordered(self, strict=False):
        return all(a < b if strict else a <= b for a, b in self._pairs("col"))

    def is_ordered(self):
        return self.is_row_ordered() and self.is_column_ordered()

    def is_semistandard(self):
        return self.is_row_ordered() and self.is_column_ordered(strict=True)

    def is_row_semistandard(self):
        return self.is_row_ordered(strict=True) and self.is_column_ordered()

    def is_t_tableau(self):
        return sorted(self.entries) == list(range(1, len(self.entries) + 1))

    def is_standard(self):
        return (self.is_t_tableau() and self.is_row_ordered(strict=True)
                and self.is_column_ordered(strict=True))

    def has_flavor(self, flavor):
        return {
            "ordered": self.is_ordered,
            "semistandard": self.is_semistandard,
            "row_semistandard": self.is_row_semistandard,
            "standard": self.is_standard,
        }[flavor]()

    def __repr__(self):
        return f"Tableau({self.padded_rows()})"


def canonical_tableaux(E):
    """``(T_E, S_E)``: numbers 1..t row by row, and each cell filled with its row index."""
    T = Tableau(E, tuple(range(1, len(E) + 1)))
    S = Tableau(E, tuple(i for i, _ in E.cells))
    return T, S


def standard_scan(T):
    return T.entries


def tableau_preorder_le(S, T):
    """``S <= T``: compare row-sorted representatives by standard scan."""
    if S.shape != T.shape:
        raise ValueError("tableaux of different shapes")
    return S.row_sorted().entries <= T.row_sorted().entries


def enumerate_tableaux(shape, flavor, weight=None, max_entry=None):
    """All tableaux of the given flavor, in scan-lexicographic order.

    For ``standard`` the entries are 1..t and ``max_entry`` is ignored.
    With ``weight`` the entries are bounded by ``len(weight)`` (and by
    ``max_entry`` if given) and the multiplicities must match exactly.
    """
    if flavor not in FLAVORS:
        raise ValueError(f"unknown flavor {flavor!r}")
    cells = shape.cells
    t = len(cells)
    if flavor == "standard":
        top = t
        weight = (1,) * t
    else:
        if weight is not None:
            top = len(weight) if max_entry is None else min(max_entry, len(weight))
            if any(w < 0 for w in weight) or sum(weight) != t:
                return []
            if any(weight[k] for k in range(top, len(weight))):
                return []
        else:
            if max_entry is None or max_entry < 1:
                if t == 0:
                    return [Tableau(shape, ())]
                raise ValueError("max_entry must be >= 1")
            top = max_entry
    row_strict = flavor in ("row_semistandard", "standard")
    col_strict = flavor in ("semistandard", "standard")
    idx = shape.index
    left = [idx.get((i, j - 1)) for i, j in cells]
    up = [idx.get((i - 1, j)) for i, j in cells]
    counts = list(weight) if weight is not None else None
    vals = [0] * t
    out = []

    def rec(k):
        if k == t:
            out.append(Tableau(shape, tuple(vals)))
            return
        lo = 1
        if left[k] is not None:
            lo = max(lo, vals[left[k]] + row_strict)
        if up[k] is not None:
            lo = max(lo, vals[up[k]] + col_strict)
        for v in range(lo, top + 1):
            if counts is not None:
                if not counts[v - 1]:
                    continue
                counts[v - 1] -= 1
            vals[k] = v
            rec(k + 1)
            if counts is not None:
                counts[v - 1] += 1

    rec(0)
    return out


# -------------------------------------------------------- charge and Kostka

def reading_word(T):
    """Rows read from the bottom row to the top row, each left to right.

    With this reading order the one-row tableau 1 2 ... n has word 1 2 ... n
    and charge n(n-1)/2, and the tableau with row i filled by i's has charge 0.
    """
    return tuple(x for r in reversed(T.rows()) for x in r)


def charge_word(word):
    """Lascoux-Schutzenberger charge of a word of partition content.

    Standard subwords are extracted by scanning leftwards (cyclically) from
    the right end for 1, then 2, ...; the index goes up by one each time the
    scan wraps around.
    """
    c = Counter(word)
    content = [c.get(i, 0) for i in range(1, max(c, default=0) + 1)]
    if any(a < b for a, b in zip(content, content[1:])) or (content and content[0] == 0):
        raise ValueError(f"word content {tuple(content)} is not a partition")
    letters = list(word)
    alive = [True] * len(letters)
    total = 0
    remaining = len(letters)
    while remaining:
        n = len(letters)
        cur = n
        index = 0
        k = 1
        while True:
            found = None
            wrapped = False
            for p in range(cur - 1, -1, -1):
                if alive[p] and letters[p] == k:
                    found = p
                    break
            if found is None:
                for p in range(n - 1, cur - 1, -1):
                    if alive[p] and letters[p] == k:
                        found = p
                        wrapped = True
                        break
            if found is None:
                break
            if k > 1 and wrapped:
                index += 1
            total += index
            alive[found] = False
            remaining -= 1
            cur = found
            k += 1
    return total


def charge(T):
    """Charge of a tableau whose weight is a partition."""
    return charge_word(reading_word(T))


@lru_cache(maxsize=None)
def kostka_polynomial(lam, mu):
    """K_{lam,mu}(q) as a dict ``degree -> coefficient``."""
    lam, mu = partition(lam), partition(mu)
    if sum(lam) != sum(mu):
        raise ValueError("Kostka polynomial needs |lam| = |mu|")
    out = Counter()
    for T in enumerate_tableaux(SkewDiagram.straight(lam), "semistandard", weight=mu):
        out[charge(T)] += 1
    return dict(sorted(out.items()))


def kostka_number(lam, weight):
    """Number of semi-standard tableaux of shape ``lam`` and weight ``weight``.

    The weight may be any composition; Kostka numbers are symmetric in it.
    """
    w = tuple(sorted((x for x in weight if x), reverse=True))
    lam = partition(lam)
    if sum(lam) != sum(w):
        return 0
    if len(lam) > len(w) or not dominance_le(w, lam):
        return 0
    return _kostka_count(lam, w)


@lru_cache(maxsize=None)
def _kostka_count(lam, w):
    return len(enumerate_tableaux(SkewDiagram.straight(lam), "semistandard", weight=w))


def reversed_kostka(lam, mu):
    """t^{n(mu)} K_{lam,mu}(1/t)."""
    nm = n_statistic(mu)
    return dict(sorted((nm - d, c) for d, c in kostka_polynomial(lam, mu).items()))


# --------------------------------------------------------------------- JSON

def skew_to_json(E):
    return {"outer": list(E.outer), "inner": list(E.inner)}


def skew_from_json(obj):
    if isinstance(obj, list):
        return SkewDiagram.straight(obj)
    return SkewDiagram(tuple(obj["outer"]), tuple(obj.get("inner", ())))


def tableau_to_json(T):
    return {"shape": skew_to_json(T.shape), "rows": T.padded_rows()}


def tableau_from_json(obj):
    shape = skew_from_json(obj["shape"])
    return Tableau.from_rows(obj["rows"], shape)
