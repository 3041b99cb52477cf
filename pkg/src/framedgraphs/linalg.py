"""Exact rational linear combinations and echelonized spans.

Keys are canonical graphs (or tuples of them, for tensor elements); the
total order on keys comes from Graph.sort_key.  All arithmetic is over
fractions.Fraction, never floats.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .graphs import Graph


def key_order(k):
    """Total order on basis keys: graphs by (n, encoding), tuples legwise."""
    if isinstance(k, Graph):
        return (0, k.sort_key())
    return (1, tuple(x.sort_key() for x in k))


class LinComb:
    """Finite formal sum of basis keys with Fraction coefficients.

    Immutable by convention; zero coefficients are never stored.
    """

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        t = {}
        if terms:
            for k, c in (terms.items() if isinstance(terms, dict) else terms):
                c = Fraction(c)
                if c:
                    t[k] = t.get(k, Fraction(0)) + c
                    if not t[k]:
                        del t[k]
        object.__setattr__(self, "terms", t)

    @classmethod
    def unit(cls, key, coeff=1):
        return cls({key: Fraction(coeff)})

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self):
        return not self.terms

    def __eq__(self, other):
        return isinstance(other, LinComb) and self.terms == other.terms

    def __hash__(self):
        return hash(self.signature())

    def __add__(self, other):
        t = dict(self.terms)
        for k, c in other.terms.items():
            c2 = t.get(k, Fraction(0)) + c
            if c2:
                t[k] = c2
            elif k in t:
                del t[k]
        return LinComb(t)

    def __neg__(self):
        return LinComb({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = Fraction(c)
        if not c:
            return LinComb()
        return LinComb({k: c * v for k, v in self.terms.items()})

    def __rmul__(self, c):
        return self.scale(c)

    def coeff(self, key):
        return self.terms.get(key, Fraction(0))

    def support(self):
        return sorted(self.terms, key=key_order)

    def items(self):
        return [(k, self.terms[k]) for k in self.support()]

    def map_keys(self, fn):
        """Apply fn to every key (fn may return a key or a LinComb)."""
        out = LinComb()
        for k, c in self.terms.items():
            img = fn(k)
            if isinstance(img, LinComb):
                out = out + img.scale(c)
            else:
                out = out + LinComb.unit(img, c)
        return out

    def signature(self):
        """Hashable normal form, for deduplicating generator lists."""
        return tuple((key_order(k), c) for k, c in self.items())

    def to_json_list(self):
        return [
            {"coeff": str(c), "graph": k.to_json_dict()} for k, c in self.items()
        ]

    @classmethod
    def from_json_list(cls, data):
        return cls(
            [
                (Graph.from_json_dict(item["graph"]), Fraction(item["coeff"]))
                for item in data
            ]
        )

    def to_json(self):
        return json.dumps(self.to_json_list())

    def __repr__(self):
        if not self.terms:
            return "LinComb(0)"
        return "LinComb(%s)" % " + ".join(
            "%s*%r" % (c, k) for k, c in self.items()
        )


def lc_add(a, b):
    return a + b


def lc_scale(c, a):
    return a.scale(c)


class SpanBasis:
    """Subspace in fully reduced row-echelon form over the key order.

    Each row has leading coefficient 1 on its pivot (the smallest key in
    its support), and no row's pivot key appears in any other row, so the
    stored basis is canonical for the row space.
    """

    def __init__(self, order=key_order):
        self.order = order
        self._rows = {}  # pivot key -> dict key -> Fraction

    def copy(self):
        other = SpanBasis(self.order)
        other._rows = {p: dict(r) for p, r in self._rows.items()}
        return other

    @property
    def rank(self):
        return len(self._rows)

    def pivot_keys(self):
        return sorted(self._rows, key=self.order)

    def rows(self):
        return [LinComb(self._rows[p]) for p in self.pivot_keys()]

    def _reduce_dict(self, terms):
        t = dict(terms)
        # Rows are fully reduced, so eliminating each pivot present in t
        # introduces no other pivot keys: a single pass suffices.
        for k in [k for k in t if k in self._rows]:
            c = t.pop(k, None)
            if c is None or not c:
                continue
            for k2, c2 in self._rows[k].items():
                if k2 == k:
                    continue
                v = t.get(k2, Fraction(0)) - c * c2
                if v:
                    t[k2] = v
                elif k2 in t:
                    del t[k2]
        return t

    def reduce(self, v):
        """Normal form of v modulo this span; zero iff v is a member."""
        return LinComb(self._reduce_dict(v.terms))

    def contains(self, v):
        return not self._reduce_dict(v.terms)

    def insert(self, v):
        """Insert v; returns True iff v was not already in the span."""
        r = self._reduce_dict(v.terms)
        if not r:
            return False
        pivot = min(r, key=self.order)
        inv = 1 / r[pivot]
        row = {k: c * inv for k, c in r.items()}
        # Full reduction: clear the new pivot from every stored row.
        for other in self._rows.values():
            c = other.get(pivot)
            if c is None:
                continue
            for k2, c2 in row.items():
                v2 = other.get(k2, Fraction(0)) - c * c2
                if v2:
                    other[k2] = v2
                elif k2 in other:
                    del other[k2]
        self._rows[pivot] = row
        return True

    def insert_all(self, vectors):
        for v in vectors:
            self.insert(v)
        return self

    def __eq__(self, other):
        return isinstance(other, SpanBasis) and self._rows == other._rows


# -- dense helpers (oracles and the general intersection) --------------------


def dense_rank(rows):
    """Rank of a list of Fraction row vectors, by plain elimination."""
    m = [list(r) for r in rows if any(r)]
    rank = 0
    ncols = len(m[0]) if m else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


def matrix_nullspace(rows):
    """Basis of {x : M x = 0} for M given as a list of rows."""
    if not rows:
        return []
    ncols = len(rows[0])
    m = [list(r) for r in rows]
    pivots = []
    rank = 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(m)) if m[i][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = 1 / m[rank][col]
        m[rank] = [x * inv for x in m[rank]]
        for i in range(len(m)):
            if i != rank and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b for a, b in zip(m[i], m[rank])]
        pivots.append(col)
        rank += 1
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        x = [Fraction(0)] * ncols
        x[fc] = Fraction(1)
        for r, pc in enumerate(pivots):
            x[pc] = -m[r][fc]
        basis.append(x)
    return basis


def nullspace_of_map(inputs, image_rows, column_keys):
    """Coefficient vectors c with sum_i c_i * image_rows[i] = 0.

    image_rows are LinCombs over column_keys; returns a list of lists of
    Fractions indexed like inputs.
    """
    idx = {k: i for i, k in enumerate(column_keys)}
    # Kernel of the transpose: columns indexed by inputs.
    mat = [[Fraction(0)] * len(inputs) for _ in column_keys]
    for j, row in enumerate(image_rows):
        for k, c in row.terms.items():
            mat[idx[k]][j] = c
    if not column_keys:
        mat = [[Fraction(0)] * len(inputs)]
    return matrix_nullspace(mat)


def intersect(basis_a, basis_b, ambient_keys, order=key_order):
    """Intersection of two spans inside the given ambient component.

    If basis_b spans a coordinate subspace (every row a unit vector) the
    intersection is read off a re-echelonization of basis_a with the
    coordinate keys ordered last; otherwise the generic kernel method on
    the stacked coordinate system is used.
    """
    b_rows = basis_b.rows()
    if all(len(r.terms) == 1 for r in b_rows):
        coord = {next(iter(r.terms)) for r in b_rows}
        reorder = lambda k: (k in coord, order(k))  # noqa: E731
        tmp = SpanBasis(order=reorder)
        tmp.insert_all(basis_a.rows())
        out = SpanBasis(order=order)
        for row in tmp.rows():
            if all(k in coord for k in row.terms):
                out.insert(row)
        return out
    a_rows = basis_a.rows()
    idx = {k: i for i, k in enumerate(ambient_keys)}
    cols = a_rows + b_rows
    mat = [[Fraction(0)] * len(cols) for _ in ambient_keys]
    for j, row in enumerate(cols):
        sign = 1 if j < len(a_rows) else -1
        for k, c in row.terms.items():
            mat[idx[k]][j] = sign * c
    out = SpanBasis(order=order)
    for x in matrix_nullspace(mat):
        v = LinComb()
        for i, row in enumerate(a_rows):
            if x[i]:
                v = v + row.scale(x[i])
        out.insert(v)
    return out
