"""Products, the two coproducts, and primitive-subspace computations.

The same code path serves the all-black bialgebra (rule "jr"), the colored
one (rule "c"), and any quotient of either: a context carries the edge
palette, the coproduct rule, and optional homogeneous relation spans.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache

from .graphs import (
    COLORS,
    EMPTY,
    Graph,
    RED,
    canonical_form,
    disjoint_union,
    enumerate_graphs,
    full_subgraph,
)
from .linalg import LinComb, SpanBasis, nullspace_of_map

JR = "jr"
C = "c"


@dataclass
class BialgebraContext:
    """Which basis we work over, which coproduct, and which relations."""

    palette: tuple = COLORS
    rule: str = JR
    relations: dict = field(default_factory=dict)  # grading -> SpanBasis

    def basis(self, n):
        return enumerate_graphs(n, tuple(self.palette))

    def relation_span(self, n):
        return self.relations.get(n)

    def reduce_graph(self, g):
        """Quotient normal form of a single basis graph."""
        rel = self.relation_span(g.n)
        v = LinComb.unit(g)
        return rel.reduce(v) if rel is not None else v

    def quotient_basis(self, n):
        rel = self.relation_span(n)
        pivots = set(rel.pivot_keys()) if rel is not None else set()
        return [g for g in self.basis(n) if g not in pivots]


JR_CONTEXT = BialgebraContext(palette=("b",), rule=JR)
RED_CONTEXT = BialgebraContext(palette=(RED,), rule=C)


def product(a, b):
    """Bilinear extension of disjoint union; keys canonicalized."""
    out = {}
    for g, cg in a.terms.items():
        for h, ch in b.terms.items():
            k = canonical_form(disjoint_union(g, h))
            out[k] = out.get(k, Fraction(0)) + cg * ch
    return LinComb(out)


def tensor_product(a, b):
    """Legwise product of tensor elements (keys are graph pairs)."""
    out = {}
    for (g1, g2), cg in a.terms.items():
        for (h1, h2), ch in b.terms.items():
            k = (
                canonical_form(disjoint_union(g1, h1)),
                canonical_form(disjoint_union(g2, h2)),
            )
            out[k] = out.get(k, Fraction(0)) + cg * ch
    return LinComb(out)


def _red_crossing(g, in_p):
    return any(
        c == RED and (in_p[i] != in_p[j]) for (i, j, c) in g.edges
    )


@lru_cache(maxsize=None)
def coproduct_graph(g, rule):
    """Coproduct of a single graph, as a sum over ordered key pairs.

    Rule "jr" sums over all vertex bipartitions; rule "c" keeps only
    bipartitions with no red edge crossing the cut.
    """
    out = {}
    vertices = range(g.n)
    for bits in itertools.product((False, True), repeat=g.n):
        if rule == C and _red_crossing(g, bits):
            continue
        p = [v for v in vertices if bits[v]]
        q = [v for v in vertices if not bits[v]]
        k = (
            canonical_form(full_subgraph(g, p)),
            canonical_form(full_subgraph(g, q)),
        )
        out[k] = out.get(k, Fraction(0)) + 1
    return LinComb(out)


def coproduct(x, rule):
    """Linear extension of the coproduct to combinations."""
    out = LinComb()
    for g, c in x.terms.items():
        out = out + coproduct_graph(g, rule).scale(c)
    return out


def counit(x):
    return x.coeff(EMPTY)


def apply_counit_left(t):
    """(counit x id) applied to a tensor element, as a plain combination."""
    return LinComb(
        [(g2, c) for (g1, g2), c in t.terms.items() if g1 == EMPTY]
    )


def apply_counit_right(t):
    return LinComb(
        [(g1, c) for (g1, g2), c in t.terms.items() if g2 == EMPTY]
    )


def swap_legs(t):
    return LinComb([((g2, g1), c) for (g1, g2), c in t.terms.items()])


def _check_homogeneous(x):
    ns = {g.n for g in x.terms}
    if len(ns) > 1:
        raise ValueError("combination is not homogeneous in grading")
    return ns.pop() if ns else 0


def reduced_coproduct(x, rule, ctx=None):
    """Delta(x) - x (x) 1 - 1 (x) x, legs reduced modulo ctx relations."""
    n = _check_homogeneous(x)
    t = coproduct(x, rule)
    t = t - LinComb([((g, EMPTY), c) for g, c in x.terms.items()])
    t = t - LinComb([((EMPTY, g), c) for g, c in x.terms.items()])
    if n == 0:
        # Delta(1) = 1 (x) 1; the two subtractions each remove it once.
        t = t + LinComb([((EMPTY, EMPTY), counit(x))])
    if ctx is not None and ctx.relations:
        t = reduce_tensor(t, ctx)
    return t


def reduce_tensor(t, ctx):
    """Normal form of a tensor element modulo rel (x) ambient + ambient (x) rel."""
    out = LinComb()
    for (g1, g2), c in t.terms.items():
        r1 = ctx.reduce_graph(g1)
        r2 = ctx.reduce_graph(g2)
        out = out + LinComb(
            {
                (k1, k2): c * c1 * c2
                for k1, c1 in r1.terms.items()
                for k2, c2 in r2.terms.items()
            }
        )
    return out


def is_primitive(x, rule, ctx=None):
    return reduced_coproduct(x, rule, ctx).is_zero()


def _primitive_images(n, ctx):
    basis = ctx.quotient_basis(n)
    images = [
        reduced_coproduct(LinComb.unit(g), ctx.rule, ctx) for g in basis
    ]
    return basis, images


def primitive_dimension(n, ctx):
    """dim ker of the reduced coproduct on the grading-n quotient component."""
    if n == 0:
        return 0
    basis, images = _primitive_images(n, ctx)
    span = SpanBasis()
    rank = sum(span.insert(img) for img in images)
    return len(basis) - rank


def primitive_basis(n, ctx):
    """Combinations spanning the primitive subspace in grading n."""
    if n == 0:
        return []
    basis, images = _primitive_images(n, ctx)
    columns = sorted({k for img in images for k in img.terms}, key=lambda k: tuple(x.sort_key() for x in k))
    out = []
    for coeffs in nullspace_of_map(basis, images, columns):
        v = LinComb([(g, c) for g, c in zip(basis, coeffs) if c])
        out.append(v)
    return out


def graded_dimension(n, ctx):
    return len(ctx.quotient_basis(n))


def symmetric_algebra_dims(primitive_dims, max_n):
    """Graded dims of the symmetric algebra on a space with the given
    primitive dims per grading: coefficients of prod_k (1-t^k)^(-p_k)."""
    coeffs = [1] + [0] * max_n
    for k in range(1, max_n + 1):
        p = primitive_dims.get(k, 0)
        for _ in range(p):
            # multiply by 1/(1-t^k)
            for i in range(k, max_n + 1):
                coeffs[i] += coeffs[i - k]
    return coeffs
