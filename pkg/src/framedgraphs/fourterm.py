"""Four-term relation generators, their spans, and the quotient dimensions.

The classical generators live in the all-black basis; their red-basis
incarnation is a two-sided sum over splittings of attachment sets.  Spans
are graded: fc_span(n) is the grading-n component of the biideal in the
red-only basis, including products of lower-grading generators with basis
classes.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .graphs import (
    BLACK,
    EMPTY,
    Graph,
    RED,
    add_leaf,
    adjacency,
    canonical_form,
    disjoint_union,
    enumerate_graphs,
    is_connected,
    is_tree,
)
from .bialgebra import BialgebraContext, C, primitive_basis, primitive_dimension, product
from .linalg import LinComb, SpanBasis, intersect
from .reduction import red_normal_form


def fourterm_jr(g, u, v):
    """Classical 4-element at the edge (u, v) of an all-black graph."""
    if not g.is_all_black():
        raise ValueError("4-element base graph must be all black")
    if g.edge_color(u, v) is None:
        raise ValueError("vertices (%d, %d) are not adjacent" % (u, v))
    uv = (min(u, v), max(u, v), BLACK)
    erased = Graph.make(g.n, g.framing, [e for e in g.edges if e != uv])
    adj = adjacency(g)
    tilde_edges = {(i, j) for (i, j, _) in g.edges}
    for w in adj[v]:
        if w in (u, v):
            continue
        pair = (min(u, w), max(u, w))
        if pair in tilde_edges:
            tilde_edges.discard(pair)
        else:
            tilde_edges.add(pair)
    tilde_framing = list(g.framing)
    tilde_framing[u] = (g.framing[u] + g.framing[v]) % 2
    tilde = Graph.make(g.n, tilde_framing, [(i, j, BLACK) for (i, j) in tilde_edges])
    tilde_erased = Graph.make(
        g.n,
        tilde_framing,
        [(i, j, BLACK) for (i, j) in tilde_edges if (i, j) != (uv[0], uv[1])],
    )
    sign = (-1) ** g.framing[v]
    out = LinComb.unit(canonical_form(g))
    out = out - LinComb.unit(canonical_form(erased))
    out = out - LinComb.unit(canonical_form(tilde), sign)
    out = out + LinComb.unit(canonical_form(tilde_erased), sign)
    return out


def fourterm_red(rest, A, B, a, b, c):
    """Red-basis 4-element for (rest, A, B, a, b, c).

    rest is a red-only graph; a, b, c are pairwise disjoint vertex subsets
    of rest.  Two new vertices u (framing A) and v (framing B) are added
    with a red edge u-v; a attaches to u, c to v, and the left sum runs
    over all covering pairs b = b1 | b2 (overlap allowed: a vertex in both
    attaches to both u and v), 3^|b| terms.  On the right u's framing
    becomes A + B, b attaches to v, and c is covered by (c1, c2) the same
    way, with overall sign -(-1)^B.  The covering-pair reading is the one
    produced by Moebius inversion of the black-edge expansions of the
    classical elements; it makes the two generator families span the same
    ideal, which the disjoint-splitting reading does not.
    """
    if not rest.is_red_only():
        raise ValueError("rest graph must be red-only")
    a, b, c = (tuple(sorted(s)) for s in (a, b, c))
    if len(set(a) | set(b) | set(c)) != len(a) + len(b) + len(c):
        raise ValueError("subsets a, b, c must be pairwise disjoint")
    for w in a + b + c:
        if not (0 <= w < rest.n):
            raise ValueError("vertex out of range")
    u, v = rest.n, rest.n + 1
    base = list(rest.edges) + [(u, v, RED)]
    base += [(x, u, RED) for x in a]
    out = {}
    left_framing = rest.framing + (A, B)
    for pick in itertools.product(((u,), (v,), (u, v)), repeat=len(b)):
        edges = (
            base
            + [(y, v, RED) for y in c]
            + [(z, t, RED) for z, ts in zip(b, pick) for t in ts]
        )
        k = canonical_form(Graph.make(rest.n + 2, left_framing, edges))
        out[k] = out.get(k, Fraction(0)) + 1
    right_framing = rest.framing + ((A + B) % 2, B)
    sign = -((-1) ** B)
    for pick in itertools.product(((u,), (v,), (u, v)), repeat=len(c)):
        edges = (
            base
            + [(z, v, RED) for z in b]
            + [(y, t, RED) for y, ts in zip(c, pick) for t in ts]
        )
        k = canonical_form(Graph.make(rest.n + 2, right_framing, edges))
        out[k] = out.get(k, Fraction(0)) + sign
    return LinComb(out)


def _dedup(combos):
    seen = set()
    out = []
    for x in combos:
        if x.is_zero():
            continue
        s = x.signature()
        if s not in seen:
            seen.add(s)
            out.append(x)
    return out


@lru_cache(maxsize=None)
def red_generators(m, framing_zero_only=False):
    """Deduplicated red-form 4-elements of grading m."""
    if m < 2:
        return ()
    out = []
    for rest in enumerate_graphs(m - 2, (RED,)):
        if framing_zero_only and any(rest.framing):
            continue
        framings = ((0, 0),) if framing_zero_only else tuple(
            itertools.product((0, 1), repeat=2)
        )
        for roles in itertools.product((None, "a", "b", "c"), repeat=rest.n):
            a = [w for w, r in enumerate(roles) if r == "a"]
            b = [w for w, r in enumerate(roles) if r == "b"]
            c = [w for w, r in enumerate(roles) if r == "c"]
            for A, B in framings:
                out.append(fourterm_red(rest, A, B, a, b, c))
    return tuple(_dedup(out))


@lru_cache(maxsize=None)
def jr_generators(m):
    """Deduplicated classical 4-elements of grading m, in the black basis."""
    if m < 2:
        return ()
    out = []
    for g in enumerate_graphs(m, (BLACK,)):
        for (i, j, _) in sorted(g.edges):
            out.append(fourterm_jr(g, i, j))
            out.append(fourterm_jr(g, j, i))
    return tuple(_dedup(out))


@lru_cache(maxsize=None)
def jr_generators_red_image(m):
    """Classical 4-elements pushed into the red-only basis."""
    return tuple(_dedup(red_normal_form(x) for x in jr_generators(m)))


def _graded_closure(n, generators_of, basis_of):
    """Span of generators of grading m <= n times basis classes of grading
    n - m; this is the grading-n component of the generated ideal."""
    span = SpanBasis()
    for m in range(2, n + 1):
        for gen in generators_of(m):
            for cls in basis_of(n - m):
                span.insert(product(gen, LinComb.unit(cls)))
    return span


@lru_cache(maxsize=None)
def fc_span(n, source="red_form"):
    """Grading-n component of the 4-element biideal in the red-only basis."""
    if source == "red_form":
        gens = red_generators
    elif source == "jr_image":
        gens = jr_generators_red_image
    elif source == "both":
        gens = lambda m: red_generators(m) + jr_generators_red_image(m)  # noqa: E731
    else:
        raise ValueError("unknown generator source %r" % (source,))
    return _graded_closure(n, gens, lambda k: enumerate_graphs(k, (RED,)))


@lru_cache(maxsize=None)
def fjr_span(n):
    """Grading-n component of the biideal in the all-black basis."""
    return _graded_closure(
        n, jr_generators, lambda k: enumerate_graphs(k, (BLACK,))
    )


def dim_lando(n, source="red_form"):
    """Graded dimension of the quotient by the 4-element biideal."""
    return len(enumerate_graphs(n, (RED,))) - fc_span(n, source).rank


def dim_lando_black(n):
    """Same dimension computed entirely in the all-black basis."""
    return len(enumerate_graphs(n, (BLACK,))) - fjr_span(n).rank


def n_context(n, source="red_form"):
    """Quotient bialgebra context for the red basis modulo the biideal."""
    return BialgebraContext(
        palette=(RED,),
        rule=C,
        relations={k: fc_span(k, source) for k in range(2, n + 1)},
    )


@lru_cache(maxsize=None)
def connected_relation_basis(n):
    """Intersection of the grading-n biideal component with the span of
    connected classes: the relations cutting out the primitive quotient."""
    connected = enumerate_graphs(n, (RED,), connected_only=True)
    coord = SpanBasis()
    for g in connected:
        coord.insert(LinComb.unit(g))
    return intersect(fc_span(n), coord, enumerate_graphs(n, (RED,)))


def dim_primitive_N(n, method="intersection"):
    """Primitive dimension of the quotient, by either of two routes."""
    if n == 0:
        return 0
    if method == "intersection":
        connected = enumerate_graphs(n, (RED,), connected_only=True)
        return len(connected) - connected_relation_basis(n).rank
    if method == "kernel":
        return primitive_dimension(n, n_context(n))
    raise ValueError("unknown method %r" % (method,))


def primitive_basis_N(n):
    return primitive_basis(n, n_context(n))


def classes_rank_mod_relations(n, graphs):
    """Rank of the given connected classes inside the primitive quotient."""
    for g in graphs:
        if g.n != n:
            raise ValueError("graph of grading %d in grading-%d rank" % (g.n, n))
    span = connected_relation_basis(n).copy()
    base = span.rank
    for g in graphs:
        span.insert(LinComb.unit(canonical_form(g)))
    return span.rank - base


# -- framing-restricted subspaces ---------------------------------------------


def _framing_zero(g):
    return not any(g.framing)


@lru_cache(maxsize=None)
def _fc_span_framing_zero(n):
    """Biideal component computed inside the framing-all-0 sub-bialgebra."""
    return _graded_closure(
        n,
        lambda m: red_generators(m, framing_zero_only=True),
        lambda k: tuple(
            g for g in enumerate_graphs(k, (RED,)) if _framing_zero(g)
        ),
    )


def dim_pbl(n):
    """Primitive dimension of the framing-all-0 sub-bialgebra, computed
    without reference to the full quotient."""
    if n == 0:
        return 0
    connected = [
        g
        for g in enumerate_graphs(n, (RED,), connected_only=True)
        if _framing_zero(g)
    ]
    coord = SpanBasis()
    for g in connected:
        coord.insert(LinComb.unit(g))
    ambient = [g for g in enumerate_graphs(n, (RED,)) if _framing_zero(g)]
    inter = intersect(_fc_span_framing_zero(n), coord, ambient)
    return len(connected) - inter.rank


def dim_pbl_image(n):
    """Rank of the framing-all-0 connected classes inside the full
    primitive quotient (cross-check for dim_pbl)."""
    classes = [
        g
        for g in enumerate_graphs(n, (RED,), connected_only=True)
        if _framing_zero(g)
    ]
    return classes_rank_mod_relations(n, classes)


def dim_pwl(n):
    """Rank, in the primitive quotient, of the connected classes having at
    least one framing-1 vertex."""
    classes = [
        g
        for g in enumerate_graphs(n, (RED,), connected_only=True)
        if any(g.framing)
    ]
    return classes_rank_mod_relations(n, classes)


def sub_bialgebra_dims(n):
    """(dim PBL_n, dim PWL_n, dim PL_n)."""
    return (dim_pbl(n), dim_pwl(n), dim_primitive_N(n))


# -- leaf attachment, trees, forest algebra -----------------------------------


def leaf_identity_difference(g, u, v):
    """(g with framing-0 red leaf at u) - (same at v)."""
    return LinComb.unit(canonical_form(add_leaf(g, u, 0, RED))) - LinComb.unit(
        canonical_form(add_leaf(g, v, 0, RED))
    )


def leaf_identity_check(n):
    """For every connected red graph on <= n vertices and every red edge,
    verify the two leaf attachments agree modulo the biideal."""
    failures = []
    checked = 0
    for m in range(2, n + 1):
        span = fc_span(m + 1)
        for g in enumerate_graphs(m, (RED,), connected_only=True):
            for (u, v) in g.red_edges():
                checked += 1
                if not span.contains(leaf_identity_difference(g, u, v)):
                    failures.append((g, u, v))
    return {"checked": checked, "failures": failures, "ok": not failures}


@lru_cache(maxsize=None)
def trees(k):
    """Framing-0 red trees on k vertices, up to isomorphism."""
    if k < 1:
        return ()
    if k == 1:
        return (Graph.make(1, (0,)),)
    seen = set()
    for t in trees(k - 1):
        for w in range(t.n):
            seen.add(canonical_form(add_leaf(t, w, 0, RED)))
    return tuple(sorted(seen, key=Graph.sort_key))


def tree_action(tree, g):
    """Attach a framing-0 red tree to a connected red graph by one red edge
    at the canonically-first vertex of each side."""
    if not is_tree(tree) or any(tree.framing) or not tree.is_red_only():
        raise ValueError("action requires a framing-0 red tree")
    if not is_connected(g) or not g.is_red_only():
        raise ValueError("action target must be a connected red graph")
    gc = canonical_form(g)
    tc = canonical_form(tree)
    joined = disjoint_union(gc, tc)
    return canonical_form(
        Graph.make(joined.n, joined.framing, list(joined.edges) + [(0, gc.n, RED)])
    )


def tree_action_choices(tree, g):
    """Classes obtained for every choice of attachment vertices; used by the
    choice-independence experiment, not asserted by the library."""
    gc = canonical_form(g)
    tc = canonical_form(tree)
    joined = disjoint_union(gc, tc)
    out = set()
    for w in range(gc.n):
        for v in range(tc.n):
            out.add(
                canonical_form(
                    Graph.make(
                        joined.n,
                        joined.framing,
                        list(joined.edges) + [(w, gc.n + v, RED)],
                    )
                )
            )
    return sorted(out, key=Graph.sort_key)


def forest_checks(n):
    """All framing-0 trees on k <= n vertices coincide in the quotient and
    their common class spans rank one among the primitives."""
    from .invariants import framed_chromatic_graph

    report = []
    for k in range(1, n + 1):
        ts = trees(k)
        t0 = ts[0]
        all_equal = all(
            fc_span(k).contains(LinComb.unit(t) - LinComb.unit(t0))
            for t in ts[1:]
        )
        rank = classes_rank_mod_relations(k, ts)
        chrom = framed_chromatic_graph(t0)
        report.append(
            {
                "k": k,
                "num_trees": len(ts),
                "all_equal": all_equal,
                "rank": rank,
                "chromatic_nonzero": not chrom.is_zero(),
                "ok": all_equal and rank == 1 and not chrom.is_zero(),
            }
        )
    return report
