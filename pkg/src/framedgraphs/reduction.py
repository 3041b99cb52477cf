"""Maps between the all-black and colored pictures.

iota colors a framed graph black; psi expands every red edge into
(black) - (deleted); red_normal_form rewrites every black edge as
(red) + (deleted), which is the normal form modulo the three-term ideal;
pi_c kills disconnected red graphs; pi_jr is the induced projection of
the all-black bialgebra onto its primitive subspace.
"""
from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .graphs import (
    BLACK,
    Graph,
    RED,
    canonical_form,
    enumerate_graphs,
    is_connected,
    spanning_subgraphs,
)
from .linalg import LinComb


def _require(x, pred, msg):
    bad = [g for g in x.terms if not pred(g)]
    if bad:
        raise ValueError("%s: %r" % (msg, bad[0]))


def iota(x):
    """View an all-black combination inside the colored algebra."""
    _require(x, Graph.is_all_black, "red edge in support of iota input")
    return x


@lru_cache(maxsize=None)
def _psi_graph(g):
    red = g.red_edges()
    black = [(i, j, BLACK) for (i, j) in g.black_edges()]
    out = {}
    for keep in itertools.product((False, True), repeat=len(red)):
        edges = list(black) + [
            (i, j, BLACK) for (i, j), k in zip(red, keep) if k
        ]
        sign = (-1) ** (len(red) - sum(keep))
        key = canonical_form(Graph.make(g.n, g.framing, edges))
        out[key] = out.get(key, Fraction(0)) + sign
    return LinComb(out)


def psi(x):
    """Expand each red edge into black-minus-deleted states, linearly."""
    out = LinComb()
    for g, c in x.terms.items():
        out = out + _psi_graph(g).scale(c)
    return out


@lru_cache(maxsize=None)
def _red_normal_form_graph(g):
    black = g.black_edges()
    red = [(i, j, RED) for (i, j) in g.red_edges()]
    out = {}
    for recolor in itertools.product((False, True), repeat=len(black)):
        edges = list(red) + [
            (i, j, RED) for (i, j), k in zip(black, recolor) if k
        ]
        key = canonical_form(Graph.make(g.n, g.framing, edges))
        out[key] = out.get(key, Fraction(0)) + 1
    return LinComb(out)


def red_normal_form(x):
    """Normal form in the red-only basis: black edge = red + deleted."""
    out = LinComb()
    for g, c in x.terms.items():
        out = out + _red_normal_form_graph(g).scale(c)
    return out


def pi_c(x):
    """Keep connected red supports, kill disconnected ones."""
    _require(x, Graph.is_red_only, "black edge in support of pi_c input")
    return LinComb([(g, c) for g, c in x.terms.items() if is_connected(g)])


@lru_cache(maxsize=None)
def _pi_jr_formula_graph(g):
    out = {}
    for inner in spanning_subgraphs(g):
        if not is_connected(inner):
            continue
        e_inner = inner.edge_count
        for sub in spanning_subgraphs(inner):
            sign = (-1) ** (e_inner - sub.edge_count)
            key = canonical_form(sub)
            out[key] = out.get(key, Fraction(0)) + sign
    return LinComb(out)


def pi_jr_formula(x):
    """Projection onto primitives by the double subgraph sum: connected
    spanning subgraphs, then all their edge subsets, with alternating sign."""
    _require(x, Graph.is_all_black, "red edge in support of pi_jr input")
    out = LinComb()
    for g, c in x.terms.items():
        out = out + _pi_jr_formula_graph(g).scale(c)
    return out


def pi_jr_composition(x):
    """The same projection computed as psi . pi_c . red_normal_form . iota."""
    return psi(pi_c(red_normal_form(iota(x))))


pi_jr = pi_jr_formula


def ic_generator(base, u, v):
    """(red uv) - (black uv) + (no uv edge), all else as in base.

    base must not already carry a u-v edge.
    """
    if base.has_edge(u, v):
        raise ValueError("base graph already has an edge at (u, v)")
    rest = list(base.edges)
    out = LinComb()
    for color, sign in ((RED, 1), (BLACK, -1), (None, 1)):
        edges = rest if color is None else rest + [(u, v, color)]
        g = canonical_form(Graph.make(base.n, base.framing, edges))
        out = out + LinComb.unit(g, sign)
    return out


def ic_generators(n, palette=(BLACK, RED)):
    """All three-term ideal generators in grading n, up to isomorphism of
    the ambient pattern."""
    out = []
    for base in enumerate_graphs(n, tuple(palette)):
        for u in range(n):
            for v in range(u + 1, n):
                if not base.has_edge(u, v):
                    out.append(ic_generator(base, u, v))
    return out
