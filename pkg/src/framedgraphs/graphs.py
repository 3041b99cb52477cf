"""Framed, edge-colored simple graphs up to isomorphism.

A graph here is a finite simple graph with a framing in F2 = {0, 1} on
every vertex and a color (black or red) on every edge.  Everything is
immutable; isomorphism classes are represented by canonically relabeled
graphs, which double as basis keys for the linear algebra layer.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache

BLACK = "b"
RED = "r"
COLORS = (BLACK, RED)

_COLOR_CODE = {BLACK: 1, RED: 2}


def _norm_edge(i, j, color):
    if i == j:
        raise ValueError("self-loop at vertex %d" % i)
    if color not in COLORS:
        raise ValueError("bad edge color %r" % (color,))
    if i > j:
        i, j = j, i
    return (i, j, color)


@dataclass(frozen=True)
class Graph:
    """Simple graph with per-vertex F2 framing and black/red edge colors."""

    n: int
    framing: tuple
    edges: frozenset

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        if len(self.framing) != self.n:
            raise ValueError("framing length != vertex count")
        if any(f not in (0, 1) for f in self.framing):
            raise ValueError("framing values must be 0 or 1")
        seen = set()
        for (i, j, color) in self.edges:
            if not (0 <= i < j < self.n):
                raise ValueError("bad edge endpoints (%r, %r)" % (i, j))
            if color not in COLORS:
                raise ValueError("bad edge color %r" % (color,))
            if (i, j) in seen:
                raise ValueError("multi-edge at (%d, %d)" % (i, j))
            seen.add((i, j))

    @classmethod
    def make(cls, n, framing, edges=()):
        """Build a graph, normalizing edge endpoint order."""
        return cls(n, tuple(framing), frozenset(_norm_edge(*e) for e in edges))

    # -- structure ---------------------------------------------------------

    def edge_color(self, i, j):
        if i > j:
            i, j = j, i
        for color in COLORS:
            if (i, j, color) in self.edges:
                return color
        return None

    def has_edge(self, i, j):
        return self.edge_color(i, j) is not None

    @property
    def edge_count(self):
        return len(self.edges)

    def is_red_only(self):
        return all(c == RED for (_, _, c) in self.edges)

    def is_all_black(self):
        return all(c == BLACK for (_, _, c) in self.edges)

    def red_edges(self):
        return [(i, j) for (i, j, c) in sorted(self.edges) if c == RED]

    def black_edges(self):
        return [(i, j) for (i, j, c) in sorted(self.edges) if c == BLACK]

    # -- ordering / serialization ------------------------------------------

    def encoding(self):
        """Deterministic byte encoding; total order on graphs is (n, bytes)."""
        out = bytearray([self.n])
        out.extend(self.framing)
        for (i, j, c) in sorted(self.edges):
            out.extend((i, j, _COLOR_CODE[c]))
        return bytes(out)

    def sort_key(self):
        return (self.n, self.encoding())

    def to_json_dict(self):
        return {
            "n": self.n,
            "framing": list(self.framing),
            "edges": [[i, j, c] for (i, j, c) in sorted(self.edges)],
        }

    @classmethod
    def from_json_dict(cls, d):
        return cls.make(d["n"], d["framing"], [tuple(e) for e in d["edges"]])

    def to_json(self):
        return json.dumps(self.to_json_dict())

    @classmethod
    def from_json(cls, s):
        return cls.from_json_dict(json.loads(s))

    def __repr__(self):
        return "Graph(%d, %r, %r)" % (self.n, self.framing, sorted(self.edges))


EMPTY = Graph.make(0, ())


def single_vertex(framing):
    return Graph.make(1, (framing,))


@lru_cache(maxsize=None)
def adjacency(g):
    """adjacency(g)[v] is a dict neighbor -> edge color."""
    adj = tuple({} for _ in range(g.n))
    for (i, j, c) in g.edges:
        adj[i][j] = c
        adj[j][i] = c
    return adj


# -- canonical form ---------------------------------------------------------


def _refinement_colors(g):
    """Stable 1-WL colors, with framing as the initial vertex color and the
    edge color entering each neighbor signature.  The integer colors are
    isomorphism-invariant because signatures are sorted before numbering."""
    adj = adjacency(g)
    colors = list(g.framing)
    while True:
        sigs = [
            (colors[v], tuple(sorted((adj[v][u], colors[u]) for u in adj[v])))
            for v in range(g.n)
        ]
        renum = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = [renum[s] for s in sigs]
        # Refinement only ever splits cells, so an unchanged cell count
        # means the partition is stable; the int colors are then final.
        if len(set(new)) == len(set(colors)) and _partition(new) == _partition(colors):
            return new
        colors = new


def _partition(colors):
    cells = {}
    for v, c in enumerate(colors):
        cells.setdefault(c, []).append(v)
    return [tuple(cells[c]) for c in sorted(cells)]


def _relabel(g, position):
    """position[v] = new label of vertex v."""
    framing = [0] * g.n
    for v, p in enumerate(position):
        framing[p] = g.framing[v]
    edges = frozenset(
        _norm_edge(position[i], position[j], c) for (i, j, c) in g.edges
    )
    return Graph(g.n, tuple(framing), edges)


def permute_graph(g, perm):
    """Relabel g by the permutation perm (perm[v] = new label)."""
    return _relabel(g, list(perm))


@lru_cache(maxsize=None)
def canonical_form(g):
    """Canonical representative of the isomorphism class of g.

    Minimizes the byte encoding over all relabelings compatible with the
    color-refinement partition; within each refinement cell all orders are
    tried, so this is exact (if slow for very symmetric graphs).
    """
    if g.n <= 1:
        return g
    colors = _refinement_colors(g)
    cells = _partition(colors)
    best = None
    best_graph = None
    for arrangement in itertools.product(
        *(itertools.permutations(cell) for cell in cells)
    ):
        position = [0] * g.n
        pos = 0
        for cell in arrangement:
            for v in cell:
                position[v] = pos
                pos += 1
        cand = _relabel(g, position)
        enc = cand.encoding()
        if best is None or enc < best:
            best = enc
            best_graph = cand
    return best_graph


# -- enumeration ------------------------------------------------------------


@lru_cache(maxsize=None)
def enumerate_graphs(n, palette=COLORS, connected_only=False):
    """All isomorphism classes on exactly n vertices with edge colors from
    the palette, as canonical graphs sorted by key order.

    Classes at n are generated by attaching one new vertex (both framings,
    every connection pattern) to every class at n - 1 and deduplicating.
    """
    palette = tuple(palette)
    if n < 0:
        raise ValueError("negative n")
    if n == 0:
        base = [EMPTY]
    else:
        prev = enumerate_graphs(n - 1, palette, False)
        seen = set()
        options = (None,) + palette
        for g in prev:
            for pattern in itertools.product(options, repeat=g.n):
                extra = [
                    (v, g.n, c) for v, c in enumerate(pattern) if c is not None
                ]
                for fr in (0, 1):
                    h = Graph.make(
                        n, g.framing + (fr,), list(g.edges) + extra
                    )
                    seen.add(canonical_form(h))
        base = sorted(seen, key=Graph.sort_key)
    if connected_only:
        base = [g for g in base if is_connected(g)]
    return tuple(base)


# -- components, subgraphs ---------------------------------------------------


def component_vertex_sets(g):
    """Vertex sets of the connected components, each sorted, in order of
    smallest member."""
    adj = adjacency(g)
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in adj[v]:
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        comps.append(sorted(comp))
    return comps


def connected_components(g):
    return [full_subgraph(g, comp) for comp in component_vertex_sets(g)]


def is_connected(g):
    return g.n >= 1 and len(component_vertex_sets(g)) == 1


def is_tree(g):
    return is_connected(g) and g.edge_count == g.n - 1


def euler_characteristic(g):
    return g.n - g.edge_count


def full_subgraph(g, vertices):
    """Induced subgraph on the given vertices, relabeled in sorted order."""
    vs = sorted(set(vertices))
    if any(v < 0 or v >= g.n for v in vs):
        raise ValueError("vertex out of range")
    index = {v: i for i, v in enumerate(vs)}
    edges = [
        (index[i], index[j], c)
        for (i, j, c) in g.edges
        if i in index and j in index
    ]
    return Graph.make(len(vs), [g.framing[v] for v in vs], edges)


def spanning_subgraphs(g):
    """All 2^|E| subgraphs on the full vertex set of g."""
    edges = sorted(g.edges)
    for r in range(len(edges) + 1):
        for subset in itertools.combinations(edges, r):
            yield Graph.make(g.n, g.framing, subset)


# -- structural edits ---------------------------------------------------------


def disjoint_union(g, h):
    edges = list(g.edges) + [(i + g.n, j + g.n, c) for (i, j, c) in h.edges]
    return Graph.make(g.n + h.n, g.framing + h.framing, edges)


def add_leaf(g, w, framing, color=RED):
    """New vertex of the given framing joined to w."""
    if not (0 <= w < g.n):
        raise ValueError("vertex out of range")
    return Graph.make(
        g.n + 1, g.framing + (framing,), list(g.edges) + [(w, g.n, color)]
    )


def nabla(g, u, h, v, merged_framing=None):
    """Glue g and h by identifying vertex u of g with vertex v of h.

    By default the two framings must agree and the merged vertex keeps the
    common value; pass merged_framing to override (e.g. with the F2 sum).
    """
    if not (0 <= u < g.n) or not (0 <= v < h.n):
        raise ValueError("vertex out of range")
    if merged_framing is None:
        if g.framing[u] != h.framing[v]:
            raise ValueError(
                "framings differ at the glued vertex; pass merged_framing"
            )
        merged_framing = g.framing[u]
    # h's vertices map to g.n .. g.n + h.n - 2, with v mapping onto u.
    hmap = {}
    pos = g.n
    for x in range(h.n):
        if x == v:
            hmap[x] = u
        else:
            hmap[x] = pos
            pos += 1
    framing = list(g.framing) + [h.framing[x] for x in range(h.n) if x != v]
    framing[u] = merged_framing
    edges = {(i, j): c for (i, j, c) in g.edges}
    for (i, j, c) in h.edges:
        a, b = hmap[i], hmap[j]
        if a > b:
            a, b = b, a
        edges[(a, b)] = c
    return Graph.make(g.n + h.n - 1, framing, [(i, j, c) for (i, j), c in edges.items()])


def join_at_components(g):
    """Join of the connected components of g: every cross-component vertex
    pair gets a red edge."""
    comps = component_vertex_sets(g)
    comp_of = {}
    for k, comp in enumerate(comps):
        for v in comp:
            comp_of[v] = k
    edges = list(g.edges)
    for i in range(g.n):
        for j in range(i + 1, g.n):
            if comp_of[i] != comp_of[j]:
                edges.append((i, j, RED))
    return Graph.make(g.n, g.framing, edges)


def random_graph(rng, n, palette=COLORS):
    """Uniform-ish random labeled graph, for property tests."""
    framing = tuple(rng.randint(0, 1) for _ in range(n))
    edges = []
    options = (None,) + tuple(palette)
    for i in range(n):
        for j in range(i + 1, n):
            c = rng.choice(options)
            if c is not None:
                edges.append((i, j, c))
    return Graph.make(n, framing, edges)
