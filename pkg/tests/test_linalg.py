"""Exact linear algebra over the rationals."""
import random
from fractions import Fraction

from hypothesis import given, settings, strategies as st

from framedgraphs.graphs import RED, enumerate_graphs, random_graph
from framedgraphs.linalg import (
    LinComb,
    SpanBasis,
    dense_rank,
    intersect,
    matrix_nullspace,
    nullspace_of_map,
)

KEYS = tuple(enumerate_graphs(2, (RED,)))


def random_comb(rng, keys=KEYS):
    return LinComb(
        {k: Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for k in keys}
    )


small_fractions = st.builds(
    Fraction, st.integers(-6, 6), st.integers(1, 4)
)
combs = st.builds(
    lambda cs: LinComb(dict(zip(KEYS, cs))),
    st.lists(small_fractions, min_size=len(KEYS), max_size=len(KEYS)),
)


class TestLinComb:
    @settings(max_examples=50, deadline=None)
    @given(combs, combs)
    def test_addition_commutes(self, a, b):
        assert (a + b).terms == (b + a).terms

    @settings(max_examples=50, deadline=None)
    @given(combs)
    def test_subtraction_gives_zero(self, a):
        assert (a - a).is_zero()

    @settings(max_examples=50, deadline=None)
    @given(combs, small_fractions, small_fractions)
    def test_scaling_distributes(self, a, c, d):
        assert a.scale(c + d).terms == (a.scale(c) + a.scale(d)).terms

    def test_zero_coefficients_dropped(self):
        a = LinComb({KEYS[0]: Fraction(1)})
        assert (a - a).terms == {}
        assert a.coeff(KEYS[1]) == 0

    def test_json_round_trip(self):
        a = LinComb({KEYS[0]: Fraction(-3, 2), KEYS[2]: Fraction(5)})
        assert LinComb.from_json_list(a.to_json_list()).terms == a.terms


class TestSpanBasis:
    def test_insert_idempotent(self):
        rng = random.Random(7)
        basis = SpanBasis()
        rows = [random_comb(rng) for _ in range(4)]
        for r in rows:
            basis.insert(r)
        rank = basis.rank
        for r in rows:
            basis.insert(r)
        assert basis.rank == rank

    def test_rank_order_independent(self):
        rng = random.Random(3)
        rows = [random_comb(rng) for _ in range(5)]
        ranks = set()
        pivot_sets = set()
        for seed in range(6):
            shuffled = rows[:]
            random.Random(seed).shuffle(shuffled)
            b = SpanBasis()
            for r in shuffled:
                b.insert(r)
            ranks.add(b.rank)
            pivot_sets.add(tuple(sorted(map(repr, b.pivot_keys()))))
        assert len(ranks) == 1
        assert len(pivot_sets) == 1

    def test_rank_matches_dense_oracle(self):
        rng = random.Random(11)
        rows = [random_comb(rng) for _ in range(8)]
        b = SpanBasis()
        for r in rows:
            b.insert(r)
        dense = [[r.coeff(k) for k in KEYS] for r in rows]
        assert b.rank == dense_rank(dense)

    def test_reduce_is_linear(self):
        rng = random.Random(5)
        b = SpanBasis()
        for _ in range(3):
            b.insert(random_comb(rng))
        x, y = random_comb(rng), random_comb(rng)
        lhs = b.reduce(x + y)
        rhs = b.reduce(x) + b.reduce(y)
        assert lhs.terms == rhs.terms

    def test_contains(self):
        b = SpanBasis()
        x = LinComb({KEYS[0]: Fraction(1), KEYS[1]: Fraction(2)})
        b.insert(x)
        assert b.contains(x.scale(Fraction(7, 3)))
        assert not b.contains(LinComb({KEYS[0]: Fraction(1)}))


class TestKernelsAndIntersections:
    def test_nullspace_of_map(self):
        image = LinComb({KEYS[0]: Fraction(1), KEYS[1]: Fraction(1)})
        # two inputs with proportional images: one-dimensional kernel
        kernel = nullspace_of_map(
            [LinComb.unit(KEYS[0]), LinComb.unit(KEYS[1])],
            [image, image.scale(2)],
            KEYS,
        )
        assert len(kernel) == 1

    def test_matrix_nullspace(self):
        one, two = Fraction(1), Fraction(2)
        assert matrix_nullspace([[one, 0], [0, one]]) == []
        kernel = matrix_nullspace([[one, two]])
        assert len(kernel) == 1
        x, y = kernel[0]
        assert x + 2 * y == 0

    def test_intersect_coordinate_subspace(self):
        a = SpanBasis()
        a.insert(LinComb({KEYS[0]: Fraction(1), KEYS[1]: Fraction(1)}))
        a.insert(LinComb({KEYS[2]: Fraction(1)}))
        coord = SpanBasis()
        coord.insert(LinComb.unit(KEYS[2]))
        coord.insert(LinComb.unit(KEYS[3]))
        both = intersect(a, coord, KEYS)
        assert both.rank == 1
        assert both.contains(LinComb.unit(KEYS[2]))

    def test_intersect_generic(self):
        a = SpanBasis()
        a.insert(LinComb({KEYS[0]: Fraction(1), KEYS[1]: Fraction(1)}))
        b = SpanBasis()
        b.insert(LinComb({KEYS[0]: Fraction(2), KEYS[1]: Fraction(2)}))
        b.insert(LinComb({KEYS[2]: Fraction(1)}))
        both = intersect(a, b, KEYS)
        assert both.rank == 1
        assert both.contains(
            LinComb({KEYS[0]: Fraction(1), KEYS[1]: Fraction(1)})
        )
