"""Products, coproducts, and primitive subspaces."""
from fractions import Fraction

import pytest

from framedgraphs.bialgebra import (
    C,
    JR,
    JR_CONTEXT,
    RED_CONTEXT,
    apply_counit_left,
    apply_counit_right,
    coproduct,
    counit,
    graded_dimension,
    is_primitive,
    primitive_dimension,
    product,
    reduced_coproduct,
    swap_legs,
    tensor_product,
)
from framedgraphs.graphs import (
    BLACK,
    EMPTY,
    Graph,
    RED,
    canonical_form,
    single_vertex,
)
from framedgraphs.linalg import LinComb


def unit_of(g):
    return LinComb.unit(canonical_form(g))


def tensor(x, y):
    """Build the simple tensor x (x) y with pair keys."""
    return LinComb(
        {(g, h): cx * cy for g, cx in x.terms.items() for h, cy in y.terms.items()}
    )


def three_leg(x, y, z):
    return LinComb(
        {
            (g, h, k): cx * cy * cz
            for g, cx in x.terms.items()
            for h, cy in y.terms.items()
            for k, cz in z.terms.items()
        }
    )


V0 = unit_of(single_vertex(0))
V1 = unit_of(single_vertex(1))
K2_BLACK = unit_of(Graph.make(2, (0, 0), [(0, 1, BLACK)]))
K2_RED = unit_of(Graph.make(2, (0, 0), [(0, 1, RED)]))
ONE = unit_of(EMPTY)


class TestProduct:
    def test_disjoint_union_example(self):
        vv = product(V0, V0)
        expected = unit_of(Graph.make(2, (0, 0), []))
        assert vv.terms == expected.terms

    def test_commutative(self):
        assert product(V0, K2_RED).terms == product(K2_RED, V0).terms

    def test_unit(self):
        assert product(ONE, K2_BLACK).terms == K2_BLACK.terms


class TestCoproduct:
    def test_black_k2_all_bipartitions(self):
        d = coproduct(K2_BLACK, JR)
        expected = (
            tensor(K2_BLACK, ONE)
            + tensor(V0, V0).scale(2)
            + tensor(ONE, K2_BLACK)
        )
        assert d.terms == expected.terms

    def test_red_edge_blocks_the_cut(self):
        d = coproduct(K2_RED, C)
        expected = tensor(K2_RED, ONE) + tensor(ONE, K2_RED)
        assert d.terms == expected.terms

    def test_jr_rule_cuts_red_edges_too(self):
        d = coproduct(K2_RED, JR)
        expected = (
            tensor(K2_RED, ONE) + tensor(V0, V0).scale(2) + tensor(ONE, K2_RED)
        )
        assert d.terms == expected.terms

    @pytest.mark.parametrize("rule", [JR, C])
    def test_coassociative(self, rule):
        x = unit_of(Graph.make(3, (0, 1, 0), [(0, 1, RED), (1, 2, BLACK)]))
        d = coproduct(x, rule)
        left = LinComb()
        right = LinComb()
        for (a, b), c in d.terms.items():
            for (a1, a2), ca in coproduct(LinComb.unit(a), rule).terms.items():
                left = left + three_leg(
                    LinComb.unit(a1), LinComb.unit(a2), LinComb.unit(b)
                ).scale(c * ca)
            for (b1, b2), cb in coproduct(LinComb.unit(b), rule).terms.items():
                right = right + three_leg(
                    LinComb.unit(a), LinComb.unit(b1), LinComb.unit(b2)
                ).scale(c * cb)
        assert left.terms == right.terms

    @pytest.mark.parametrize("rule", [JR, C])
    def test_counit_axiom(self, rule):
        x = unit_of(Graph.make(2, (1, 0), [(0, 1, RED)]))
        d = coproduct(x, rule)
        assert apply_counit_left(d).terms == x.terms
        assert apply_counit_right(d).terms == x.terms

    @pytest.mark.parametrize("rule", [JR, C])
    def test_cocommutative(self, rule):
        x = unit_of(Graph.make(3, (0, 0, 1), [(0, 1, BLACK), (1, 2, RED)]))
        d = coproduct(x, rule)
        assert swap_legs(d).terms == d.terms

    @pytest.mark.parametrize("rule", [JR, C])
    def test_multiplicative(self, rule):
        x, y = K2_RED, V1
        lhs = coproduct(product(x, y), rule)
        rhs = tensor_product(coproduct(x, rule), coproduct(y, rule))
        assert lhs.terms == rhs.terms

    def test_counit(self):
        assert counit(ONE) == Fraction(1)
        assert counit(V0) == Fraction(0)
        assert counit(ONE.scale(3) + V1) == Fraction(3)


class TestPrimitives:
    def test_single_vertices_are_primitive(self):
        for rule, ctx in ((JR, JR_CONTEXT), (C, RED_CONTEXT)):
            assert is_primitive(V0, rule, ctx)
            assert is_primitive(V1, rule, ctx)

    def test_reduced_coproduct_of_primitive_is_zero(self):
        x = K2_BLACK - product(V0, V0)
        assert reduced_coproduct(x, JR).is_zero()

    def test_product_is_not_primitive(self):
        assert not reduced_coproduct(product(V0, V0), JR).is_zero()

    def test_primitive_dimensions_jr(self):
        # primitives of the classical bialgebra in each grading
        assert [primitive_dimension(n, JR_CONTEXT) for n in range(5)] == [
            0, 2, 3, 10, 50,
        ]

    def test_primitive_dimensions_red(self):
        # the red coproduct has the same primitive dimensions
        assert [primitive_dimension(n, RED_CONTEXT) for n in range(5)] == [
            0, 2, 3, 10, 50,
        ]

    def test_graded_dimension(self):
        assert [graded_dimension(n, RED_CONTEXT) for n in range(5)] == [
            1, 2, 6, 20, 90,
        ]
