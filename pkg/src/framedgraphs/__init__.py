"""Framed colored graph bialgebra calculus with exact arithmetic."""

from .graphs import (
    BLACK,
    COLORS,
    EMPTY,
    Graph,
    RED,
    add_leaf,
    canonical_form,
    connected_components,
    disjoint_union,
    enumerate_graphs,
    euler_characteristic,
    full_subgraph,
    is_connected,
    is_tree,
    join_at_components,
    nabla,
    single_vertex,
    spanning_subgraphs,
)
from .linalg import LinComb, SpanBasis, intersect
from .bialgebra import (
    BialgebraContext,
    C,
    JR,
    JR_CONTEXT,
    RED_CONTEXT,
    coproduct,
    coproduct_graph,
    counit,
    graded_dimension,
    is_primitive,
    primitive_basis,
    primitive_dimension,
    product,
    reduced_coproduct,
    symmetric_algebra_dims,
)
from .reduction import (
    ic_generator,
    ic_generators,
    iota,
    pi_c,
    pi_jr,
    pi_jr_composition,
    pi_jr_formula,
    psi,
    red_normal_form,
)
from .fourterm import (
    connected_relation_basis,
    dim_lando,
    dim_lando_black,
    dim_primitive_N,
    fc_span,
    forest_checks,
    fourterm_jr,
    fourterm_red,
    leaf_identity_check,
    n_context,
    primitive_basis_N,
    sub_bialgebra_dims,
    tree_action,
    trees,
)
from .invariants import (
    ChromaticPoly,
    count_proper_colorings,
    framed_chromatic,
    framed_chromatic_graph,
    verify_vanishing,
    w_invariant,
    w_invariant_graph,
)

__version__ = "0.1.0"
