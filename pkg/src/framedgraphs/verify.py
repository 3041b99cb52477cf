"""Named verification suites, shared by the CLI and the test suite.

Each suite returns a report dict: {"suite", "max_n", "ok", "checks": [...],
"failures": [...]}.  Failures carry the offending graphs in the JSON
exchange format so they can be replayed standalone.
"""
from __future__ import annotations

import random
import time
from fractions import Fraction

from .graphs import (
    BLACK,
    COLORS,
    EMPTY,
    Graph,
    RED,
    add_leaf,
    canonical_form,
    enumerate_graphs,
    nabla,
    random_graph,
)
from .linalg import LinComb
from .bialgebra import (
    C,
    JR,
    JR_CONTEXT,
    RED_CONTEXT,
    apply_counit_left,
    coproduct_graph,
    primitive_dimension,
    product,
    reduced_coproduct,
    swap_legs,
    symmetric_algebra_dims,
    tensor_product,
)
from .reduction import (
    ic_generators,
    iota,
    pi_jr_composition,
    pi_jr_formula,
    psi,
)
from .fourterm import (
    dim_lando,
    dim_lando_black,
    dim_primitive_N,
    fc_span,
    forest_checks,
    leaf_identity_check,
    sub_bialgebra_dims,
    tree_action_choices,
    trees,
)
from .invariants import (
    framed_chromatic_graph,
    verify_vanishing,
    w_invariant_graph,
)


def _graph_dump(g):
    return g.to_json_dict()


_stamp = [time.time()]


def _check(name, ok, **extra):
    now = time.time()
    rec = {"name": name, "ok": bool(ok),
           "elapsed_s": round(now - _stamp[0], 3)}
    _stamp[0] = now
    rec.update(extra)
    return rec


def _report(suite, max_n, checks, failures=None):
    return {
        "suite": suite,
        "max_n": max_n,
        "ok": all(c["ok"] for c in checks),
        "checks": checks,
        "failures": failures or [],
    }


def suite_psi_iota(max_n, rng=None, samples=0):
    checks, failures = [], []
    for n in range(max_n + 1):
        bad = 0
        for g in enumerate_graphs(n, (BLACK,)):
            if psi(iota(LinComb.unit(g))) != LinComb.unit(g):
                bad += 1
                failures.append({"check": "psi_iota", "graph": _graph_dump(g)})
        checks.append(_check("psi_iota_identity_n%d" % n, bad == 0, bad=bad))
    return _report("psi-iota", max_n, checks, failures)


def suite_ic_annihilation(max_n, rng=None, samples=0):
    checks, failures = [], []
    for n in range(2, max_n + 1):
        bad = 0
        for gen in ic_generators(n):
            if not psi(gen).is_zero():
                bad += 1
                failures.append(
                    {"check": "psi_on_ic", "element": gen.to_json_list()}
                )
        checks.append(_check("psi_kills_ic_n%d" % n, bad == 0, bad=bad))
    return _report("ic-annihilation", max_n, checks, failures)


def suite_projection(max_n, rng=None, samples=100):
    rng = rng or random.Random(0)
    checks, failures = [], []
    for n in range(max_n + 1):
        agree = idem = prim = True
        for g in enumerate_graphs(n, (BLACK,)):
            x = LinComb.unit(g)
            p1 = pi_jr_formula(x)
            if p1 != pi_jr_composition(x):
                agree = False
                failures.append({"check": "formula_vs_composition",
                                 "graph": _graph_dump(g)})
            if pi_jr_formula(p1) != p1:
                idem = False
                failures.append({"check": "idempotence", "graph": _graph_dump(g)})
            if n >= 1 and not reduced_coproduct(p1, JR).is_zero():
                prim = False
                failures.append({"check": "image_primitive",
                                 "graph": _graph_dump(g)})
        checks.append(_check("formula_equals_composition_n%d" % n, agree))
        checks.append(_check("idempotent_n%d" % n, idem))
        checks.append(_check("image_primitive_n%d" % n, prim))
    # products of positive-grading elements die
    bad = 0
    for _ in range(samples):
        n1 = rng.randint(1, max(1, max_n - 1))
        n2 = rng.randint(1, max(1, max_n - n1))
        g = canonical_form(random_graph(rng, n1, (BLACK,)))
        h = canonical_form(random_graph(rng, n2, (BLACK,)))
        prod = product(LinComb.unit(g), LinComb.unit(h))
        if not pi_jr_formula(prod).is_zero():
            bad += 1
            failures.append({"check": "kills_products",
                             "graphs": [_graph_dump(g), _graph_dump(h)]})
    checks.append(_check("kills_products", bad == 0, samples=samples, bad=bad))
    return _report("projection", max_n, checks, failures)


def suite_fourterm_spans(max_n, rng=None, samples=0):
    checks = []
    for n in range(max_n + 1):
        r_red = fc_span(n, "red_form").rank
        r_jr = fc_span(n, "jr_image").rank
        r_both = fc_span(n, "both").rank
        checks.append(
            _check("rank_equality_n%d" % n, r_red == r_jr == r_both,
                   red_form=r_red, jr_image=r_jr, both=r_both)
        )
        checks.append(
            _check("black_basis_dim_agrees_n%d" % n,
                   dim_lando(n) == dim_lando_black(n),
                   red=dim_lando(n), black=dim_lando_black(n))
        )
    return _report("fourterm-spans", max_n, checks)


def suite_leaf_identity(max_n, rng=None, samples=0):
    rep = leaf_identity_check(max_n)
    failures = [
        {"graph": _graph_dump(g), "edge": [u, v]} for (g, u, v) in rep["failures"]
    ]
    checks = [_check("leaf_identity", rep["ok"], checked=rep["checked"])]
    return _report("leaf-identity", max_n, checks, failures)


def suite_forest(max_n, rng=None, samples=0):
    rows = forest_checks(max_n)
    checks = [
        _check("forest_k%d" % row["k"], row["ok"], **{
            "num_trees": row["num_trees"], "rank": row["rank"]})
        for row in rows
    ]
    # Choice-independence experiment: reported, not asserted.
    experiment = []
    for k in range(1, min(max_n, 3) + 1):
        for t in trees(k):
            for m in range(1, min(max_n, 3) + 1):
                for g in enumerate_graphs(m, (RED,), connected_only=True):
                    classes = tree_action_choices(t, g)
                    reduced = {
                        fc_span(classes[0].n).reduce(LinComb.unit(c)).signature()
                        for c in classes
                    }
                    experiment.append(
                        {"tree_n": k, "graph_n": m,
                         "distinct_classes_in_quotient": len(reduced)}
                    )
    agree = sum(1 for e in experiment if e["distinct_classes_in_quotient"] == 1)
    rep = _report("forest", max_n, checks)
    rep["attachment_choice_experiment"] = {
        "cases": len(experiment),
        "choice_independent_cases": agree,
    }
    return rep


def _coassoc_ok(g, rule):
    t = coproduct_graph(g, rule)
    left = LinComb()
    right = LinComb()
    for (x, y), cf in t.terms.items():
        for (a, b), cf2 in coproduct_graph(x, rule).terms.items():
            left = left + LinComb.unit((a, b, y), cf * cf2)
        for (a, b), cf2 in coproduct_graph(y, rule).terms.items():
            right = right + LinComb.unit((x, a, b), cf * cf2)
    return left == right


def suite_coassoc(max_n, rng=None, samples=100):
    rng = rng or random.Random(0)
    checks, failures = [], []
    full_n = min(max_n, 4)
    for rule, palette in ((JR, (BLACK,)), (C, COLORS)):
        bad_assoc = bad_counit = bad_cocomm = 0
        for n in range(full_n + 1):
            for g in enumerate_graphs(n, palette):
                if not _coassoc_ok(g, rule):
                    bad_assoc += 1
                    failures.append({"check": "coassoc", "rule": rule,
                                     "graph": _graph_dump(g)})
                t = coproduct_graph(g, rule)
                if apply_counit_left(t) != LinComb.unit(g):
                    bad_counit += 1
                    failures.append({"check": "counit", "rule": rule,
                                     "graph": _graph_dump(g)})
                if swap_legs(t) != t:
                    bad_cocomm += 1
                    failures.append({"check": "cocommutative", "rule": rule,
                                     "graph": _graph_dump(g)})
        for n in range(full_n + 1, max_n + 1):
            for _ in range(samples):
                g = canonical_form(random_graph(rng, n, palette))
                if not _coassoc_ok(g, rule):
                    bad_assoc += 1
                    failures.append({"check": "coassoc_sampled", "rule": rule,
                                     "graph": _graph_dump(g)})
        checks.append(_check("coassociative_%s" % rule, bad_assoc == 0))
        checks.append(_check("counit_%s" % rule, bad_counit == 0))
        checks.append(_check("cocommutative_%s" % rule, bad_cocomm == 0))
        # bialgebra axiom on sampled pairs
        bad_mult = 0
        for _ in range(samples):
            g = canonical_form(random_graph(rng, rng.randint(0, 3), palette))
            h = canonical_form(random_graph(rng, rng.randint(0, 3), palette))
            lhs = coproduct_graph(canonical_form(
                product(LinComb.unit(g), LinComb.unit(h)).support()[0]), rule)
            rhs = tensor_product(coproduct_graph(g, rule),
                                 coproduct_graph(h, rule))
            if lhs != rhs:
                bad_mult += 1
                failures.append({"check": "coproduct_multiplicative",
                                 "rule": rule,
                                 "graphs": [_graph_dump(g), _graph_dump(h)]})
        checks.append(_check("coproduct_multiplicative_%s" % rule, bad_mult == 0))
    return _report("coassoc", max_n, checks, failures)


def suite_vanishing_w(max_n, rng=None, samples=0):
    rep = verify_vanishing("w", max_n)
    failures = [
        {"form": f["form"], "element": f["generator"].to_json_list()}
        for f in rep["failures"]
    ]
    checks = [_check("w_vanishes_on_generators", rep["ok"], checked=rep["checked"])]
    return _report("vanishing-w", max_n, checks, failures)


def suite_vanishing_chrom(max_n, rng=None, samples=0):
    rep = verify_vanishing("chromatic", max_n)
    failures = [
        {"form": f["form"], "element": f["generator"].to_json_list()}
        for f in rep["failures"]
    ]
    checks = [_check("chromatic_vanishes_on_generators", rep["ok"],
                     checked=rep["checked"])]
    return _report("vanishing-chrom", max_n, checks, failures)


def suite_milnor_moore(max_n, rng=None, samples=0):
    checks = []
    pn = {k: dim_primitive_N(k) for k in range(1, max_n + 1)}
    expected = symmetric_algebra_dims(pn, max_n)
    actual = [dim_lando(k) for k in range(max_n + 1)]
    checks.append(_check("quotient_dims_match_symmetric_algebra",
                         actual == expected, actual=actual, expected=expected))
    pjr = {k: primitive_dimension(k, JR_CONTEXT) for k in range(1, max_n + 1)}
    conn = {k: len(enumerate_graphs(k, (RED,), connected_only=True))
            for k in range(1, max_n + 1)}
    checks.append(_check("jr_primitives_match_connected_red_classes",
                         pjr == conn, kernel=pjr, connected=conn))
    black = [len(enumerate_graphs(k, (BLACK,))) for k in range(max_n + 1)]
    checks.append(_check("jr_dims_match_symmetric_algebra",
                         black == symmetric_algebra_dims(pjr, max_n)))
    return _report("milnor-moore", max_n, checks)


def suite_direct_sum(max_n, rng=None, samples=0):
    checks = []
    for n in range(1, max_n + 1):
        pbl, pwl, pl = sub_bialgebra_dims(n)
        checks.append(_check("direct_sum_n%d" % n, pbl + pwl == pl,
                             pbl=pbl, pwl=pwl, pl=pl))
    return _report("direct-sum", max_n, checks)


SUITES = {
    "psi-iota": suite_psi_iota,
    "ic-annihilation": suite_ic_annihilation,
    "projection": suite_projection,
    "fourterm-spans": suite_fourterm_spans,
    "leaf-identity": suite_leaf_identity,
    "forest": suite_forest,
    "coassoc": suite_coassoc,
    "vanishing-w": suite_vanishing_w,
    "vanishing-chrom": suite_vanishing_chrom,
    "milnor-moore": suite_milnor_moore,
    "direct-sum": suite_direct_sum,
}


def run_suite(name, max_n, seed=0, samples=100):
    if name not in SUITES:
        raise KeyError("unknown suite %r" % (name,))
    rng = random.Random(seed)
    start = time.time()
    _stamp[0] = start
    report = SUITES[name](max_n, rng=rng, samples=samples)
    report["seed"] = seed
    report["elapsed_s"] = round(time.time() - start, 3)
    return report
