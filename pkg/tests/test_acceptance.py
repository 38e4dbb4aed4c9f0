"""Acceptance suite: one test per criterion, exact equality throughout.

Each test prints a single ``ACCEPTANCE n PASS/FAIL`` line (visible with
``pytest -s`` or on failure).  The corpus fixtures live in conftest.py:
every rotation system with <= 2 vertices and <= 4 edges under all twist
patterns, plus 500 seeded random graphs with <= 8 edges, plus 100 seeded
random plane graphs.
"""

import random
import time
from itertools import combinations

from helpers import random_graph
from ribbonpoly.cli import main
from ribbonpoly.oracle import (classical_tutte, maximal_spanning_forest_count,
                               spanning_forest_count, underlying)
from ribbonpoly.poly import (SparsePoly, T_VARS, XY_VARS, Z_VARS,
                             eval_tutte_exact, swap_st, tutte_to_xy)
from ribbonpoly.quasitree import (boundary_word, enumerate_quasi_trees,
                                  omega_canonical, quasi_tree_records,
                                  resolution_tree, z_quasi_tree)
from ribbonpoly.ribbon import RibbonGraph, catalog
from ribbonpoly.tutte import (br_state_sum, br_to_tutte, t_del_con, t_from_z,
                              t_state_sum, universal_closed_form,
                              universal_del_con, verify_coefficient_identities,
                              verify_convolution, verify_join, verify_tz,
                              z_del_con, z_state_sum)


def _report(n: int, description: str):
    class _Ctx:
        def __enter__(self):
            return self

        def __exit__(self, exc_type, exc, tb):
            verdict = "PASS" if exc_type is None else "FAIL"
            print(f"ACCEPTANCE {n} {verdict}: {description}")
            return False

    return _Ctx()


def zp(text):
    return SparsePoly.parse(text, Z_VARS)


def xyp(text):
    return SparsePoly.parse(text, XY_VARS)


def stp(text):
    return SparsePoly.parse(text, T_VARS)


def word(text):
    return tuple((tok.rstrip("'"), tok.endswith("'")) for tok in text.split())


FIG7_Z_TABLE = {
    frozenset(): "v^2",
    frozenset({"1"}): "u*v", frozenset({"2"}): "u*v",
    frozenset({"3"}): "u*v^3", frozenset({"4"}): "u*v^3",
    frozenset({"1", "2"}): "u^2*v^2",
    frozenset({"3", "4"}): "u^2*v^4",
    frozenset({"1", "3"}): "u^2*v^2", frozenset({"1", "4"}): "u^2*v^2",
    frozenset({"2", "3"}): "u^2*v^2", frozenset({"2", "4"}): "u^2*v^2",
    frozenset({"1", "2", "3"}): "u^3*v", frozenset({"1", "2", "4"}): "u^3*v",
    frozenset({"1", "3", "4"}): "u^3*v^3", frozenset({"2", "3", "4"}): "u^3*v^3",
    frozenset({"1", "2", "3", "4"}): "u^4*v^2",
}

# The rank-based contributions of the same subsets, as (s, t) exponents:
# s^2 stands for x-1 and t^2 for y-1.
FIG7_T_TABLE = {
    frozenset(): (4, 0),                                      # (x-1)^2
    frozenset({"1"}): (2, 0), frozenset({"2"}): (2, 0),       # (x-1)
    frozenset({"3"}): (4, 2), frozenset({"4"}): (4, 2),       # (x-1)^2 (y-1)
    frozenset({"1", "2"}): (2, 2),                            # (x-1)(y-1)
    frozenset({"3", "4"}): (4, 4),                            # (x-1)^2 (y-1)^2
    frozenset({"1", "3"}): (2, 2), frozenset({"1", "4"}): (2, 2),
    frozenset({"2", "3"}): (2, 2), frozenset({"2", "4"}): (2, 2),
    frozenset({"1", "2", "3"}): (0, 2), frozenset({"1", "2", "4"}): (0, 2),
    frozenset({"1", "3", "4"}): (2, 4), frozenset({"2", "3", "4"}): (2, 4),
    frozenset({"1", "2", "3", "4"}): (0, 4),                  # (y-1)^2
}


def test_criterion_1_golden_examples():
    with _report(1, "golden examples from the worked computations"):
        start = time.perf_counter()

        torus = catalog("torus_bouquet")
        assert z_state_sum(torus) == zp("v + 2*u*v^2 + u^2*v")
        assert tutte_to_xy(t_state_sum(torus)) == xyp("2*x*y - x - y")

        rp2 = catalog("rp2_cycle")
        assert z_state_sum(rp2) == zp("v^2 + 2*u*v + u^2*v")
        assert t_state_sum(rp2) == stp("s^3 + 2*s + t")
        assert t_state_sum(rp2).pretty_st() == \
            "(x-1)^(3/2) + 2*(x-1)^(1/2) + (y-1)^(1/2)"

        fig7 = catalog("fig7")
        for subset, monomial in FIG7_Z_TABLE.items():
            st = fig7.stats(subset)
            contribution = SparsePoly(Z_VARS, {(st.e, st.b): 1})
            assert contribution == zp(monomial), (sorted(subset), st.b)
        tr_full = fig7.stats().twice_rho
        for subset, (s_exp, t_exp) in FIG7_T_TABLE.items():
            st = fig7.stats(subset)
            assert (tr_full - st.twice_rho, 2 * st.e - st.twice_rho) == \
                (s_exp, t_exp), sorted(subset)
        assert tutte_to_xy(t_state_sum(fig7)) == xyp("x^2*y^2 + x*y - x - y")
        full = fig7.stats()
        assert fig7.b() == 2 and fig7.b({"3", "4"}) == 4
        assert full.gamma == 2 and full.genus == 1

        fig12 = catalog("fig12")
        z12 = zp("u^3*v + 2*u^2*v^2 + u*v^3 + u^2*v + 2*u*v + v^2")
        assert z_state_sum(fig12) == z12
        assert z_del_con(fig12) == z12
        assert z_quasi_tree(fig12) == z12
        assert enumerate_quasi_trees(fig12) == [
            frozenset({"1"}), frozenset({"3"}),
            frozenset({"1", "3"}), frozenset({"1", "2", "3"})]
        goldens = {
            frozenset({"1"}): word("1 2 3' 2 1 3'"),
            frozenset({"3"}): word("1' 3 2 1' 2 3"),
            frozenset({"1", "3"}): word("1' 2' 3' 1' 2' 3'"),
            frozenset({"1", "2", "3"}): word("1 2' 1 3 2' 3"),
        }
        for subset, expected in goldens.items():
            assert boundary_word(fig12, subset) == omega_canonical(expected)
        u = SparsePoly.variable(Z_VARS, "u")
        v = SparsePoly.variable(Z_VARS, "v")
        one = SparsePoly.constant(Z_VARS, 1)
        expected_contribs = {
            frozenset({"1"}): (u + v) * (one + u * v),  # u(1+v/u)(1+uv)
            frozenset({"3"}): u,
            frozenset({"1", "3"}): u ** 2,
            frozenset({"1", "2", "3"}): u ** 2 * (u + v),  # u^3(1+v/u)
        }
        for rec in quasi_tree_records(fig12):
            assert rec.contribution == expected_contribs[rec.edges]

        assert time.perf_counter() - start < 4 * 1.0  # under a second per example


def test_criterion_2_cross_algorithm_agreement(small_corpus, random_corpus_500):
    with _report(2, "four T routes and two Z routes agree on the corpus (<= 60 s)"):
        start = time.perf_counter()
        for g in small_corpus + random_corpus_500:
            t_ref = t_state_sum(g)
            assert t_from_z(g) == t_ref
            assert t_del_con(g) == t_ref
            assert br_to_tutte(br_state_sum(g), g.stats().gamma) == t_ref
            assert z_del_con(g) == z_state_sum(g)
        elapsed = time.perf_counter() - start
        assert elapsed <= 60.0, f"runtime budget exceeded: {elapsed:.1f}s"


def test_criterion_3_identity_battery(small_corpus, random_corpus_500):
    with _report(3, "duality, join, Z-T, universality, convolution, coefficient sums"):
        rng = random.Random(2718)
        partner = catalog("rp2_cycle").relabel({"a": "pa", "b": "pb"})
        for g in small_corpus + random_corpus_500:
            t_ref = t_state_sum(g)
            assert t_state_sum(g.dual()) == swap_st(t_ref)
            assert verify_tz(g)[0].passed
            orientable = g.stats().orientable
            if g.num_edges <= 6:
                assert universal_del_con(g) == universal_closed_form(g, t_ref)
            if orientable and g.num_edges <= 7:
                assert verify_convolution(g)[0].passed
            if orientable:
                assert all(r.passed for r in verify_coefficient_identities(g))
        # join and disjoint-union laws, spot-checked across the corpus
        pool = small_corpus[::17] + random_corpus_500[::29]
        for g in pool:
            if g.num_vertices == 0 or g.num_edges > 6:
                continue
            v1 = rng.randrange(g.num_vertices)
            pos1 = rng.randint(0, len(g.vertices[v1]))
            assert all(r.passed for r in verify_join(g, partner, v1, pos1, 0, 0))


def test_criterion_4_evaluations(small_corpus, random_corpus_500):
    with _report(4, "exact point evaluations match independent counts"):
        for g in small_corpus + random_corpus_500:
            t = t_state_sum(g)
            assert eval_tutte_exact(t, 2, 2) == 2 ** g.num_edges
            assert eval_tutte_exact(t, 2, 1) == spanning_forest_count(underlying(g))
            assert eval_tutte_exact(t, 1, 2) == \
                spanning_forest_count(underlying(g.dual()))
            t11 = eval_tutte_exact(t, 1, 1)
            st = g.stats()
            if st.gamma == 0:
                assert t11 == maximal_spanning_forest_count(underlying(g))
            else:
                assert t11 == 0
            t00 = eval_tutte_exact(t, 0, 0)
            assert t00 in (0, 1)
            assert (t00 == 1) == (g.num_edges == 0)


def test_criterion_5_plane_coincidence(plane_corpus_100):
    with _report(5, "plane graphs: T equals the classical Tutte polynomial"):
        assert len(plane_corpus_100) == 100
        for g in plane_corpus_100:
            st = g.stats()
            assert st.gamma == 0 and st.orientable
            assert tutte_to_xy(t_state_sum(g)) == classical_tutte(underlying(g))


def test_criterion_6_structural_invariants(small_corpus, random_corpus_500):
    with _report(6, "Euler everywhere; minor commutation; dual identities"):
        rng = random.Random(314)
        # Euler's formula for every (graph, subset) pair; the SubsetStats
        # constructor asserts it on every construction as well.
        for g in small_corpus:
            labels = g.edge_labels()
            for k in range(len(labels) + 1):
                for combo in combinations(labels, k):
                    st = g.stats(set(combo))
                    assert st.v - st.e + st.b == 2 * st.k - st.gamma
        for g in small_corpus + random_corpus_500:
            labels = g.edge_labels()
            # dual is an involution on canonical forms
            assert g.dual().dual() == g
            # contraction through the dual
            for lab in labels:
                assert g.contract(lab).dual() == g.dual().delete(lab)
            # deletion/contraction commutation on edge pairs
            pairs = list(combinations(labels, 2))
            if len(pairs) > 3:
                pairs = rng.sample(pairs, 3)
            for e, f in pairs:
                assert g.delete(e).delete(f) == g.delete(f).delete(e)
                assert g.contract(e).contract(f) == g.contract(f).contract(e)
                assert g.delete(e).contract(f) == g.contract(f).delete(e)


def test_criterion_7_performance_and_partitioning():
    with _report(7, "14-edge state sum under 10 s; partitioned runs identical"):
        rng = random.Random(99)
        g = random_graph(rng, max_edges=14, max_vertices=4)
        while g.num_edges != 14:
            g = random_graph(rng, max_edges=14, max_vertices=4)
        start = time.perf_counter()
        z_single = z_state_sum(g, jobs=1)
        elapsed = time.perf_counter() - start
        assert elapsed <= 10.0, f"14-edge state sum took {elapsed:.1f}s"
        for jobs in (2, 4, 7):
            z_par = z_state_sum(g, jobs=jobs)
            assert z_par == z_single
            assert str(z_par) == str(z_single)
            assert z_par.to_json() == z_single.to_json()


def test_cli_verify_battery_on_catalog():
    """The CLI verification battery passes on every catalog entry."""
    for name in ("torus_bouquet", "rp2_cycle", "fig7", "fig12", "edgeless_3"):
        assert main(["verify", f"catalog:{name}"]) == 0
