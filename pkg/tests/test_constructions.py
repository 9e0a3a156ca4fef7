import pytest

from turanmatch import (
    ApplicabilityError,
    Clique,
    GraphLeaf,
    Independent,
    Turan,
    bipartite_clique_bounds,
    build_graph,
    build_named,
    clique,
    clique_vector,
    clique_vector_of_expr,
    contains,
    deletion_extremal,
    even_path_params,
    expr_clique_count,
    hub_expr,
    independent,
    join,
    matching_number,
    named_min_order,
    odd_path_params,
    path,
    union,
)

from conftest import brute_count_cliques, brute_isomorphic


class TestParams:
    def test_even_examples(self):
        assert (even_path_params(2, 3).a, even_path_params(2, 3).b) == (2, 0)
        assert (even_path_params(3, 5).a, even_path_params(3, 5).b) == (1, 1)
        assert (even_path_params(2, 2).a, even_path_params(2, 2).b) == (1, 0)

    def test_odd_examples(self):
        par = odd_path_params(2, 3)
        assert (par.q, par.t, par.c, par.d) == (2, 0, 1, 0)
        par = odd_path_params(2, 4)
        assert (par.q, par.t, par.c, par.d) == (3, 0, 1, 1)
        par = odd_path_params(3, 6)
        assert (par.q, par.t, par.c, par.d) == (2, 0, 1, 1)

    def test_invariants_hold_on_grid(self):
        for p in range(2, 6):
            for s in range(p, p + 8):
                ev = even_path_params(p, s)
                assert s - p + 1 == ev.a * (p - 1) + ev.b and 0 <= ev.b <= p - 2
                od = odd_path_params(p, s)
                assert od.t == s - (od.q + 1) * (p - 1)
                assert s - p + 1 == od.c * p + od.d and 0 <= od.d <= p - 1

    def test_rejects_bad_params(self):
        with pytest.raises(ApplicabilityError):
            even_path_params(1, 5)
        with pytest.raises(ApplicabilityError):
            odd_path_params(3, 2)


class TestNamedConstructions:
    def test_g1_example(self):
        expr = build_named("G1", p=3, s=5, n=20)
        g = build_graph(expr)
        assert g.n == 20
        assert expr_clique_count(expr, 3) == 23
        assert brute_count_cliques(g, 3) == 23

    def test_g2_example(self):
        expr = build_named("G2", p=3, s=5, n=20)
        g = build_graph(expr)
        assert g.n == 20
        assert expr_clique_count(expr, 3) == 21

    def test_g6_example(self):
        g = build_graph(build_named("G6", p=2, s=4, n=20))
        assert g.n == 20
        assert g.edge_count() == 22
        assert matching_number(g) == 4

    def test_all_named_have_n_vertices_and_bounded_matching(self):
        for p in (2, 3):
            for s in range(p, p + 4):
                for id in ("G1", "G2", "G3", "G4", "G5", "G6"):
                    try:
                        expr = build_named(id, p, s, 30)
                    except ApplicabilityError:
                        continue
                    g = build_graph(expr)
                    assert g.n == 30
                    assert matching_number(g) <= s

    def test_even_constructions_are_even_path_free(self):
        for p in (2, 3):
            for s in range(p, p + 4):
                for id in ("G1", "G2"):
                    g = build_graph(build_named(id, p, s, 30))
                    assert not contains(g, path(2 * p))

    def test_odd_constructions_are_odd_path_free(self):
        for p in (2, 3):
            for s in range(p, p + 4):
                for id in ("G3", "G4", "G5", "G6"):
                    try:
                        expr = build_named(id, p, s, 30)
                    except ApplicabilityError:
                        continue
                    g = build_graph(expr)
                    assert not contains(g, path(2 * p + 1))

    def test_min_order_is_a_hard_floor(self):
        floor = named_min_order("G1", 3, 5)
        build_named("G1", 3, 5, floor)
        with pytest.raises(ApplicabilityError):
            build_named("G1", 3, 5, floor - 1)

    def test_g5_applicability(self):
        with pytest.raises(ApplicabilityError):
            build_named("G5", 2, 3, 30)  # p=2 leaves no valid d


class TestHubExpr:
    def test_examples(self):
        d = build_graph(union(Clique(3), Independent(1)))
        assert expr_clique_count(hub_expr(d, 6), 3) == 19
        assert expr_clique_count(hub_expr(clique(2), 4), 3) == 4
        assert expr_clique_count(hub_expr(independent(0), 5), 3) == 0

    def test_matches_direct_count(self):
        d = build_graph(union(Clique(3), Clique(2)))
        expr = hub_expr(d, 5)
        g = build_graph(expr)
        for r in range(5):
            assert expr_clique_count(expr, r) == brute_count_cliques(g, r)


class TestCliqueVectorAlgebra:
    def test_join_convolution_example(self):
        vec = clique_vector_of_expr(join(Clique(3), Independent(2)), 3)
        assert vec.counts == (1, 5, 9, 7)

    def test_union_sum_example(self):
        vec = clique_vector_of_expr(union(Clique(3), Clique(3)), 3)
        assert vec.counts == (1, 6, 6, 2)

    def test_vandermonde_truncation(self):
        from math import comb

        for m in range(8):
            for k in range(5):
                for r in range(6):
                    got = expr_clique_count(join(Clique(m), Independent(k)), r)
                    assert got == comb(m, r) + comb(m, r - 1) * k if r >= 1 else got == 1

    def test_turan_leaf(self):
        vec = clique_vector_of_expr(Turan(3, 7), 3)
        g = build_graph(Turan(3, 7))
        assert vec.counts == tuple(brute_count_cliques(g, r) for r in range(4))

    def test_graph_leaf(self):
        d = path(4)
        vec = clique_vector_of_expr(GraphLeaf(d), 2)
        assert vec.counts == (1, 4, 3)

    def test_closed_form_equals_direct_on_named_sample(self):
        for id in ("G1", "G2", "G3", "G4", "G6"):
            try:
                expr = build_named(id, 2, 3, 14)
            except ApplicabilityError:
                continue
            g = build_graph(expr)
            rmax = 6
            assert clique_vector_of_expr(expr, rmax).counts == clique_vector(g, rmax).counts


class TestBipartiteBounds:
    def test_examples(self):
        assert bipartite_clique_bounds(2, 2, 2, 2, 100) == (99, 135)
        assert bipartite_clique_bounds(2, 2, 2, 3, 100) == (0, 120)

    def test_rejects_p1(self):
        with pytest.raises(ApplicabilityError):
            bipartite_clique_bounds(1, 3, 2, 2, 8)

    def test_lower_never_exceeds_upper(self):
        for p in (2, 3):
            for q in range(p, p + 3):
                for s in range(p, p + 3):
                    for r in (2, 3, 4):
                        for n in (8, 30, 200):
                            lower, upper = bipartite_clique_bounds(p, q, s, r, n)
                            assert lower <= upper


class TestDeletionExtremal:
    def test_star_family_hub(self):
        f = build_graph(join(GraphLeaf(path(4)), Independent(2)))
        best = deletion_extremal(4, 3, f)
        assert brute_isomorphic(best, build_graph(union(Clique(3), Independent(1))))

    def test_k4_small(self):
        assert brute_isomorphic(deletion_extremal(2, 3, clique(4)), clique(2))
        assert brute_isomorphic(deletion_extremal(3, 3, clique(4)), path(3))

    def test_cap(self):
        from turanmatch import SizeLimitError

        with pytest.raises(SizeLimitError):
            deletion_extremal(9, 3, clique(4))
