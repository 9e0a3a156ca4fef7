import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turanmatch import (
    Clique,
    Independent,
    SizeLimitError,
    build_graph,
    canonical_form,
    canonical_graph,
    chromatic_number,
    clique,
    clique_vector,
    contains,
    count_cliques,
    count_copies,
    cycle,
    from_edges,
    independent,
    independent_deletion_family,
    isomorphic,
    join,
    longest_path_order,
    min_color_class,
    bipartite_split,
    path,
    union,
)

from conftest import (
    all_graphs,
    brute_contains,
    brute_count_cliques,
    brute_isomorphic,
    brute_longest_path,
)


def k3_join_i2():
    return build_graph(join(Clique(3), Independent(2)))


class TestCliqueCounts:
    def test_examples(self):
        assert count_cliques(clique(5), 3) == 10
        assert count_cliques(independent(7), 2) == 0
        assert count_cliques(k3_join_i2(), 3) == 7

    def test_vectors(self):
        assert clique_vector(clique(3), 3).counts == (1, 3, 3, 1)
        assert clique_vector(build_graph(union(Clique(2), Clique(1))), 2).counts == (1, 3, 1)
        assert clique_vector(cycle(5), 3).counts == (1, 5, 5, 0)

    def test_binomial_identity(self):
        from math import comb

        for m in range(13):
            g = clique(m)
            for r in range(m + 1):
                assert count_cliques(g, r) == comb(m, r)

    def test_against_brute_force(self):
        for g in all_graphs(5):
            for r in range(5):
                assert count_cliques(g, r) == brute_count_cliques(g, r)

    def test_vector_entries_agree_with_counts(self):
        for g in all_graphs(5):
            vec = clique_vector(g, 6)
            assert vec.counts[0] == 1
            assert vec.counts[1] == g.n
            assert vec.counts[2] == g.edge_count()
            for r in range(7):
                assert vec[r] == count_cliques(g, r)


class TestContains:
    def test_examples(self):
        assert contains(clique(4), path(4))
        assert not contains(clique(3), path(4))
        assert contains(build_graph(join(Independent(2), Independent(3))), path(5))

    def test_agrees_with_copy_count(self):
        patterns = [path(3), path(4), clique(3), cycle(4), independent(2)]
        for g in all_graphs(5):
            for h in patterns:
                assert contains(g, h) == (count_copies(g, h) > 0)

    def test_agrees_with_copy_count_all_class_pairs(self):
        # every isomorphism class: hosts on <= 6 vertices, patterns on <= 5
        def classes(max_n):
            seen = {}
            for n in range(max_n + 1):
                for g in all_graphs(n):
                    form = canonical_form(g)
                    seen.setdefault((form.n, form.key), g)
            return list(seen.values())

        hosts = classes(6)
        patterns = classes(5)
        assert len(hosts) == 1 + 1 + 2 + 4 + 11 + 34 + 156
        assert len(patterns) == 1 + 1 + 2 + 4 + 11 + 34
        for g in hosts:
            for h in patterns:
                assert contains(g, h) == (count_copies(g, h) > 0)

    def test_brute_force_spot(self):
        hs = [path(4), clique(3), cycle(4)]
        for g in all_graphs(4):
            for h in hs:
                assert contains(g, h) == brute_contains(g, h)


class TestCountCopies:
    def test_examples(self):
        assert count_copies(clique(4), path(3)) == 12
        assert count_copies(clique(4), clique(2)) == 6
        assert count_copies(cycle(5), cycle(5)) == 1

    def test_edge_count_is_k2_copies(self):
        for g in all_graphs(5):
            assert count_copies(g, clique(2)) == g.edge_count()


class TestLongestPath:
    def test_examples(self):
        assert longest_path_order(clique(5)) == 5
        assert longest_path_order(build_graph(join(Independent(2), Independent(3)))) == 5
        assert longest_path_order(build_graph(join(Clique(1), Independent(6)))) == 3

    def test_brute_force(self):
        for g in all_graphs(5):
            assert longest_path_order(g) == brute_longest_path(g)

    def test_component_cap(self):
        with pytest.raises(SizeLimitError):
            longest_path_order(clique(25))

    def test_unions_use_components(self):
        g = build_graph(union(Clique(20), Clique(20)))  # 40 vertices, fine per component
        assert longest_path_order(g) == 20


class TestColourings:
    def test_chromatic_examples(self):
        from turanmatch import Path

        assert chromatic_number(cycle(5)) == 3
        assert chromatic_number(clique(4)) == 4
        assert chromatic_number(build_graph(join(Path(4), Independent(2)))) == 3

    def test_chromatic_join_rule(self):
        g = build_graph(join(Clique(3), Independent(4)))
        assert chromatic_number(g) == 4

    def test_min_color_class_examples(self):
        star = build_graph(join(Clique(1), Independent(3)))
        two_stars = build_graph(
            union(join(Clique(1), Independent(3)), join(Clique(1), Independent(3)))
        )
        assert min_color_class(path(4)) == 2
        assert min_color_class(star) == 1
        assert min_color_class(two_stars) == 2

    def test_split_exposes_q(self):
        assert bipartite_split(path(4)) == (2, 2)
        assert bipartite_split(build_graph(join(Clique(1), Independent(3)))) == (1, 3)

    def test_rejects_non_bipartite(self):
        with pytest.raises(ValueError):
            min_color_class(cycle(5))


class TestCanonicalForm:
    def test_path_relabels_equal(self):
        p = path(3)
        q = from_edges(3, [(0, 2), (2, 1)])
        assert canonical_form(p) == canonical_form(q)

    def test_distinguishes(self):
        assert canonical_form(clique(3)) != canonical_form(path(3))
        assert canonical_form(cycle(6)) != canonical_form(
            build_graph(union(Clique(3), Clique(3)))
        )

    @given(st.integers(min_value=1, max_value=6), st.randoms())
    @settings(max_examples=120, deadline=None)
    def test_permutation_invariant(self, n, rng):
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.5
        ]
        g = from_edges(n, edges)
        perm = list(range(n))
        rng.shuffle(perm)
        assert canonical_form(g) == canonical_form(g.relabel(perm))

    def test_matches_brute_force_isomorphism(self):
        reference = list(all_graphs(4))
        for g in reference:
            for h in reference:
                assert isomorphic(g, h) == brute_isomorphic(g, h)

    def test_twin_free_transitive_graph(self):
        # vertex-transitive and twin-free, the hard case for the pruning
        import random

        from conftest import petersen

        g = petersen()
        base = canonical_form(g)
        rng = random.Random(7)
        for _ in range(10):
            perm = list(range(10))
            rng.shuffle(perm)
            assert canonical_form(g.relabel(perm)) == base

    def test_canonical_graph_is_isomorphic_representative(self):
        g = from_edges(5, [(0, 3), (3, 1), (1, 4)])
        cg = canonical_graph(g)
        assert brute_isomorphic(g, cg)
        assert canonical_form(cg) == canonical_form(g)


class TestDeletionFamily:
    def test_path4(self):
        fam = independent_deletion_family(path(4))
        assert len(fam) == 5
        expected = [path(4), path(3), build_graph(union(Clique(2), Clique(1))),
                    clique(2), independent(2)]
        for want in expected:
            assert any(brute_isomorphic(w, want) for w in fam)

    def test_triangle(self):
        fam = independent_deletion_family(clique(3))
        assert len(fam) == 2
        assert any(brute_isomorphic(w, clique(3)) for w in fam)
        assert any(brute_isomorphic(w, clique(2)) for w in fam)

    def test_i2(self):
        fam = independent_deletion_family(independent(2))
        assert sorted(g.n for g in fam) == [0, 1, 2]

    def test_contains_self_and_single_deletions(self):
        g = cycle(5)
        fam = independent_deletion_family(g)
        assert any(brute_isomorphic(w, g) for w in fam)
        for v in range(g.n):
            removed = g.without_vertices([v])
            assert any(brute_isomorphic(w, removed) for w in fam)
