import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from turanmatch import (
    SizeLimitError,
    build_graph,
    build_named,
    clique,
    cycle,
    from_edges,
    matching_number,
    matching_number_oracle,
    maximum_matching_edges,
    path,
    tutte_berge_witness,
)

from conftest import all_graphs, brute_matching, petersen


class TestMatchingNumber:
    def test_examples(self):
        assert matching_number(path(5)) == 2
        assert matching_number(clique(5)) == 2
        g1 = build_graph(build_named("G1", p=2, s=3, n=12))
        assert matching_number(g1) == 3

    def test_oracle_examples(self):
        assert matching_number_oracle(cycle(7)) == 3
        assert matching_number_oracle(clique(4)) == 2
        assert matching_number_oracle(petersen()) == 5

    def test_oracle_cap(self):
        with pytest.raises(SizeLimitError):
            matching_number_oracle(clique(25))

    def test_blossom_equals_oracle_exhaustive(self):
        for n in range(6):
            for g in all_graphs(n):
                assert matching_number(g) == matching_number_oracle(g)

    def test_blossom_equals_brute_force(self):
        for g in all_graphs(5):
            assert matching_number(g) == brute_matching(g)

    @given(st.integers(min_value=6, max_value=12), st.randoms())
    @settings(max_examples=60, deadline=None)
    def test_blossom_equals_oracle_random(self, n, rng):
        edges = [
            (i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < 0.4
        ]
        g = from_edges(n, edges)
        assert matching_number(g) == matching_number_oracle(g)

    def test_matching_edges_are_a_matching(self):
        g = petersen()
        edges = maximum_matching_edges(g)
        assert len(edges) == 5
        used = set()
        for u, v in edges:
            assert g.has_edge(u, v)
            assert u not in used and v not in used
            used.update((u, v))


class TestTutteBerge:
    def test_two_triangles_plus_vertex(self):
        from turanmatch import Clique, Independent, union

        g = build_graph(union(Clique(3), Clique(3), Independent(1)))
        w = tutte_berge_witness(g)
        assert w.vertices == () and w.value == 2

    def test_path4_lexicographic_tie_break(self):
        # both {0} and {1,2} witness value 2; the lex-smallest set wins
        w = tutte_berge_witness(path(4))
        assert w.value == 2
        assert w.vertices == (0,)

    def test_k4_single_vertex(self):
        w = tutte_berge_witness(clique(4))
        assert w.value == 2
        assert w.vertices == (0,)

    def test_value_equals_matching_number_exhaustive(self):
        for n in range(6):
            for g in all_graphs(n):
                assert tutte_berge_witness(g).value == matching_number(g)

    def test_witness_components_are_odd(self):
        from turanmatch import components

        for g in all_graphs(5):
            w = tutte_berge_witness(g)
            rest = g.without_vertices(w.vertices)
            assert all(len(c) % 2 == 1 for c in components(rest))

    def test_cap(self):
        with pytest.raises(SizeLimitError):
            tutte_berge_witness(clique(13))
