import pytest

from turanmatch import (
    Clique,
    ForbiddenSpec,
    Independent,
    SizeLimitError,
    build_graph,
    canonical_form,
    clique,
    count_admissible,
    count_cliques,
    ex_search,
    from_edges,
    independent,
    is_admissible,
    isomorphic,
    join,
    path,
    turan,
    union,
)

from conftest import all_graphs, brute_contains, brute_matching


def spec_k3_s2():
    return ForbiddenSpec(subgraphs=(clique(3),), matching_bound=2)


class TestIsAdmissible:
    def test_examples(self):
        g = build_graph(union(Clique(3), Clique(3), Independent(2)))
        assert is_admissible(g, ForbiddenSpec((path(4),), 2))
        assert not is_admissible(clique(4), ForbiddenSpec((clique(4),)))
        m3 = build_graph(union(Clique(2), Clique(2), Clique(2)))
        assert not is_admissible(m3, ForbiddenSpec((), 2))

    def test_rejects_empty_forbidden_graph(self):
        from turanmatch import Graph

        with pytest.raises(ValueError):
            ForbiddenSpec((Graph(0, ()),))


def brute_ex(n, r, spec):
    best = -1
    for g in all_graphs(n):
        if any(brute_contains(g, h) for h in spec.subgraphs):
            continue
        if spec.matching_bound is not None and brute_matching(g) > spec.matching_bound:
            continue
        best = max(best, count_cliques(g, r))
    return best


class TestExSearch:
    def test_triangle_free_nu2_n5(self):
        rec = ex_search(5, 2, spec_k3_s2())
        assert rec.value == 6
        assert any(isomorphic(w, turan(2, 5)) for w in rec.witnesses)

    def test_triangle_free_nu2_n6(self):
        rec = ex_search(6, 2, spec_k3_s2())
        assert rec.value == 8
        assert any(isomorphic(w, build_graph(join(Independent(2), Independent(4)))) for w in rec.witnesses)

    def test_k4_free_triangles_n6(self):
        rec = ex_search(6, 3, ForbiddenSpec((clique(4),), 2))
        assert rec.value == 4
        book = build_graph(join(Clique(2), Independent(4)))
        assert any(isomorphic(w, book) for w in rec.witnesses)

    def test_matches_naive_filter(self):
        for fam in (clique(3), path(4), path(5)):
            for s in (1, 2):
                spec = ForbiddenSpec((fam,), s)
                for n in range(5 + 1):
                    assert ex_search(n, 2, spec).value == brute_ex(n, 2, spec)

    def test_matches_naive_filter_n6(self):
        spec = ForbiddenSpec((clique(3),), 2)
        assert ex_search(6, 2, spec).value == brute_ex(6, 2, spec)
        spec = ForbiddenSpec((clique(4),), 2)
        assert ex_search(6, 3, spec).value == brute_ex(6, 3, spec)

    def test_admissibility_matches_brute_force_random(self):
        import random

        rng = random.Random(0xAD41)
        specs = [
            ForbiddenSpec((clique(4),), 2),
            ForbiddenSpec((path(5), clique(3)), None),
            ForbiddenSpec((), 1),
        ]
        for _ in range(300):
            n = rng.randint(4, 7)
            edges = [
                (u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5
            ]
            g = from_edges(n, edges)
            for spec in specs:
                naive = not any(brute_contains(g, h) for h in spec.subgraphs)
                if naive and spec.matching_bound is not None:
                    naive = brute_matching(g) <= spec.matching_bound
                assert is_admissible(g, spec) == naive

    def test_monotone_in_n_and_s(self):
        values = {}
        for s in (1, 2):
            for n in range(3, 7):
                values[(n, s)] = ex_search(n, 2, ForbiddenSpec((clique(3),), s)).value
        for s in (1, 2):
            for n in range(4, 7):
                assert values[(n, s)] >= values[(n - 1, s)]
        for n in range(3, 7):
            assert values[(n, 2)] >= values[(n, 1)]

    def test_witnesses_are_admissible_and_exact(self):
        spec = ForbiddenSpec((path(4),), 2)
        rec = ex_search(6, 3, spec)
        assert rec.witnesses
        for w in rec.witnesses:
            assert is_admissible(w, spec)
            assert count_cliques(w, rec.r) == rec.value

    def test_witnesses_pairwise_non_isomorphic(self):
        rec = ex_search(5, 2, ForbiddenSpec((clique(3),), 2))
        keys = [canonical_form(w) for w in rec.witnesses]
        assert len(keys) == len(set((k.n, k.key) for k in keys))

    def test_deterministic_across_runs(self):
        spec = spec_k3_s2()
        a = ex_search(6, 2, spec)
        b = ex_search(6, 2, spec)
        assert a.value == b.value and a.nodes == b.nodes
        assert [w.adj for w in a.witnesses] == [w.adj for w in b.witnesses]

    def test_parallel_split_matches_serial(self):
        spec = spec_k3_s2()
        base = ex_search(6, 2, spec)
        for workers in (1, 3):
            split = ex_search(6, 2, spec, workers=workers, split_depth=5)
            assert split.value == base.value
            assert [w.adj for w in split.witnesses] == [w.adj for w in base.witnesses]

    def test_parallel_split_repeated_stress(self):
        spec = ForbiddenSpec((path(5),), 2)
        base = ex_search(7, 2, spec)
        for _ in range(5):
            again = ex_search(7, 2, spec, workers=8, split_depth=7)
            assert again.value == base.value
            assert [w.adj for w in again.witnesses] == [w.adj for w in base.witnesses]

    def test_matching_bound_maintenance_matches_brute_force(self):
        # the DFS maintains nu incrementally; admissible counts must agree
        # with filtering on the brute-force matching number
        for s in (0, 1, 2):
            spec = ForbiddenSpec((), s)
            naive = sum(1 for g in all_graphs(5) if brute_matching(g) <= s)
            assert count_admissible(5, spec) == naive

    def test_upper_bound_pruning_preserves_results(self):
        specs = [
            ForbiddenSpec((clique(4),), 2),
            ForbiddenSpec((clique(3),)),
            ForbiddenSpec((clique(3),), 2),
            ForbiddenSpec((path(4),), 2),
            ForbiddenSpec((), 1),
            ForbiddenSpec((), None),
        ]
        for spec in specs:
            for n in (4, 5, 6):
                for r in (2, 3):
                    plain = ex_search(n, r, spec)
                    pruned = ex_search(n, r, spec, upper_bound_pruning=True)
                    assert plain.value == pruned.value, (n, r, spec)
                    assert [w.adj for w in plain.witnesses] == [
                        w.adj for w in pruned.witnesses
                    ], (n, r, spec)

    def test_empty_vertex_set(self):
        assert ex_search(0, 3, ForbiddenSpec((clique(3),))).value == 0
        assert ex_search(0, 0, ForbiddenSpec((clique(3),))).value == 1

    def test_witness_cap_truncates_with_flag(self):
        # value 0 with a huge extremal set: every triangle-free graph ties
        spec = ForbiddenSpec((clique(3),))
        full = ex_search(4, 3, spec)
        assert full.value == 0 and not full.truncated
        capped = ex_search(4, 3, spec, witness_cap=3)
        assert capped.value == 0 and capped.truncated
        assert 0 < len(capped.witnesses) <= 3
        for w in capped.witnesses:
            assert is_admissible(w, spec)
        # the retained classes are a prefix-deterministic subset of the full set
        full_keys = {w.adj for w in full.witnesses}
        assert all(w.adj in full_keys for w in capped.witnesses)

    def test_cap_enforced(self):
        with pytest.raises(SizeLimitError):
            ex_search(10, 2, spec_k3_s2())

    def test_edgeless_forbidden_graph_rejected(self):
        with pytest.raises(ValueError):
            ex_search(3, 2, ForbiddenSpec((independent(2),)))

    def test_record_json_shape(self):
        rec = ex_search(4, 2, spec_k3_s2())
        payload = rec.to_json_dict()
        assert list(payload) == ["n", "r", "forbidden", "s", "value", "witnesses", "nodes", "millis"]
        assert payload["value"] == str(rec.value)
        assert isinstance(payload["value"], str)


class TestCountAdmissible:
    def test_examples(self):
        assert count_admissible(3, ForbiddenSpec((clique(3),))) == 7
        assert count_admissible(2, ForbiddenSpec((), 0)) == 1
        assert count_admissible(3, ForbiddenSpec((), 1)) == 8

    def test_matches_naive_filter(self):
        for n in range(5):
            for s in (0, 1, None):
                spec = ForbiddenSpec((clique(3),), s)
                naive = 0
                for g in all_graphs(n):
                    if brute_contains(g, clique(3)):
                        continue
                    if s is not None and brute_matching(g) > s:
                        continue
                    naive += 1
                assert count_admissible(n, spec) == naive

    def test_cap(self):
        with pytest.raises(SizeLimitError):
            count_admissible(9, ForbiddenSpec((clique(3),)))
