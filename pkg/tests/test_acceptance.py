"""Acceptance suite: one test per criterion, each printing a PASS line with
its runtime (run with -s or -v to see them).  Every tolerance is exact."""

import random
import time

from turanmatch import (
    ApplicabilityError,
    Clique,
    ForbiddenSpec,
    GraphLeaf,
    Independent,
    build_graph,
    build_named,
    clique,
    clique_vector,
    clique_vector_of_expr,
    contains,
    decode_graph6,
    deletion_extremal,
    encode_graph6,
    ex_search,
    expr_clique_count,
    from_edges,
    hub_expr,
    independent_deletion_family,
    isomorphic,
    join,
    matching_number,
    path,
    union,
)
from turanmatch.harness import (
    AGREE,
    DISAGREE,
    check_bipartite_bounds,
    check_even_path,
    check_hub_counterexample,
    check_lemma_suite,
    check_odd_path,
)
from turanmatch import kernels

from conftest import brute_isomorphic


def _report(number: int, description: str, started: float) -> None:
    print(f"criterion {number:02d} PASS: {description} ({time.perf_counter() - started:.1f}s)")


def test_c01_graph6_roundtrip():
    started = time.perf_counter()
    checked = 0
    for n in range(6):
        slots = n * (n - 1) // 2
        for mask in range(1 << slots):
            g = from_edges(n, [
                pair for k, pair in enumerate(kernels.edge_slots(n)) if mask >> k & 1
            ])
            assert decode_graph6(encode_graph6(g)) == g
            checked += 1
    rng = random.Random(0x67726170)
    for i in range(1000):
        n = 6 + i % 5
        edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.5]
        g = from_edges(n, edges)
        assert decode_graph6(encode_graph6(g)) == g
        checked += 1
    elapsed = time.perf_counter() - started
    assert elapsed < 5
    _report(1, f"graph6 round-trip bit-exact on {checked} graphs", started)


def test_c02_matching_oracle_equivalence():
    started = time.perf_counter()
    total = 0
    for n in range(8):
        checked, mismatches, first = kernels.scan_matching_equality(n)
        assert mismatches == 0, f"blossom/DP mismatch at n={n} mask={first}"
        total += checked
    assert total == sum(1 << (n * (n - 1) // 2) for n in range(8))
    randoms = 0
    for n in range(8, 17):
        checked, mismatches, first = kernels.scan_matching_equality_random(n, 56, 0x5EED + n)
        assert mismatches == 0, f"blossom/DP mismatch at n={n} mask={first}"
        randoms += checked
    assert randoms >= 500
    elapsed = time.perf_counter() - started
    assert elapsed < 120
    _report(2, f"blossom equals subset-DP on {total} exhaustive + {randoms} random graphs", started)


def test_c03_tutte_berge_witness_value():
    started = time.perf_counter()
    report = check_lemma_suite(
        path_bound_n=0, binom_bound=0, binom_rmax=1, vandermonde_bound=0,
        component_props_n=0,
    )
    assert report.status == AGREE, report.notes
    line = report.observed["odd-component-witness"]
    assert "violations=0" in line
    total_exhaustive = sum(1 << (n * (n - 1) // 2) for n in range(7))
    assert f"checked={total_exhaustive + 20000}" in line
    elapsed = time.perf_counter() - started
    assert elapsed < 300
    _report(3, "minimum odd-component witness equals blossom everywhere tested", started)


def test_c04_path_endpoint_degree_bound():
    started = time.perf_counter()
    connected = 0
    for n in range(1, 8):
        checked, violations, first = kernels.scan_path_degree_bound(n)
        assert violations == 0, f"degree-bound violation at n={n} mask={first}"
        connected += checked
    elapsed = time.perf_counter() - started
    assert elapsed < 180
    _report(4, f"longest-path endpoint bound holds on {connected} connected graphs", started)


def test_c05_binomial_grids():
    started = time.perf_counter()
    report = check_lemma_suite(
        path_bound_n=0, tb_exhaustive_n=-1, tb_sampled_n=(), component_props_n=0,
        binom_bound=20, binom_rmax=6, vandermonde_bound=20,
    )
    assert report.status == AGREE, report.notes
    assert "violations=0" in report.observed["binomial-rearrangement"]
    assert "violations=0" in report.observed["binomial-convolution"]
    elapsed = time.perf_counter() - started
    assert elapsed < 10
    _report(5, "binomial rearrangement and convolution grids clean to 20", started)


def _sweep_cases():
    for p in (2, 3, 4):
        for s in range(p, p + 5):
            for n in (30, 60):
                for id in ("G1", "G2", "G3", "G4", "G5", "G6"):
                    try:
                        expr = build_named(id, p, s, n)
                    except ApplicabilityError:
                        continue
                    yield id, p, s, n, expr


def test_c06_clique_vector_algebra_sweep():
    started = time.perf_counter()
    cases = 0
    for id, p, s, n, expr in _sweep_cases():
        rmax = 2 * p + 2
        closed = clique_vector_of_expr(expr, rmax).counts
        direct = clique_vector(build_graph(expr), rmax).counts
        assert closed == direct, f"{id}(p={p},s={s},n={n})"
        cases += 1
    assert cases > 100
    elapsed = time.perf_counter() - started
    assert elapsed < 60
    _report(6, f"closed-form clique vectors equal direct counts on {cases} constructions", started)


def test_c07_construction_admissibility_sweep():
    started = time.perf_counter()
    cases = 0
    for id, p, s, n, expr in _sweep_cases():
        g = build_graph(expr)
        order = 2 * p if id in ("G1", "G2") else 2 * p + 1
        assert not contains(g, path(order)), f"{id}(p={p},s={s},n={n}) has a long path"
        assert matching_number(g) <= s, f"{id}(p={p},s={s},n={n}) exceeds the matching bound"
        cases += 1
    elapsed = time.perf_counter() - started
    assert elapsed < 60
    _report(7, f"all {cases} swept constructions are path-free within the matching bound", started)


def test_c08_edge_maximum_reproduction():
    started = time.perf_counter()
    spec = ForbiddenSpec((clique(3),), 2)
    expected = {5: 6, 6: 8, 7: 10, 8: 12}
    from turanmatch import Turan

    turan_edges = expr_clique_count(Turan(2, 5), 2)
    for n, want in expected.items():
        formula = max(turan_edges, 2 * (n - 2))
        assert formula == want
        record = ex_search(n, 2, spec)
        assert record.value == want, f"n={n}: got {record.value}"
    elapsed = time.perf_counter() - started
    assert elapsed < 900
    _report(8, "triangle-free nu<=2 edge maxima 6,8,10,12 for n=5..8", started)


def test_c09_hub_formula_instance():
    started = time.perf_counter()
    dstar = deletion_extremal(2, 3, clique(4))
    assert isomorphic(dstar, clique(2))
    spec = ForbiddenSpec((clique(4),), 2)
    for n in (6, 7, 8):
        formula = expr_clique_count(hub_expr(dstar, n - 2), 3)
        assert formula == n - 2
        record = ex_search(n, 3, spec)
        assert record.value == formula, f"n={n}: got {record.value}"
    elapsed = time.perf_counter() - started
    assert elapsed < 900
    _report(9, "K_4-free nu<=2 triangle maxima equal the hub formula n-2 for n=6..8", started)


def test_c10_hub_counterexample_gap():
    started = time.perf_counter()
    n_list = list(range(10, 51))
    from math import comb

    for p, k in ((2, 1), (2, 2), (3, 1)):
        s = k * (2 * p - 1) + 1
        usable = [n for n in n_list if n - s + 1 >= 0]
        report = check_hub_counterexample(p, k, usable)
        assert report.status == AGREE
        gap = k * comb(2 * p - 1, 2)  # pairs inside the clique packing
        for n in usable:
            assert report.expected[str(n)] == str(gap)
            assert report.observed[str(n)] == str(gap)
    elapsed = time.perf_counter() - started
    assert elapsed < 1
    _report(10, "isolated-vertex hub strictly loses, gap exact, for all n in 10..50", started)


def test_c11_even_path_edge_case():
    started = time.perf_counter()
    for n in (7, 8):
        report = check_even_path(p=2, s=2, r=2, n_list=[n])
        assert report.status == AGREE
        assert report.expected[str(n)] == str(n - 1)
        assert report.observed[str(n)] == str(n - 1)
    elapsed = time.perf_counter() - started
    assert elapsed < 900
    _report(11, "P_4-free nu<=2 edge maximum equals the construction max n-1 at n=7,8", started)


def test_c12_even_path_triangle_anomaly():
    started = time.perf_counter()
    report = check_even_path(p=2, s=2, r=3, n_list=[8])
    assert report.status == DISAGREE
    assert report.expected["8"] == "1"
    assert int(report.observed["8"]) >= 2
    two_triangles = build_graph(union(Clique(3), Clique(3)))
    assert any(contains(decode_graph6(w), two_triangles) for w in report.witnesses)
    elapsed = time.perf_counter() - started
    assert elapsed < 900
    _report(12, "triangle-count instance reports the expected DISAGREE with a 2K_3 witness", started)


def test_c13_odd_path_instance():
    started = time.perf_counter()
    report = check_odd_path(p=2, s=3, r=2, n_list=[8])
    assert report.status == AGREE
    assert report.expected["8"] == "9"
    assert report.observed["8"] == "9"
    elapsed = time.perf_counter() - started
    assert elapsed < 900
    _report(13, "P_5-free nu<=3 edge maximum equals the construction max 9 at n=8", started)


def test_c14_bipartite_bounds_instances():
    started = time.perf_counter()
    from turanmatch import cycle

    for f, name in ((cycle(4), "C_4"), (path(4), "P_4")):
        report = check_bipartite_bounds(f, s=2, r=2, n_list=[8])
        assert report.status == AGREE, f"{name}: {report.observed}"
    elapsed = time.perf_counter() - started
    assert elapsed < 1800
    _report(14, "search values sit inside the closed-form bounds for C_4 and P_4", started)


def test_c15_component_surgery_properties():
    started = time.perf_counter()
    instances = 0
    for n in range(1, 8):
        count, violations, first = kernels.scan_component_cliqueify(n)
        assert violations == 0, f"clique replacement changes nu at n={n} mask={first}"
        instances += count
    for n in range(1, 8):
        count, violations, first = kernels.scan_component_rewire(n)
        assert violations == 0, f"rewire increases nu at n={n} mask={first}"
        instances += count
    elapsed = time.perf_counter() - started
    assert elapsed < 300
    _report(15, f"component surgery preserves matching bounds on {instances} instances", started)


def test_c16_deletion_family_reproduction():
    started = time.perf_counter()
    f = build_graph(join(GraphLeaf(path(4)), Independent(2)))
    family = independent_deletion_family(f)

    expected = [
        build_graph(join(GraphLeaf(path(4)), Independent(2))),
        build_graph(join(GraphLeaf(path(4)), Independent(1))),
        path(4),
        build_graph(join(GraphLeaf(path(3)), Independent(2))),
        build_graph(join(GraphLeaf(build_graph(union(Clique(2), Clique(1)))), Independent(2))),
        build_graph(join(Independent(2), Independent(2))),
        build_graph(join(Clique(2), Independent(2))),
    ]
    assert len(family) == len(expected) == 7
    for want in expected:
        assert any(brute_isomorphic(got, want) for got in family)

    # classify into the two shapes: a path joined to up to one dominating
    # vertex, or a small linear forest joined to a dominating pair
    def is_linear_forest(g):
        from turanmatch import components

        if any(g.degree(v) > 2 for v in range(g.n)):
            return False
        return g.edge_count() == g.n - len(components(g))

    path_family = 0
    forest_family = 0
    for member in family:
        if isomorphic(member, path(4)) or (
            member.n == 5
            and any(
                member.adj[v].bit_count() == 4
                and isomorphic(member.without_vertices([v]), path(4))
                for v in range(5)
            )
        ):
            path_family += 1
            continue
        hosts = False
        for u in range(member.n):
            for v in range(u + 1, member.n):
                if member.has_edge(u, v):
                    continue
                others = ((1 << member.n) - 1) & ~(1 << u) & ~(1 << v)
                if member.adj[u] != others or member.adj[v] != others:
                    continue
                rest = member.without_vertices([u, v])
                if rest.n >= 2 and rest.edge_count() <= 3 and is_linear_forest(rest):
                    hosts = True
        if hosts:
            forest_family += 1
    assert path_family == 2
    assert forest_family == 5
    elapsed = time.perf_counter() - started
    assert elapsed < 1
    _report(16, "deletion family of the joined path splits into the two expected shapes", started)


def test_c17_parallel_determinism():
    started = time.perf_counter()
    spec = ForbiddenSpec((clique(3),), 2)
    outcomes = []
    for workers in (1, 4, 8):
        record = ex_search(8, 2, spec, workers=workers)
        outcomes.append((record.value, tuple(w.adj for w in record.witnesses)))
    assert outcomes[0] == outcomes[1] == outcomes[2]
    assert outcomes[0][0] == 12
    split = ex_search(8, 2, spec, workers=1, split_depth=6)
    assert (split.value, tuple(w.adj for w in split.witnesses)) == outcomes[0]
    _report(17, "value and witness set identical across 1, 4, 8 workers", started)
