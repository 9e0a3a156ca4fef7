#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-Python fallback.

Usage:
    python benchmarks/bench_backends.py [--repeat N]

Workloads are sized so the pure lane finishes in seconds; the point is the
ratio, not the absolute numbers.
"""

from __future__ import annotations

import argparse
import time

from turanmatch.kernels import adj_from_mask, get_impl


def _time(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def workloads():
    tri = tuple(adj_from_mask(3, 0b111))
    p5 = tuple(adj_from_mask(5, 0b1000010011))
    dense = adj_from_mask(16, (1 << 120) - 1)

    def matching_sweep(impl):
        checked, mismatches, _ = impl.scan_matching_equality(6)
        assert mismatches == 0

    def tb_sweep(impl):
        checked, mismatches, _ = impl.scan_tutte_berge(5, 0, 0)
        assert mismatches == 0

    def dirac_sweep(impl):
        checked, violations, _ = impl.scan_path_degree_bound(6)
        assert violations == 0

    def surgery_sweep(impl):
        _, violations, _ = impl.scan_component_cliqueify(6)
        assert violations == 0

    def search_triangle_free(impl):
        value, witnesses, nodes, _ = impl.search_subtree(
            7, 2, [(tri, 3)], 2, 0, 0, False, 1 << 20
        )
        assert value == 10

    def search_path_free(impl):
        value, witnesses, nodes, _ = impl.search_subtree(
            7, 3, [(p5, 5)], 3, 0, 0, False, 1 << 20
        )
        assert value >= 1

    def clique_profile_dense(impl):
        counts = impl.clique_profile(dense, 16, 8)
        assert counts[2] == 120

    def matching_random(impl):
        _, mismatches, _ = impl.scan_matching_equality_random(12, 200, 42)
        assert mismatches == 0

    return [
        ("matching sweep n=6 (32768 graphs)", matching_sweep),
        ("odd-component witness sweep n=5", tb_sweep),
        ("path degree-bound sweep n=6", dirac_sweep),
        ("component surgery sweep n=6", surgery_sweep),
        ("search: triangle-free nu<=2, n=7", search_triangle_free),
        ("search: P_5-free nu<=3, r=3, n=7", search_path_free),
        ("clique profile K_16 to r=8", clique_profile_dense),
        ("random matching parity n=12 x200", matching_random),
    ]


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    pure = get_impl("pure")
    try:
        fast = get_impl("fast")
    except ImportError:
        print("compiled backend not built; run `pip install -e . --no-build-isolation` first")
        return

    print(f"{'workload':<42} {'pure':>10} {'fast':>10} {'speedup':>9}")
    print("-" * 75)
    for name, fn in workloads():
        t_pure = _time(lambda: fn(pure), args.repeat)
        t_fast = _time(lambda: fn(fast), args.repeat)
        ratio = t_pure / t_fast if t_fast > 0 else float("inf")
        print(f"{name:<42} {t_pure * 1000:>8.1f}ms {t_fast * 1000:>8.1f}ms {ratio:>8.1f}x")


if __name__ == "__main__":
    main()
