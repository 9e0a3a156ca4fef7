"""Exhaustive computation of the maximum r-clique count over graphs avoiding
a forbidden family and, optionally, matchings above a bound.

The search walks edge slots in lexicographic order, branching include-first.
Forbidden-subgraph freeness and a matching-number cap are both preserved
under edge deletion while the clique count only grows with edges, so pruning
an include branch at the first violation loses no optimum.  Every admissible
labelled graph appears as exactly one leaf, which is what makes the witness
sets complete.
"""

from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from . import kernels
from .graphs import Graph, SizeLimitError, encode_graph6, from_edges
from .matching import matching_number
from .subgraphs import canonical_form, canonical_graph, contains

DEFAULT_SEARCH_CAP = 9
DEFAULT_COUNT_CAP = 8
DEFAULT_WITNESS_CAP = 1 << 20
AUTO_SPLIT_DEPTH = 6


@dataclass(frozen=True)
class ForbiddenSpec:
    """A forbidden family: subgraphs (non-induced) plus an optional matching
    bound s, which forbids M_{s+1}."""

    subgraphs: tuple[Graph, ...] = ()
    matching_bound: int | None = None

    def __post_init__(self) -> None:
        for h in self.subgraphs:
            if h.n == 0:
                raise ValueError("forbidden graphs must be nonempty")
        if self.matching_bound is not None and self.matching_bound < 0:
            raise ValueError("matching bound must be nonnegative")

    def sorted_graph6(self) -> list[str]:
        return sorted(encode_graph6(canonical_graph(h)) for h in self.subgraphs)


@dataclass
class ExtremalRecord:
    """Outcome of one exhaustive search."""

    n: int
    r: int
    spec: ForbiddenSpec
    value: int
    witnesses: tuple[Graph, ...]
    nodes: int
    millis: int
    truncated: bool = False

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "forbidden": self.spec.sorted_graph6(),
            "s": self.spec.matching_bound,
            "value": str(self.value),
            "witnesses": [encode_graph6(w) for w in self.witnesses],
            "nodes": self.nodes,
            "millis": self.millis,
        }


def is_admissible(g: Graph, spec: ForbiddenSpec) -> bool:
    """True iff g avoids every forbidden subgraph and respects the matching bound."""
    for h in spec.subgraphs:
        if contains(g, h):
            return False
    if spec.matching_bound is not None and matching_number(g) > spec.matching_bound:
        return False
    return True


def _kernel_patterns(n: int, spec: ForbiddenSpec) -> list[tuple[tuple[int, ...], int]]:
    patterns = []
    for h in sorted(spec.subgraphs, key=lambda h: (h.n, h.adj)):
        if h.n > n:
            continue
        if h.edge_count() == 0:
            raise ValueError(
                "an edgeless forbidden graph fits every graph of its order; "
                "no admissible graphs exist"
            )
        patterns.append((h.adj, h.n))
    return patterns


def _graph_from_slot_mask(n: int, mask: int) -> Graph:
    slots = kernels.edge_slots(n)
    return from_edges(n, [slots[k] for k in range(len(slots)) if mask >> k & 1])


def ex_search(
    n: int,
    r: int,
    spec: ForbiddenSpec,
    *,
    cap: int = DEFAULT_SEARCH_CAP,
    workers: int = 1,
    split_depth: int | None = None,
    upper_bound_pruning: bool = False,
    witness_cap: int = DEFAULT_WITNESS_CAP,
) -> ExtremalRecord:
    """Exact maximum of the K_r count over admissible labelled graphs on n
    vertices, with every extremal graph up to isomorphism."""
    if r < 0:
        raise ValueError("clique order must be nonnegative")
    if n > cap:
        raise SizeLimitError(f"search needs n <= {cap}, got {n}")
    start = time.perf_counter()
    if n == 0:
        empty = Graph(0, ())
        value = 1 if r == 0 else 0
        return ExtremalRecord(n, r, spec, value, (empty,), 1, _ms(start))
    patterns = _kernel_patterns(n, spec)
    s_bound = spec.matching_bound
    total_slots = n * (n - 1) // 2
    if split_depth is None:
        depth = 0 if workers == 1 else min(AUTO_SPLIT_DEPTH, total_slots)
    else:
        depth = max(0, min(split_depth, total_slots))

    prefixes, prefix_nodes = kernels.search_prefixes(n, patterns, s_bound, depth)
    if depth == 0:
        prefix_nodes = 0  # the lone empty prefix is re-counted by the subtree walk

    def run(prefix: int):
        return kernels.search_subtree(
            n, r, patterns, s_bound, prefix, depth, upper_bound_pruning, witness_cap
        )

    if workers > 1 and len(prefixes) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(run, prefixes))
    else:
        results = [run(prefix) for prefix in prefixes]

    value = max(res[0] for res in results)
    nodes = prefix_nodes + sum(res[2] for res in results)
    truncated = any(res[3] for res in results if res[0] == value)
    seen: dict[tuple[int, tuple[int, ...]], Graph] = {}
    for res in results:
        if res[0] != value:
            continue
        for mask in res[1]:
            g = _graph_from_slot_mask(n, mask)
            form = canonical_form(g)
            key = (form.n, form.key)
            if key not in seen:
                seen[key] = canonical_graph(g)
    witnesses = tuple(seen[key] for key in sorted(seen))
    return ExtremalRecord(
        n, r, spec, value, witnesses, nodes, _ms(start), truncated=truncated
    )


def _ms(start: float) -> int:
    return int((time.perf_counter() - start) * 1000)


def count_admissible(n: int, spec: ForbiddenSpec, *, cap: int = DEFAULT_COUNT_CAP) -> int:
    """Number of admissible labelled graphs on n vertices."""
    if n > cap:
        raise SizeLimitError(f"admissible count needs n <= {cap}, got {n}")
    if n == 0:
        return 1
    patterns = _kernel_patterns(n, spec)
    return kernels.count_admissible(n, patterns, spec.matching_bound)
