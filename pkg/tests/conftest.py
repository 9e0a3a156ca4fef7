"""Shared brute-force oracles, deliberately independent of the package's
algorithmic paths: plain itertools enumeration over subsets/permutations."""

from __future__ import annotations

from itertools import combinations, permutations

from turanmatch import Graph, from_edges


def brute_count_cliques(g: Graph, r: int) -> int:
    if r == 0:
        return 1
    total = 0
    for verts in combinations(range(g.n), r):
        if all(g.has_edge(u, v) for u, v in combinations(verts, 2)):
            total += 1
    return total


def brute_matching(g: Graph) -> int:
    edges = list(g.edges())

    def best(idx: int, used: int) -> int:
        if idx == len(edges):
            return 0
        u, v = edges[idx]
        result = best(idx + 1, used)
        if not (used >> u & 1) and not (used >> v & 1):
            result = max(result, 1 + best(idx + 1, used | 1 << u | 1 << v))
        return result

    return best(0, 0)


def brute_contains(g: Graph, h: Graph) -> bool:
    if h.n > g.n:
        return False
    hedges = list(h.edges())
    for image in permutations(range(g.n), h.n):
        if all(g.has_edge(image[u], image[v]) for u, v in hedges):
            return True
    return False


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    for perm in permutations(range(g.n)):
        if all(
            g.has_edge(u, v) == h.has_edge(perm[u], perm[v])
            for u, v in combinations(range(g.n), 2)
        ):
            return True
    return False


def brute_longest_path(g: Graph) -> int:
    best = 1 if g.n else 0
    for size in range(2, g.n + 1):
        found = False
        for verts in permutations(range(g.n), size):
            if all(g.has_edge(verts[i], verts[i + 1]) for i in range(size - 1)):
                found = True
                break
        if found:
            best = size
    return best


def all_graphs(n: int):
    """Every labelled graph on n vertices."""
    pairs = list(combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield from_edges(n, [pairs[k] for k in range(len(pairs)) if mask >> k & 1])


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return from_edges(10, outer + spokes + inner)
