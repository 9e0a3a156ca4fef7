"""Maximum matching, an independent subset-DP oracle, and minimum
odd-component witnesses for the matching number."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graphs import Graph, SizeLimitError, _bits

ORACLE_MAX_N = 24
WITNESS_MAX_N = 12


def matching_number(g: Graph) -> int:
    """nu(g) by the blossom algorithm; a graph is M_{s+1}-free iff nu <= s."""
    return kernels.nu_blossom(g.adj, g.n)


def maximum_matching_edges(g: Graph) -> list[tuple[int, int]]:
    """One maximum matching, for debugging; callers normally need only nu."""
    match = kernels.blossom_matching(g.adj, g.n)
    return [(v, match[v]) for v in range(g.n) if match[v] > v]


def matching_number_oracle(g: Graph) -> int:
    """nu(g) by DP over vertex subsets; independent of the blossom code."""
    if g.n > ORACLE_MAX_N:
        raise SizeLimitError(f"matching oracle capped at {ORACLE_MAX_N} vertices")
    return kernels.nu_bitmask(g.adj, g.n)


@dataclass(frozen=True)
class TutteBergeWitness:
    """Vertex set B with every component of G-B odd and
    |B| + sum (|C_i|-1)/2 equal to nu(G)."""

    vertices: tuple[int, ...]
    value: int


def tutte_berge_witness(g: Graph) -> TutteBergeWitness:
    """Minimum-value witness, ties broken by lexicographically smallest B."""
    if g.n > WITNESS_MAX_N:
        raise SizeLimitError(f"witness search capped at {WITNESS_MAX_N} vertices")
    full = (1 << g.n) - 1
    best: tuple[int, tuple[int, ...]] | None = None
    for bmask in range(1 << g.n):
        value = kernels.tb_value_of_set(g.adj, full & ~bmask, bmask.bit_count())
        if value is None:
            continue
        key = (value, tuple(_bits(bmask)))
        if best is None or key < best:
            best = key
    assert best is not None  # B = V(G) always qualifies
    return TutteBergeWitness(vertices=best[1], value=best[0])
