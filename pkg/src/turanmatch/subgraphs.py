"""Clique counting, containment, paths, colourings, isomorphism, and the
independent-deletion family of a pattern graph."""

from __future__ import annotations

from dataclasses import dataclass

from . import kernels
from .graphs import Graph, SizeLimitError, _bits, component_masks

CANONICAL_MAX_N = 16
CHROMATIC_MAX_N = 16
LONGEST_PATH_MAX_N = 24
DELETION_MAX_N = 14


@dataclass(frozen=True)
class CliqueVector:
    """Exact counts of K_0..K_rmax as unbounded integers."""

    counts: tuple[int, ...]
    rmax: int

    def __post_init__(self) -> None:
        if len(self.counts) != self.rmax + 1:
            raise ValueError("counts length must be rmax+1")
        if self.counts[0] != 1:
            raise ValueError("every graph has exactly one empty clique")

    def __getitem__(self, r: int) -> int:
        return self.counts[r]


def count_cliques(g: Graph, r: int) -> int:
    """Number of r-vertex cliques in g."""
    return kernels.count_cliques(g.adj, g.n, r)


def clique_vector(g: Graph, rmax: int) -> CliqueVector:
    if rmax < 0:
        raise ValueError("rmax must be nonnegative")
    return CliqueVector(tuple(kernels.clique_profile(g.adj, g.n, rmax)), rmax)


def contains(g: Graph, h: Graph) -> bool:
    """True iff g has a (not necessarily induced) subgraph isomorphic to h."""
    return kernels.contains(g.adj, g.n, h.adj, h.n)


def automorphism_count(h: Graph) -> int:
    return kernels.count_injections(h.adj, h.n, h.adj, h.n)


def count_copies(g: Graph, h: Graph) -> int:
    """Number of unlabelled copies of h in g."""
    if h.n == 0:
        return 1
    return kernels.count_injections(g.adj, g.n, h.adj, h.n) // automorphism_count(h)


def longest_path_order(g: Graph) -> int:
    """Vertex count of a longest path; computed per connected component."""
    best = 0
    for mask in component_masks(g):
        k = mask.bit_count()
        if k > LONGEST_PATH_MAX_N:
            raise SizeLimitError(
                f"component of {k} vertices exceeds the longest-path cap of "
                f"{LONGEST_PATH_MAX_N}"
            )
        local = _local_adj(g, mask)
        best = max(best, kernels.longest_path_in_component(local, k))
    return best


def _local_adj(g: Graph, mask: int) -> list[int]:
    verts = list(_bits(mask))
    index = {v: i for i, v in enumerate(verts)}
    local = [0] * len(verts)
    for v in verts:
        for u in _bits(g.adj[v] & mask):
            local[index[v]] |= 1 << index[u]
    return local


# --- colourings --------------------------------------------------------------

def _max_clique_size(adj: list[int], n: int) -> int:
    best = 0

    def grow(cand: int, size: int) -> None:
        nonlocal best
        if size + cand.bit_count() <= best:
            return
        if not cand:
            best = max(best, size)
            return
        c = cand
        while c:
            if size + c.bit_count() <= best:
                return
            low = c & -c
            v = low.bit_length() - 1
            c ^= low
            grow(adj[v] & c, size + 1)
        best = max(best, size)

    grow((1 << n) - 1, 0)
    return best


def chromatic_number(f: Graph) -> int:
    """Exact chromatic number by backtracking with a clique lower bound."""
    if f.n > CHROMATIC_MAX_N:
        raise SizeLimitError(f"chromatic number capped at {CHROMATIC_MAX_N} vertices")
    if f.n == 0:
        return 0
    adj = list(f.adj)
    order = sorted(range(f.n), key=lambda v: -f.degree(v))
    lower = _max_clique_size(adj, f.n)

    def colourable(k: int) -> bool:
        colours = [-1] * f.n

        def place(idx: int, used: int) -> bool:
            if idx == f.n:
                return True
            v = order[idx]
            forbidden = 0
            for u in _bits(adj[v]):
                if colours[u] >= 0:
                    forbidden |= 1 << colours[u]
            limit = min(k, used + 1)
            for c in range(limit):
                if forbidden >> c & 1:
                    continue
                colours[v] = c
                if place(idx + 1, max(used, c + 1)):
                    return True
                colours[v] = -1
            return False

        return place(0, 0)

    k = lower
    while not colourable(k):
        k += 1
    return k


def _bipartition_sizes(g: Graph) -> list[tuple[int, int]]:
    """Per-component colour-class sizes; raises on an odd cycle."""
    colour = [-1] * g.n
    out = []
    for mask in component_masks(g):
        root = (mask & -mask).bit_length() - 1
        colour[root] = 0
        sizes = [1, 0]
        stack = [root]
        while stack:
            v = stack.pop()
            for u in _bits(g.adj[v]):
                if colour[u] == -1:
                    colour[u] = colour[v] ^ 1
                    sizes[colour[u]] += 1
                    stack.append(u)
                elif colour[u] == colour[v]:
                    raise ValueError("graph is not bipartite")
        out.append((sizes[0], sizes[1]))
    return out


def bipartite_split(f: Graph) -> tuple[int, int]:
    """(p, q): the minimum colour-class size over proper 2-colourings, and
    its complement."""
    parts = _bipartition_sizes(f)
    achievable = 1  # bitset over class-A sizes
    for a, b in parts:
        achievable = achievable << a | achievable << b
    best = f.n
    for size in _bits(achievable):
        best = min(best, size, f.n - size)
    return best, f.n - best


def min_color_class(f: Graph) -> int:
    return bipartite_split(f)[0]


# --- canonical forms ---------------------------------------------------------

@dataclass(frozen=True)
class CanonicalForm:
    """Isomorphism invariant: the minimal adjacency column string over all
    vertex orderings.  ``key[j]`` holds position j's adjacency bits to
    positions 0..j-1, earliest position most significant."""

    n: int
    key: tuple[int, ...]


def _twins(adj: tuple[int, ...], u: int, v: int) -> bool:
    return adj[u] & ~(1 << v) == adj[v] & ~(1 << u)


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > CANONICAL_MAX_N:
        raise SizeLimitError(f"canonical form capped at {CANONICAL_MAX_N} vertices")
    cols, _ = _canonical_search(g)
    return CanonicalForm(g.n, tuple(cols))


def canonical_graph(g: Graph) -> Graph:
    """The minimal-labelling representative of g's isomorphism class."""
    _, perm = _canonical_search(g)
    place = [0] * g.n
    for pos, v in enumerate(perm):
        place[v] = pos
    return g.relabel(place)


def _canonical_search(g: Graph) -> tuple[list[int], list[int]]:
    n = g.n
    adj = g.adj
    if n == 0:
        return [], []
    best_cols: list[int] | None = None
    best_perm: list[int] | None = None
    perm = [0] * n
    cols = [0] * n

    def rec(depth: int, used: int, tied: bool) -> None:
        nonlocal best_cols, best_perm
        if depth == n:
            if best_cols is None or cols < best_cols:
                best_cols = cols.copy()
                best_perm = perm.copy()
            return
        # column value of each unused vertex against the placed prefix
        col_of = {}
        min_col = None
        for v in range(n):
            if used >> v & 1:
                continue
            col = 0
            for i in range(depth):
                col = col << 1 | (adj[v] >> perm[i] & 1)
            col_of[v] = col
            if min_col is None or col < min_col:
                min_col = col
        # only minimal columns can start a lexicographically minimal completion
        if tied and best_cols is not None:
            if min_col > best_cols[depth]:
                return
            tied = min_col == best_cols[depth]
        explored: list[int] = []
        for v in sorted(col_of):
            if col_of[v] != min_col:
                continue
            if any(_twins(adj, u, v) for u in explored):
                continue
            explored.append(v)
            perm[depth] = v
            cols[depth] = min_col
            rec(depth + 1, used | 1 << v, tied)

    rec(0, 0, True)
    assert best_cols is not None and best_perm is not None
    return best_cols, best_perm


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return canonical_form(g) == canonical_form(h)


# --- independent-deletion family ----------------------------------------------

def independent_deletion_family(f: Graph) -> list[Graph]:
    """All graphs f - S for S an independent set of f (including S = empty),
    deduplicated up to isomorphism; largest first, canonical labelling."""
    if f.n > DELETION_MAX_N:
        raise SizeLimitError(f"deletion family capped at {DELETION_MAX_N} vertices")
    seen: dict[tuple[int, tuple[int, ...]], Graph] = {}
    for smask in _independent_sets(f):
        sub = f.induced(((1 << f.n) - 1) & ~smask)
        form = canonical_form(sub)
        key = (form.n, form.key)
        if key not in seen:
            seen[key] = canonical_graph(sub)
    return [seen[key] for key in sorted(seen, key=lambda k: (-k[0], k[1]))]


def _independent_sets(f: Graph):
    """All independent vertex masks of f, the empty set included."""
    out = [0]
    stack = [(0, (1 << f.n) - 1)]
    while stack:
        base, cand = stack.pop()
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            mask = base | low
            out.append(mask)
            stack.append((mask, cand & ~f.adj[v]))
    return out
