"""Graph value type, construction expressions, and graph6 serialization.

Graphs are immutable: ``n`` vertices labelled 0..n-1 and one Python-int
bitmask per vertex holding its neighbourhood.  Python ints double as
arbitrary-width bitsets, so the same representation serves 5-vertex test
graphs and 10,000-vertex materializations.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Iterable, Iterator, Sequence

DEFAULT_MAX_VERTICES = 10_000
GRAPH6_MAX_N = 68_719_476_735


class Graph6Error(ValueError):
    """Malformed graph6 input."""


class SizeLimitError(ValueError):
    """Input exceeds a documented size cap."""


@dataclass(frozen=True)
class Graph:
    """Finite simple graph; ``adj[v]`` is the bitmask of v's neighbours."""

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.n < 0 or len(self.adj) != self.n:
            raise ValueError("adjacency row count must equal n")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"vertex {v} has neighbours out of range")
            if row >> v & 1:
                raise ValueError(f"self-loop at vertex {v}")
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                if not self.adj[u] >> v & 1:
                    raise ValueError(f"asymmetric adjacency {v}-{u}")

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            for u in _bits(self.adj[v] >> (v + 1) << (v + 1)):
                yield (v, u)

    def with_edge(self, u: int, v: int) -> "Graph":
        """Copy with edge uv added (no-op if present)."""
        if u == v:
            raise ValueError("no self-loops")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))

    def without_vertices(self, drop: Iterable[int]) -> "Graph":
        """Induced subgraph on the complement of ``drop``, relabelled."""
        mask = 0
        for v in drop:
            mask |= 1 << v
        return self.induced(((1 << self.n) - 1) & ~mask)

    def induced(self, keep_mask: int) -> "Graph":
        """Induced subgraph on the set bits of ``keep_mask``, relabelled 0..k-1."""
        kept = list(_bits(keep_mask))
        index = {v: i for i, v in enumerate(kept)}
        rows = []
        for v in kept:
            row = 0
            for u in _bits(self.adj[v] & keep_mask):
                row |= 1 << index[u]
            rows.append(row)
        return Graph(len(kept), tuple(rows))

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Image graph where old vertex v becomes ``perm[v]``."""
        rows = [0] * self.n
        for v in range(self.n):
            for u in _bits(self.adj[v]):
                rows[perm[v]] |= 1 << perm[u]
        return Graph(self.n, tuple(rows))


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise ValueError("no self-loops")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def clique(m: int) -> Graph:
    full = (1 << m) - 1
    return Graph(m, tuple(full ^ (1 << v) for v in range(m)))


def independent(m: int) -> Graph:
    return Graph(m, (0,) * m)


def path(m: int) -> Graph:
    return from_edges(m, [(i, i + 1) for i in range(m - 1)])


def cycle(m: int) -> Graph:
    if m < 3:
        raise ValueError("cycle needs at least 3 vertices")
    return from_edges(m, [(i, (i + 1) % m) for i in range(m)])


def turan_parts(k: int, m: int) -> list[int]:
    """Part sizes of the complete balanced k-partite graph on m vertices."""
    if k < 1:
        raise ValueError("Turan graph needs k >= 1")
    q, r = divmod(m, k)
    return [q + 1] * r + [q] * (k - r)


def turan(k: int, m: int) -> Graph:
    rows = [0] * m
    full = (1 << m) - 1
    start = 0
    for size in turan_parts(k, m):
        part = ((1 << size) - 1) << start
        for v in range(start, start + size):
            rows[v] = full & ~part
        start += size
    return Graph(m, tuple(rows))


# --- construction expressions -----------------------------------------------

@dataclass(frozen=True)
class Clique:
    m: int


@dataclass(frozen=True)
class Independent:
    m: int


@dataclass(frozen=True)
class Path:
    m: int


@dataclass(frozen=True)
class Cycle:
    m: int


@dataclass(frozen=True)
class Turan:
    k: int
    m: int


@dataclass(frozen=True)
class Union:
    parts: tuple


@dataclass(frozen=True)
class Join:
    parts: tuple


@dataclass(frozen=True)
class GraphLeaf:
    graph: Graph


@dataclass(frozen=True)
class Named:
    """One of the packaged extremal constructions G1..G6."""

    id: str
    p: int
    s: int
    n: int


ConstructionExpr = (
    Clique | Independent | Path | Cycle | Turan | Union | Join | GraphLeaf | Named
)


def union(*parts: ConstructionExpr) -> Union:
    return Union(tuple(parts))


def join(*parts: ConstructionExpr) -> Join:
    return Join(tuple(parts))


def expr_order(expr: ConstructionExpr) -> int:
    """Vertex count of the materialization."""
    match expr:
        case Clique(m) | Independent(m) | Path(m) | Cycle(m):
            return m
        case Turan(_, m):
            return m
        case Union(parts) | Join(parts):
            return sum(expr_order(part) for part in parts)
        case GraphLeaf(graph):
            return graph.n
        case Named():
            from .constructions import expand_named

            return expr_order(expand_named(expr))
    raise TypeError(f"not a construction expression: {expr!r}")


def build_graph(expr: ConstructionExpr, max_n: int = DEFAULT_MAX_VERTICES) -> Graph:
    """Materialize an expression; sub-expressions are laid out left-to-right."""
    total = expr_order(expr)
    if total > max_n:
        raise SizeLimitError(f"{total} vertices exceeds the cap of {max_n}")
    return _materialize(expr)


def _materialize(expr: ConstructionExpr) -> Graph:
    match expr:
        case Clique(m):
            _check_size(m)
            return clique(m)
        case Independent(m):
            _check_size(m)
            return independent(m)
        case Path(m):
            _check_size(m)
            return path(m)
        case Cycle(m):
            _check_size(m)
            return cycle(m)
        case Turan(k, m):
            _check_size(m)
            return turan(k, m)
        case GraphLeaf(graph):
            return graph
        case Union(parts):
            return _disjoint_union([_materialize(part) for part in parts])
        case Join(parts):
            graphs = [_materialize(part) for part in parts]
            joined = _disjoint_union(graphs)
            rows = list(joined.adj)
            full = (1 << joined.n) - 1
            start = 0
            for g in graphs:
                block = ((1 << g.n) - 1) << start
                for v in range(start, start + g.n):
                    rows[v] |= full & ~block
                start += g.n
            return Graph(joined.n, tuple(rows))
        case Named():
            from .constructions import expand_named

            return _materialize(expand_named(expr))
    raise TypeError(f"not a construction expression: {expr!r}")


def _check_size(m: int) -> None:
    if m < 0:
        raise ValueError("negative size parameter")


def _disjoint_union(graphs: list[Graph]) -> Graph:
    rows: list[int] = []
    offset = 0
    for g in graphs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(offset, tuple(rows))


# --- graph6 ------------------------------------------------------------------

def encode_graph6(g: Graph) -> str:
    """Encode the labelled graph in the graph6 text format."""
    if g.n > GRAPH6_MAX_N:
        raise SizeLimitError("graph too large for graph6")
    nbits = g.n * (g.n - 1) // 2
    groups = bytearray((nbits + 5) // 6)
    for j in range(1, g.n):
        base = j * (j - 1) // 2  # stream position of pair (0, j)
        for i in _bits(g.adj[j] & ((1 << j) - 1)):
            pos = base + i
            groups[pos // 6] |= 1 << (5 - pos % 6)
    return _encode_g6_size(g.n) + "".join(chr(group + 63) for group in groups)


def _encode_g6_size(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258_047:
        return "~" + "".join(chr((n >> shift & 63) + 63) for shift in (12, 6, 0))
    return "~~" + "".join(chr((n >> shift & 63) + 63) for shift in (30, 24, 18, 12, 6, 0))


def decode_graph6(text: str) -> Graph:
    """Decode one graph6 line; strict about padding and trailing bytes."""
    data = text.rstrip("\n")
    if data.startswith(">>graph6<<"):
        data = data[len(">>graph6<<"):]
    if not data:
        raise Graph6Error("empty graph6 string")
    values = []
    for ch in data:
        code = ord(ch) - 63
        if not 0 <= code <= 63:
            raise Graph6Error(f"byte {ch!r} outside graph6 alphabet")
        values.append(code)
    n, pos = _decode_g6_size(values, data)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    if len(values) - pos < need:
        raise Graph6Error("truncated graph6 bit section")
    if len(values) - pos > need:
        raise Graph6Error("trailing bytes after graph6 bit section")
    if need and values[pos + need - 1] & ((1 << (need * 6 - nbits)) - 1):
        raise Graph6Error("nonzero padding bits")
    rows = [0] * n
    for k in range(need):
        group = values[pos + k]
        if not group:
            continue
        base = k * 6
        for offset in range(6):
            if group >> (5 - offset) & 1:
                i, j = _pair_of_position(base + offset)
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def _pair_of_position(pos: int) -> tuple[int, int]:
    """Inverse of the graph6 bit layout: position j(j-1)/2 + i holds pair (i, j)."""
    j = (isqrt(8 * pos + 1) + 1) // 2
    return pos - j * (j - 1) // 2, j


def _decode_g6_size(values: list[int], data: str) -> tuple[int, int]:
    if values[0] != 63:
        return values[0], 1
    if len(values) >= 2 and values[1] != 63:
        if len(values) < 4:
            raise Graph6Error("truncated graph6 size header")
        return values[1] << 12 | values[2] << 6 | values[3], 4
    if len(values) < 8:
        raise Graph6Error("truncated graph6 size header")
    n = 0
    for code in values[2:8]:
        n = n << 6 | code
    return n, 8


# --- connectivity ------------------------------------------------------------

def component_masks(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, ordered by least vertex."""
    seen = 0
    out = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            grown = comp
            for u in _bits(frontier):
                grown |= g.adj[u]
            frontier = grown & ~comp
            comp = grown
        seen |= comp
        out.append(comp)
    return out


def components(g: Graph) -> list[list[int]]:
    """Partition of the vertex set into sorted connected components."""
    return [list(_bits(mask)) for mask in component_masks(g)]
