"""Extremal constructions for path-forbidden, matching-bounded problems,
plus closed-form clique counting over construction expressions.

The named constructions G1/G2 are the candidates when forbidding an even
path P_{2p}; G3..G6 when forbidding an odd path P_{2p+1}.  Every one is the
disjoint union of a K_{p-1} joined to an independent set with a packing of
small cliques, sized so the matching number stays at most s.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .graphs import (
    Clique,
    ConstructionExpr,
    Cycle,
    Graph,
    GraphLeaf,
    Independent,
    Join,
    Named,
    Path,
    Turan,
    Union,
    turan_parts,
)
from .subgraphs import CliqueVector, canonical_form, clique_vector, independent_deletion_family

NAMED_IDS = ("G1", "G2", "G3", "G4", "G5", "G6")


class ApplicabilityError(ValueError):
    """Construction parameters outside the defined range."""


@dataclass(frozen=True)
class EvenPathParams:
    """Decomposition s-p+1 = a(p-1) + b with 0 <= b <= p-2."""

    p: int
    s: int
    a: int
    b: int


@dataclass(frozen=True)
class OddPathParams:
    """Both decompositions of s-p+1: by p-1 (quotient q, rest t) and by p
    (quotient c, rest d)."""

    p: int
    s: int
    q: int
    t: int
    c: int
    d: int


def _check_ps(p: int, s: int) -> None:
    if p < 2:
        raise ApplicabilityError("constructions need p >= 2")
    if s < p:
        raise ApplicabilityError("constructions need s >= p")


def even_path_params(p: int, s: int) -> EvenPathParams:
    _check_ps(p, s)
    a = (s - p + 1) // (p - 1)
    b = s - (a + 1) * (p - 1)
    assert s - p + 1 == a * (p - 1) + b and 0 <= b <= p - 2
    return EvenPathParams(p=p, s=s, a=a, b=b)


def odd_path_params(p: int, s: int) -> OddPathParams:
    _check_ps(p, s)
    q = (s - p + 1) // (p - 1)
    t = s - (q + 1) * (p - 1)
    c = (s - p + 1) // p
    d = s - p + 1 - c * p
    assert 0 <= t <= p - 2 and 0 <= d <= p - 1
    return OddPathParams(p=p, s=s, q=q, t=t, c=c, d=d)


def _star_part(p: int, hub_tail: ConstructionExpr | None, i_size: int) -> ConstructionExpr:
    inner: ConstructionExpr = Independent(i_size)
    if hub_tail is not None:
        inner = Union((hub_tail, inner))
    return Join((Clique(p - 1), inner))


def _named_parts(id: str, p: int, s: int) -> tuple[list[ConstructionExpr], int]:
    """Fixed parts of the construction plus the K_{p-1}-joined independent
    part's size deficit (total vertices minus the free independent size)."""
    if id in ("G1", "G2"):
        par = even_path_params(p, s)
        fixed: list[ConstructionExpr] = [Clique(2 * p - 1)] * par.a
        if id == "G2":
            fixed.append(Clique(2 * par.b + 1))
    else:
        par = odd_path_params(p, s)
        if id == "G3":
            fixed = [Clique(2 * p - 1)] * par.q
            fixed.append(Clique(2 * par.t + 1))
        elif id == "G4":
            fixed = [Clique(2 * p)] * par.c
            if par.d != 0:
                fixed.append(Clique(2 * par.d + 1))
        elif id == "G5":
            if not 1 <= par.d <= p - 2:
                raise ApplicabilityError("G5 needs 1 <= d <= p-2")
            x = par.c + par.d + 1 - p
            if x < 0:
                raise ApplicabilityError("G5 needs c+d+1-p >= 0")
            fixed = [Clique(2 * p)] * x + [Clique(2 * p - 1)] * (p - par.d)
        elif id == "G6":
            if not 1 <= par.d <= p - 1:
                raise ApplicabilityError("G6 needs 1 <= d <= p-1")
            fixed = [Clique(2 * p)] * par.c
        else:
            raise ApplicabilityError(f"unknown construction id {id!r}")
    deficit = (p - 1) + sum(part.m for part in fixed)  # type: ignore[union-attr]
    if id == "G6":
        deficit += 2  # the K_2 inside the join
    return fixed, deficit


def named_min_order(id: str, p: int, s: int) -> int:
    """Smallest n for which the construction is defined."""
    return _named_parts(id, p, s)[1]


def build_named(id: str, p: int, s: int, n: int) -> ConstructionExpr:
    """Expression for construction G1..G6 on exactly n vertices."""
    fixed, deficit = _named_parts(id, p, s)
    i_size = n - deficit
    if i_size < 0:
        raise ApplicabilityError(
            f"{id}(p={p}, s={s}) needs n >= {deficit}, got {n}"
        )
    star = _star_part(p, Clique(2) if id == "G6" else None, i_size)
    return Union(tuple([star] + fixed))


def expand_named(named: Named) -> ConstructionExpr:
    return build_named(named.id, named.p, named.s, named.n)


def hub_expr(d: Graph, m: int) -> ConstructionExpr:
    """Expression for D joined to an independent set of size m."""
    if m < 0:
        raise ValueError("independent part size must be nonnegative")
    return Join((GraphLeaf(d), Independent(m)))


# --- clique-vector algebra ----------------------------------------------------

def _leaf_vector(expr: ConstructionExpr, rmax: int) -> list[int]:
    match expr:
        case Clique(m):
            return [comb(m, i) for i in range(rmax + 1)]
        case Independent(m):
            out = [0] * (rmax + 1)
            out[0] = 1
            if rmax >= 1:
                out[1] = m
            return out
        case Path(m):
            out = [0] * (rmax + 1)
            out[0] = 1
            if rmax >= 1:
                out[1] = m
            if rmax >= 2:
                out[2] = max(m - 1, 0)
            return out
        case Cycle(m):
            if m < 3:
                raise ValueError("cycle needs at least 3 vertices")
            out = [0] * (rmax + 1)
            out[0] = 1
            if rmax >= 1:
                out[1] = m
            if rmax >= 2:
                out[2] = m
            if rmax >= 3 and m == 3:
                out[3] = 1
            return out
        case Turan(k, m):
            # elementary symmetric sums of the part sizes
            poly = [1]
            for size in turan_parts(k, m):
                poly = [
                    (poly[i] if i < len(poly) else 0)
                    + (poly[i - 1] * size if i >= 1 else 0)
                    for i in range(min(len(poly) + 1, rmax + 1))
                ]
            return poly + [0] * (rmax + 1 - len(poly))
    raise TypeError(f"not a leaf: {expr!r}")


def _vector_of(expr: ConstructionExpr, rmax: int) -> list[int]:
    match expr:
        case Union(parts):
            out = [0] * (rmax + 1)
            for part in parts:
                vec = _vector_of(part, rmax)
                for i in range(rmax + 1):
                    out[i] += vec[i]
            out[0] = 1
            return out
        case Join(parts):
            out = [1] + [0] * rmax
            for part in parts:
                vec = _vector_of(part, rmax)
                out = [
                    sum(out[i] * vec[k - i] for i in range(k + 1))
                    for k in range(rmax + 1)
                ]
            return out
        case GraphLeaf(graph):
            return list(clique_vector(graph, rmax).counts)
        case Named():
            return _vector_of(expand_named(expr), rmax)
        case _:
            return _leaf_vector(expr, rmax)


def clique_vector_of_expr(expr: ConstructionExpr, rmax: int) -> CliqueVector:
    """Closed-form clique counts: unions add pointwise (with c_0 refixed to 1),
    joins convolve."""
    if rmax < 0:
        raise ValueError("rmax must be nonnegative")
    return CliqueVector(tuple(_vector_of(expr, rmax)), rmax)


def expr_clique_count(expr: ConstructionExpr, r: int) -> int:
    return clique_vector_of_expr(expr, r).counts[r]


# --- bipartite bounds ----------------------------------------------------------

def bipartite_clique_bounds(p: int, q: int, s: int, r: int, n: int) -> tuple[int, int]:
    """Lower/upper bounds for the r-clique maximum when forbidding a bipartite
    graph with colour-class sizes p <= q together with matchings above s."""
    if p < 2:
        raise ApplicabilityError("bounds support p >= 2 only")
    if q < p:
        raise ApplicabilityError("needs q >= p")
    if s < p:
        raise ApplicabilityError("needs p <= s")
    if n < p - 1:
        raise ApplicabilityError("n too small")
    t = comb(2 * s, p) * (q - 1) + 2 * s + 1 - p
    lower = comb(p - 1, r) + comb(p - 1, r - 1) * (n - p + 1)
    upper = comb(t + p - 1, r) + comb(p - 1, r - 1) * (n - t - p + 1)
    return lower, upper


# --- extremal hub graphs --------------------------------------------------------

DELETION_SEARCH_MAX_S = 8


def deletion_extremal(s: int, r: int, f: Graph) -> Graph:
    """Among s-vertex graphs avoiding every independent-set deletion of f,
    one maximizing the K_{r-1} count, then the K_r count; ties broken by
    minimal canonical form."""
    from .graphs import SizeLimitError
    from .search import ForbiddenSpec, ex_search

    if s > DELETION_SEARCH_MAX_S:
        raise SizeLimitError(f"deletion-extremal search capped at s <= {DELETION_SEARCH_MAX_S}")
    family = independent_deletion_family(f)
    record = ex_search(s, r - 1, ForbiddenSpec(subgraphs=tuple(family)), cap=DELETION_SEARCH_MAX_S)
    from .subgraphs import count_cliques as _count

    best = None
    best_key = None
    for w in record.witnesses:
        key = (-_count(w, r), canonical_form(w).key)
        if best_key is None or key < best_key:
            best_key = key
            best = w
    assert best is not None
    return best
