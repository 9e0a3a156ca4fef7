"""Pure-Python kernels.

Reference implementation of every hot operation.  The compiled backend in
``_fast.pyx`` mirrors these functions bit for bit (same traversal orders,
same node counts, same PRNG); parity is enforced by tests.  Adjacency is
passed as a sequence of Python-int bitmasks, so these functions work at any
vertex count, just slowly.
"""

from __future__ import annotations

from typing import Sequence

BACKEND_NAME = "pure"

_M64 = (1 << 64) - 1


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def edge_slots(n: int) -> list[tuple[int, int]]:
    """Edge decision order: lexicographic by (min endpoint, max endpoint)."""
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def adj_from_mask(n: int, mask: int) -> list[int]:
    """Adjacency rows of the labelled graph whose edge set is ``mask``
    over :func:`edge_slots` order."""
    rows = [0] * n
    for k, (i, j) in enumerate(edge_slots(n)):
        if mask >> k & 1:
            rows[i] |= 1 << j
            rows[j] |= 1 << i
    return rows


# --- maximum matching --------------------------------------------------------

def _find_augmenting(adj: Sequence[int], n: int, match: list[int], root: int) -> bool:
    used = [False] * n
    parent = [-1] * n
    base = list(range(n))
    used[root] = True
    queue = [root]
    head = 0
    while head < len(queue):
        v = queue[head]
        head += 1
        row = adj[v]
        while row:
            low = row & -row
            to = low.bit_length() - 1
            row ^= low
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                cur = _blossom_lca(match, base, parent, v, to)
                blossom = [False] * n
                _mark_blossom_path(match, base, parent, blossom, v, cur, to)
                _mark_blossom_path(match, base, parent, blossom, to, cur, v)
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = cur
                        if not used[i]:
                            used[i] = True
                            queue.append(i)
            elif parent[to] == -1:
                parent[to] = v
                if match[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        nxt = match[pv]
                        match[to] = pv
                        match[pv] = to
                        to = nxt
                    return True
                used[match[to]] = True
                queue.append(match[to])
    return False


def _blossom_lca(match, base, parent, a, b) -> int:
    seen = set()
    a = base[a]
    while True:
        seen.add(a)
        if match[a] == -1:
            break
        a = base[parent[match[a]]]
    b = base[b]
    while b not in seen:
        b = base[parent[match[b]]]
    return b


def _mark_blossom_path(match, base, parent, blossom, v, stem, child) -> None:
    while base[v] != stem:
        blossom[base[v]] = True
        blossom[base[match[v]]] = True
        parent[v] = child
        child = match[v]
        v = parent[match[v]]


def blossom_matching(adj: Sequence[int], n: int) -> list[int]:
    """Maximum matching as a match array (-1 for exposed vertices)."""
    match = [-1] * n
    for v in range(n):
        if match[v] == -1 and adj[v]:
            _find_augmenting(adj, n, match, v)
    return match


def nu_blossom(adj: Sequence[int], n: int) -> int:
    return sum(1 for v in blossom_matching(adj, n) if v != -1) // 2


def nu_bitmask(adj: Sequence[int], n: int) -> int:
    """Matching number by DP over vertex subsets; independent of blossom."""
    if n == 0:
        return 0
    dp = bytearray(1 << n)
    for mask in range(1, 1 << n):
        low = mask & -mask
        v = low.bit_length() - 1
        rest = mask ^ low
        best = dp[rest]
        row = adj[v] & rest
        while row:
            lu = row & -row
            u = lu.bit_length() - 1
            row ^= lu
            cand = 1 + dp[rest ^ lu]
            if cand > best:
                best = cand
        dp[mask] = best
    return dp[-1]


# --- cliques -----------------------------------------------------------------

def count_cliques(adj: Sequence[int], n: int, r: int) -> int:
    if r < 0:
        raise ValueError("clique order must be nonnegative")
    if r == 0:
        return 1
    if r == 1:
        return n
    return _cliques_in(adj, (1 << n) - 1, r)


def _cliques_in(adj: Sequence[int], cand: int, need: int) -> int:
    total = 0
    while cand:
        if cand.bit_count() < need:
            break
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if need == 1:
            total += 1
        else:
            total += _cliques_in(adj, adj[v] & cand, need - 1)
    return total


def clique_profile(adj: Sequence[int], n: int, rmax: int) -> list[int]:
    """Counts of K_0..K_rmax in one clique-tree walk."""
    counts = [0] * (rmax + 1)
    counts[0] = 1
    if rmax == 0:
        return counts

    def extend(cand: int, size: int) -> None:
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            counts[size + 1] += 1
            nxt = adj[v] & cand
            if nxt and size + 1 < rmax:
                extend(nxt, size + 1)

    extend((1 << n) - 1, 0)
    return counts


# --- longest path ------------------------------------------------------------

def longest_path_in_component(adj: Sequence[int], k: int) -> int:
    """Longest path order on a connected (re-indexed) graph, k <= 24."""
    if k == 0:
        return 0
    reach = [0] * (1 << k)
    for v in range(k):
        reach[1 << v] = 1 << v
    best = 1
    for mask in range(1, 1 << k):
        ends = reach[mask]
        if not ends:
            continue
        size = mask.bit_count()
        if size > best:
            best = size
        e = ends
        while e:
            low = e & -e
            v = low.bit_length() - 1
            e ^= low
            ext = adj[v] & ~mask
            while ext:
                lu = ext & -ext
                u = lu.bit_length() - 1
                ext ^= lu
                reach[mask | lu] |= lu
    return best


# --- subgraph containment ----------------------------------------------------

def _pattern_order(adj_h: Sequence[int], n_h: int, seed: tuple[int, ...] = ()):
    """Greedy connectivity-first vertex order plus per-level requirement masks."""
    order = list(seed)
    placed = 0
    for v in seed:
        placed |= 1 << v
    while len(order) < n_h:
        best_v = -1
        best_key = (-1, -1, 1)
        for v in range(n_h):
            if placed >> v & 1:
                continue
            key = ((adj_h[v] & placed).bit_count(), adj_h[v].bit_count(), -v)
            if key > best_key:
                best_key = key
                best_v = v
        order.append(best_v)
        placed |= 1 << best_v
    index = {v: i for i, v in enumerate(order)}
    req = []
    for i, v in enumerate(order):
        mask = 0
        for u in _bits(adj_h[v]):
            if index[u] < i:
                mask |= 1 << index[u]
        req.append(mask)
    degs = [adj_h[v].bit_count() for v in order]
    return req, degs


def _embed(adj_g: Sequence[int], n_g: int, req, degs, placed: list[int], level: int, used: int) -> bool:
    if level == len(req):
        return True
    cand = ((1 << n_g) - 1) & ~used
    need = req[level]
    while need:
        low = need & -need
        need ^= low
        cand &= adj_g[placed[low.bit_length() - 1]]
    deg = degs[level]
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        cand ^= low
        if adj_g[v].bit_count() >= deg:
            placed[level] = v
            if _embed(adj_g, n_g, req, degs, placed, level + 1, used | low):
                return True
    return False


def contains(adj_g: Sequence[int], n_g: int, adj_h: Sequence[int], n_h: int) -> bool:
    """Non-induced subgraph containment, backtracking with degree pruning."""
    if n_h == 0:
        return True
    if n_h > n_g:
        return False
    req, degs = _pattern_order(adj_h, n_h)
    return _embed(adj_g, n_g, req, degs, [0] * n_h, 0, 0)


def count_injections(adj_g: Sequence[int], n_g: int, adj_h: Sequence[int], n_h: int) -> int:
    """Number of injective edge-preserving maps from the pattern into the host."""
    if n_h == 0:
        return 1
    if n_h > n_g:
        return 0
    req, degs = _pattern_order(adj_h, n_h)
    placed = [0] * n_h
    total = 0

    def rec(level: int, used: int) -> None:
        nonlocal total
        if level == n_h:
            total += 1
            return
        cand = ((1 << n_g) - 1) & ~used
        need = req[level]
        while need:
            low = need & -need
            need ^= low
            cand &= adj_g[placed[low.bit_length() - 1]]
        deg = degs[level]
        while cand:
            low = cand & -cand
            v = low.bit_length() - 1
            cand ^= low
            if adj_g[v].bit_count() >= deg:
                placed[level] = v
                rec(level + 1, used | low)

    rec(0, 0)
    return total


# --- deterministic PRNG (shared with the compiled backend) --------------------

def splitmix64(state: int) -> tuple[int, int]:
    state = (state + 0x9E3779B97F4A7C15) & _M64
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return state, z ^ (z >> 31)


def random_edge_mask(state: int, nbits: int) -> tuple[int, int]:
    mask = 0
    shift = 0
    while shift < nbits:
        state, word = splitmix64(state)
        mask |= word << shift
        shift += 64
    return state, mask & ((1 << nbits) - 1)


# --- Tutte-Berge -------------------------------------------------------------

def _components_within(adj: Sequence[int], inside: int) -> list[int]:
    out = []
    seen = 0
    rest = inside
    while rest:
        low = rest & -rest
        comp = low
        frontier = low
        while frontier:
            grown = comp
            f = frontier
            while f:
                lu = f & -f
                f ^= lu
                grown |= adj[lu.bit_length() - 1] & inside
            frontier = grown & ~comp
            comp = grown
        seen |= comp
        rest = inside & ~seen
        out.append(comp)
    return out


def tb_value_of_set(adj: Sequence[int], inside: int, bsize: int) -> int | None:
    """|B| + sum (|C|-1)/2 over components of G-B, or None if some |C| is even."""
    total = bsize
    for comp in _components_within(adj, inside):
        size = comp.bit_count()
        if size % 2 == 0:
            return None
        total += (size - 1) // 2
    return total


def tb_minimum(adj: Sequence[int], n: int) -> int:
    full = (1 << n) - 1
    best = n
    for bmask in range(1 << n):
        val = tb_value_of_set(adj, full & ~bmask, bmask.bit_count())
        if val is not None and val < best:
            best = val
    return best


# --- exhaustive / sampled scans ----------------------------------------------

def scan_matching_equality(n: int) -> tuple[int, int, int]:
    """Blossom vs subset-DP over every labelled graph on n vertices.

    Returns (graphs checked, mismatches, first mismatching edge mask).
    """
    slots = n * (n - 1) // 2
    mismatches = 0
    first_bad = -1
    for mask in range(1 << slots):
        adj = adj_from_mask(n, mask)
        if nu_blossom(adj, n) != nu_bitmask(adj, n):
            mismatches += 1
            if first_bad < 0:
                first_bad = mask
    return (1 << slots), mismatches, first_bad


def scan_matching_equality_random(n: int, samples: int, seed: int) -> tuple[int, int, int]:
    slots = n * (n - 1) // 2
    state = seed
    mismatches = 0
    first_bad = -1
    for _ in range(samples):
        state, mask = random_edge_mask(state, slots)
        adj = adj_from_mask(n, mask)
        if nu_blossom(adj, n) != nu_bitmask(adj, n):
            mismatches += 1
            if first_bad < 0:
                first_bad = mask
    return samples, mismatches, first_bad


def scan_tutte_berge(n: int, samples: int, seed: int) -> tuple[int, int, int]:
    """Minimum Tutte-Berge value vs blossom; samples=0 means exhaustive."""
    slots = n * (n - 1) // 2
    mismatches = 0
    first_bad = -1
    if samples == 0:
        masks = range(1 << slots)
        checked = 1 << slots
        for mask in masks:
            adj = adj_from_mask(n, mask)
            if tb_minimum(adj, n) != nu_blossom(adj, n):
                mismatches += 1
                if first_bad < 0:
                    first_bad = mask
        return checked, mismatches, first_bad
    state = seed
    for _ in range(samples):
        state, mask = random_edge_mask(state, slots)
        adj = adj_from_mask(n, mask)
        if tb_minimum(adj, n) != nu_blossom(adj, n):
            mismatches += 1
            if first_bad < 0:
                first_bad = mask
    return samples, mismatches, first_bad


def _is_connected(adj: Sequence[int], n: int) -> bool:
    if n == 0:
        return True
    comp = 1
    frontier = 1
    while frontier:
        grown = comp
        f = frontier
        while f:
            low = f & -f
            f ^= low
            grown |= adj[low.bit_length() - 1]
        frontier = grown & ~comp
        comp = grown
    return comp == (1 << n) - 1


def scan_path_degree_bound(n: int) -> tuple[int, int, int]:
    """Longest-path endpoint degree bound over all connected labelled graphs.

    For each connected graph and each endpoint pair (u, v) of a longest path,
    checks order >= min(n, d(u)+d(v)+1).  Returns (graphs, violations, first).
    """
    slots = n * (n - 1) // 2
    checked = 0
    violations = 0
    first_bad = -1
    size = 1 << n
    for mask in range(1 << slots):
        adj = adj_from_mask(n, mask)
        if not _is_connected(adj, n):
            continue
        checked += 1
        reach = [0] * size
        for v in range(n):
            reach[1 << v] = 1 << v
        best = 1
        for sub in range(1, size):
            ends = reach[sub]
            if not ends:
                continue
            if sub.bit_count() > best:
                best = sub.bit_count()
            e = ends
            while e:
                low = e & -e
                v = low.bit_length() - 1
                e ^= low
                ext = adj[v] & ~sub
                while ext:
                    lu = ext & -ext
                    ext ^= lu
                    reach[sub | lu] |= lu
        if best == n:
            continue
        # endpoint pairs need the start-tracking DP
        starts = [[0] * n for _ in range(size)]
        for v in range(n):
            starts[1 << v][v] = 1 << v
        for sub in range(1, size):
            ends = reach[sub]
            if not ends:
                continue
            row = starts[sub]
            e = ends
            while e:
                low = e & -e
                v = low.bit_length() - 1
                e ^= low
                sv = row[v]
                ext = adj[v] & ~sub
                while ext:
                    lu = ext & -ext
                    u = lu.bit_length() - 1
                    ext ^= lu
                    starts[sub | lu][u] |= sv
        bad = False
        for sub in range(1, size):
            if bad:
                break
            if sub.bit_count() != best or not reach[sub]:
                continue
            row = starts[sub]
            for v in _bits(reach[sub]):
                dv = adj[v].bit_count()
                for u in _bits(row[v]):
                    if best < min(n, adj[u].bit_count() + dv + 1):
                        bad = True
                        break
                if bad:
                    break
        if bad:
            violations += 1
            if first_bad < 0:
                first_bad = mask
    return checked, violations, first_bad


def scan_component_cliqueify(n: int) -> tuple[int, int, int]:
    """Replacing a spanning-path component by a clique must preserve nu."""
    slots = n * (n - 1) // 2
    instances = 0
    violations = 0
    first_bad = -1
    for mask in range(1 << slots):
        adj = adj_from_mask(n, mask)
        comps = _components_within(adj, (1 << n) - 1)
        nu_g = None
        for comp in comps:
            k = comp.bit_count()
            if k == 1:
                spanned = True
            else:
                verts = list(_bits(comp))
                index = {v: i for i, v in enumerate(verts)}
                local = [0] * k
                for v in verts:
                    for u in _bits(adj[v] & comp):
                        local[index[v]] |= 1 << index[u]
                spanned = longest_path_in_component(local, k) == k
            if not spanned:
                continue
            instances += 1
            if nu_g is None:
                nu_g = nu_blossom(adj, n)
            rows = list(adj)
            for v in _bits(comp):
                rows[v] = comp & ~(1 << v)
            if nu_blossom(rows, n) != nu_g:
                violations += 1
                if first_bad < 0:
                    first_bad = mask
    return instances, violations, first_bad


def scan_component_rewire(n: int) -> tuple[int, int, int]:
    """Rewiring an outside vertex onto a perfectly-matched even component
    must not increase nu."""
    slots = n * (n - 1) // 2
    instances = 0
    violations = 0
    first_bad = -1
    for mask in range(1 << slots):
        adj = adj_from_mask(n, mask)
        comps = _components_within(adj, (1 << n) - 1)
        nu_g = None
        for comp in comps:
            k = comp.bit_count()
            if k % 2 or k == 0:
                continue
            verts = list(_bits(comp))
            index = {v: i for i, v in enumerate(verts)}
            local = [0] * k
            for v in verts:
                for u in _bits(adj[v] & comp):
                    local[index[v]] |= 1 << index[u]
            if nu_bitmask(local, k) != k // 2:
                continue
            if nu_g is None:
                nu_g = nu_blossom(adj, n)
            outside = ((1 << n) - 1) & ~comp
            while outside:
                low = outside & -outside
                w = low.bit_length() - 1
                outside ^= low
                instances += 1
                rows = list(adj)
                for v in _bits(rows[w]):
                    rows[v] &= ~low
                rows[w] = comp
                for v in _bits(comp):
                    rows[v] |= low
                if nu_blossom(rows, n) > nu_g:
                    violations += 1
                    if first_bad < 0:
                        first_bad = mask
    return instances, violations, first_bad


# --- the extremal search -----------------------------------------------------

class _SearchState:
    """Mutable DFS state shared by the search entry points."""

    def __init__(self, n, r, patterns, s_bound, witness_cap):
        self.n = n
        self.r = r
        self.s_bound = s_bound
        self.witness_cap = witness_cap
        self.pairs = edge_slots(n)
        self.rows = [0] * n
        self.match = [-1] * n
        self.nu = 0
        self.count = 1 if r == 0 else (n if r == 1 else 0)
        self.edge_mask = 0
        self.nodes = 0
        self.best = -1
        self.witnesses: list[int] = []
        self.truncated = False
        self.plans = []
        for adj_h, n_h in patterns:
            if n_h > n:
                continue
            plans = []
            seen_anchors = set()
            for a in range(n_h):
                for b in _bits(adj_h[a]):
                    req, degs = _pattern_order(adj_h, n_h, seed=(a, b))
                    key = (tuple(req), tuple(degs))
                    if key in seen_anchors:
                        continue
                    seen_anchors.add(key)
                    plans.append((req, degs))
            self.plans.append((n_h, plans))

    def load_prefix(self, prefix_mask: int, depth: int) -> None:
        self.edge_mask = prefix_mask
        for k in range(depth):
            if prefix_mask >> k & 1:
                i, j = self.pairs[k]
                self.rows[i] |= 1 << j
                self.rows[j] |= 1 << i
        self.count = count_cliques(self.rows, self.n, self.r)
        if self.s_bound is not None:
            self.match = blossom_matching(self.rows, self.n)
            self.nu = sum(1 for v in self.match if v != -1) // 2

    def new_edge_makes_pattern(self, u: int, v: int) -> bool:
        rows = self.rows
        n = self.n
        for n_h, plans in self.plans:
            for req, degs in plans:
                if rows[u].bit_count() < degs[0] or rows[v].bit_count() < degs[1]:
                    continue
                placed = [0] * n_h
                placed[0] = u
                placed[1] = v
                if n_h == 2 or _embed(rows, n, req, degs, placed, 2, (1 << u) | (1 << v)):
                    return True
        return False

    def try_include(self, slot: int):
        """Add the slot's edge if it stays admissible; return undo info or None."""
        i, j = self.pairs[slot]
        rows = self.rows
        rows[i] |= 1 << j
        rows[j] |= 1 << i
        if self.new_edge_makes_pattern(i, j):
            rows[i] &= ~(1 << j)
            rows[j] &= ~(1 << i)
            return None
        saved_match = None
        saved_nu = self.nu
        if self.s_bound is not None:
            if self.match[i] == -1 and self.match[j] == -1:
                if self.nu + 1 > self.s_bound:
                    rows[i] &= ~(1 << j)
                    rows[j] &= ~(1 << i)
                    return None
                saved_match = list(self.match)
                self.match[i] = j
                self.match[j] = i
                self.nu += 1
            else:
                saved_match = list(self.match)
                augmented = False
                for v in range(self.n):
                    if self.match[v] == -1 and rows[v]:
                        if _find_augmenting(rows, self.n, self.match, v):
                            augmented = True
                            break
                if augmented:
                    if self.nu + 1 > self.s_bound:
                        self.match = saved_match
                        rows[i] &= ~(1 << j)
                        rows[j] &= ~(1 << i)
                        return None
                    self.nu += 1
        delta = self.cliques_through(i, j)
        self.count += delta
        self.edge_mask |= 1 << slot
        return delta, saved_match, saved_nu

    def undo_include(self, slot: int, undo) -> None:
        delta, saved_match, saved_nu = undo
        i, j = self.pairs[slot]
        self.rows[i] &= ~(1 << j)
        self.rows[j] &= ~(1 << i)
        self.count -= delta
        self.edge_mask &= ~(1 << slot)
        if saved_match is not None:
            self.match = saved_match
            self.nu = saved_nu

    def cliques_through(self, i: int, j: int) -> int:
        if self.r < 2:
            return 0
        if self.r == 2:
            return 1
        common = self.rows[i] & self.rows[j]
        return _cliques_in(self.rows, common, self.r - 2)


def _future_rows(n: int, start_slot: int) -> list[int]:
    """Edges of every slot from ``start_slot`` on (start_slot itself included:
    it is still undecided when the bound is evaluated)."""
    rows = [0] * n
    for i, j in edge_slots(n)[start_slot:]:
        rows[i] |= 1 << j
        rows[j] |= 1 << i
    return rows


def search_subtree(
    n: int,
    r: int,
    patterns,
    s_bound,
    prefix_mask: int,
    depth: int,
    ub_prune: bool = False,
    witness_cap: int = 1 << 20,
):
    """Exhaust the subtree below a prefix assignment of the first ``depth``
    edge slots.  Returns (value, witness edge masks, nodes, truncated)."""
    state = _SearchState(n, r, patterns, s_bound, witness_cap)
    state.load_prefix(prefix_mask, depth)
    total = len(state.pairs)
    future = [_future_rows(n, slot) for slot in range(total)] if ub_prune else None

    def rec(slot: int) -> None:
        state.nodes += 1
        if slot == total:
            if state.count > state.best:
                state.best = state.count
                state.witnesses = [state.edge_mask]
                state.truncated = False
            elif state.count == state.best:
                if len(state.witnesses) < state.witness_cap:
                    state.witnesses.append(state.edge_mask)
                else:
                    state.truncated = True
            return
        if ub_prune and state.best >= 0:
            opt = [state.rows[v] | future[slot][v] for v in range(n)]
            if count_cliques(opt, n, r) < state.best:
                return
        undo = state.try_include(slot)
        if undo is not None:
            rec(slot + 1)
            state.undo_include(slot, undo)
        rec(slot + 1)

    rec(depth)
    return state.best, state.witnesses, state.nodes, state.truncated


def search_prefixes(n: int, patterns, s_bound, depth: int):
    """All admissible assignments of the first ``depth`` edge slots, in
    include-first DFS order.  Returns (prefix masks, nodes)."""
    state = _SearchState(n, 0, patterns, s_bound, 0)
    depth = min(depth, len(state.pairs))
    out: list[int] = []
    nodes = 0

    def rec(slot: int) -> None:
        nonlocal nodes
        nodes += 1
        if slot == depth:
            out.append(state.edge_mask)
            return
        undo = state.try_include(slot)
        if undo is not None:
            rec(slot + 1)
            state.undo_include(slot, undo)
        rec(slot + 1)

    rec(0)
    return out, nodes


def count_admissible(n: int, patterns, s_bound) -> int:
    """Number of admissible labelled graphs on n vertices."""
    masks, _ = search_prefixes(n, patterns, s_bound, n * (n - 1) // 2)
    return len(masks)
