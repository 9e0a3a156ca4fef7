# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels.

Bit-for-bit mirror of ``pure.py`` for graphs small enough for machine words
(the pure module remains the fallback for anything larger): same traversal
orders, same node counts, same PRNG streams.  Parity is enforced by tests.
"""

from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memcpy, memset

from . import pure

BACKEND_NAME = "fast"

ctypedef unsigned long long u64
ctypedef unsigned int u32
ctypedef long long i64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil


cdef inline int _popcount(u64 x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int _ctz(u64 x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline u64 _full_mask(int n) noexcept nogil:
    if n >= 64:
        return <u64>0xFFFFFFFFFFFFFFFF
    return ((<u64>1) << n) - 1


cdef inline u64 _splitmix_next(u64* state) noexcept nogil:
    cdef u64 z
    state[0] = state[0] + <u64>0x9E3779B97F4A7C15
    z = state[0]
    z = (z ^ (z >> 30)) * <u64>0xBF58476D1CE4E5B9
    z = (z ^ (z >> 27)) * <u64>0x94D049BB133111EB
    return z ^ (z >> 31)


cdef int _load_adj(object adj, int n, u64* out) except -1:
    if n > 64:
        raise OverflowError("compiled kernels handle at most 64 vertices")
    cdef int v
    for v in range(n):
        out[v] = <u64> adj[v]
    return 0


# --- maximum matching ----------------------------------------------------------

cdef int _find_augmenting(u64* adj, int n, signed char* match, int root) noexcept nogil:
    cdef int queue[64]
    cdef signed char parent[64]
    cdef signed char base[64]
    cdef bint used[64]
    cdef bint blossom[64]
    cdef bint seen[64]
    cdef int head = 0, tail = 0
    cdef int v, to, i, cur, a, b, child, nxt, pv
    cdef u64 row, low
    for v in range(n):
        used[v] = 0
        parent[v] = -1
        base[v] = <signed char> v
    used[root] = 1
    queue[tail] = root
    tail += 1
    while head < tail:
        v = queue[head]
        head += 1
        row = adj[v]
        while row:
            low = row & (~row + 1)
            to = _ctz(low)
            row ^= low
            if base[v] == base[to] or match[v] == to:
                continue
            if to == root or (match[to] != -1 and parent[match[to]] != -1):
                # locate the blossom stem
                for i in range(n):
                    seen[i] = 0
                a = base[v]
                while True:
                    seen[a] = 1
                    if match[a] == -1:
                        break
                    a = base[parent[match[a]]]
                b = base[to]
                while not seen[b]:
                    b = base[parent[match[b]]]
                cur = b
                for i in range(n):
                    blossom[i] = 0
                a = v
                child = to
                while base[a] != cur:
                    blossom[base[a]] = 1
                    blossom[base[match[a]]] = 1
                    parent[a] = <signed char> child
                    child = match[a]
                    a = parent[match[a]]
                a = to
                child = v
                while base[a] != cur:
                    blossom[base[a]] = 1
                    blossom[base[match[a]]] = 1
                    parent[a] = <signed char> child
                    child = match[a]
                    a = parent[match[a]]
                for i in range(n):
                    if blossom[base[i]]:
                        base[i] = <signed char> cur
                        if not used[i]:
                            used[i] = 1
                            queue[tail] = i
                            tail += 1
            elif parent[to] == -1:
                parent[to] = <signed char> v
                if match[to] == -1:
                    while to != -1:
                        pv = parent[to]
                        nxt = match[pv]
                        match[to] = <signed char> pv
                        match[pv] = <signed char> to
                        to = nxt
                    return 1
                used[match[to]] = 1
                queue[tail] = match[to]
                tail += 1
    return 0


cdef int _blossom_all(u64* adj, int n, signed char* match) noexcept nogil:
    cdef int v, size = 0
    for v in range(n):
        match[v] = -1
    for v in range(n):
        if match[v] == -1 and adj[v]:
            if _find_augmenting(adj, n, match, v):
                size += 1
    return size


def blossom_matching(adj, int n):
    if n > 64:
        return pure.blossom_matching(adj, n)
    cdef u64 rows[64]
    cdef signed char match[64]
    _load_adj(adj, n, rows)
    _blossom_all(rows, n, match)
    return [match[v] for v in range(n)]


def nu_blossom(adj, int n):
    if n > 64:
        return pure.nu_blossom(adj, n)
    cdef u64 rows[64]
    cdef signed char match[64]
    _load_adj(adj, n, rows)
    return _blossom_all(rows, n, match)


cdef int _nu_dp(u64* adj, int n, unsigned char* dp) noexcept nogil:
    cdef u64 size = (<u64>1) << n
    cdef u64 mask, rest, row, low, lu
    cdef int v
    cdef unsigned char best, cand
    dp[0] = 0
    mask = 1
    while mask < size:
        low = mask & (~mask + 1)
        v = _ctz(low)
        rest = mask ^ low
        best = dp[rest]
        row = adj[v] & rest
        while row:
            lu = row & (~row + 1)
            row ^= lu
            cand = <unsigned char> (1 + dp[rest ^ lu])
            if cand > best:
                best = cand
        dp[mask] = best
        mask += 1
    return dp[size - 1]


def nu_bitmask(adj, int n):
    if n > 24:
        return pure.nu_bitmask(adj, n)
    if n == 0:
        return 0
    cdef u64 rows[64]
    _load_adj(adj, n, rows)
    cdef unsigned char* dp = <unsigned char*> malloc((<size_t>1) << n)
    if dp == NULL:
        raise MemoryError()
    cdef int result
    try:
        with nogil:
            result = _nu_dp(rows, n, dp)
    finally:
        free(dp)
    return result


# --- cliques ---------------------------------------------------------------------

cdef u64 _cliques_in(u64* adj, u64 cand, int need) noexcept nogil:
    cdef u64 total = 0, low
    cdef int v
    while cand:
        if _popcount(cand) < need:
            break
        low = cand & (~cand + 1)
        v = _ctz(low)
        cand ^= low
        if need == 1:
            total += 1
        else:
            total += _cliques_in(adj, adj[v] & cand, need - 1)
    return total


def count_cliques(adj, int n, int r):
    if r < 0:
        raise ValueError("clique order must be nonnegative")
    if n > 64:
        return pure.count_cliques(adj, n, r)
    if r == 0:
        return 1
    if r == 1:
        return n
    cdef u64 rows[64]
    _load_adj(adj, n, rows)
    cdef u64 result
    cdef u64 full = _full_mask(n)
    with nogil:
        result = _cliques_in(rows, full, r)
    return result


cdef void _profile_extend(u64* adj, u64 cand, int size, int rmax, u64* counts) noexcept nogil:
    cdef u64 low, nxt
    cdef int v
    while cand:
        low = cand & (~cand + 1)
        v = _ctz(low)
        cand ^= low
        counts[size + 1] += 1
        nxt = adj[v] & cand
        if nxt and size + 1 < rmax:
            _profile_extend(adj, nxt, size + 1, rmax, counts)


def clique_profile(adj, int n, int rmax):
    if n > 64:
        return pure.clique_profile(adj, n, rmax)
    cdef u64 rows[64]
    _load_adj(adj, n, rows)
    cdef u64* counts = <u64*> malloc((rmax + 1) * sizeof(u64))
    if counts == NULL:
        raise MemoryError()
    cdef u64 full = _full_mask(n)
    cdef int i
    try:
        memset(counts, 0, (rmax + 1) * sizeof(u64))
        counts[0] = 1
        if rmax > 0:
            with nogil:
                _profile_extend(rows, full, 0, rmax, counts)
        return [counts[i] for i in range(rmax + 1)]
    finally:
        free(counts)


# --- longest path -----------------------------------------------------------------

cdef int _longest_path(u64* adj, int k, u32* reach) noexcept nogil:
    cdef u64 size = (<u64>1) << k
    cdef u64 mask
    cdef u32 ends, e, low, ext, lu
    cdef int v, best = 1, pc
    memset(reach, 0, size * sizeof(u32))
    for v in range(k):
        reach[(<u64>1) << v] = (<u32>1) << v
    mask = 1
    while mask < size:
        ends = reach[mask]
        if ends:
            pc = _popcount(mask)
            if pc > best:
                best = pc
            e = ends
            while e:
                low = e & (~e + 1)
                v = _ctz(low)
                e ^= low
                ext = (<u32> adj[v]) & (~(<u32> mask))
                while ext:
                    lu = ext & (~ext + 1)
                    ext ^= lu
                    reach[mask | lu] |= lu
        mask += 1
    return best


def longest_path_in_component(adj, int k):
    if k > 24:
        return pure.longest_path_in_component(adj, k)
    if k == 0:
        return 0
    cdef u64 rows[64]
    _load_adj(adj, k, rows)
    cdef u32* reach = <u32*> malloc(((<size_t>1) << k) * sizeof(u32))
    if reach == NULL:
        raise MemoryError()
    cdef int best
    try:
        with nogil:
            best = _longest_path(rows, k, reach)
    finally:
        free(reach)
    return best


# --- subgraph containment -----------------------------------------------------------

cdef bint _embed_c(u64* adjg, int ng, u64 fullg, u64* req, int* degs, int nh,
                   int level, u64 used, int* placed) noexcept nogil:
    if level == nh:
        return 1
    cdef u64 cand = fullg & ~used
    cdef u64 need = req[level], low
    cdef int v, deg = degs[level]
    while need:
        low = need & (~need + 1)
        need ^= low
        cand &= adjg[placed[_ctz(low)]]
    while cand:
        low = cand & (~cand + 1)
        v = _ctz(low)
        cand ^= low
        if _popcount(adjg[v]) >= deg:
            placed[level] = v
            if _embed_c(adjg, ng, fullg, req, degs, nh, level + 1, used | low, placed):
                return 1
    return 0


def contains(adj_g, int n_g, adj_h, int n_h):
    if n_g > 64 or n_h > 64:
        return pure.contains(adj_g, n_g, adj_h, n_h)
    if n_h == 0:
        return True
    if n_h > n_g:
        return False
    req_list, degs_list = pure._pattern_order(adj_h, n_h)
    cdef u64 rows[64]
    cdef u64 req[64]
    cdef int degs[64]
    cdef int placed[64]
    cdef int i
    _load_adj(adj_g, n_g, rows)
    for i in range(n_h):
        req[i] = <u64> req_list[i]
        degs[i] = degs_list[i]
    cdef u64 fullg = _full_mask(n_g)
    cdef bint found
    with nogil:
        found = _embed_c(rows, n_g, fullg, req, degs, n_h, 0, 0, placed)
    return bool(found)


cdef u64 _count_embeddings(u64* adjg, int ng, u64 fullg, u64* req, int* degs,
                           int nh, int level, u64 used, int* placed) noexcept nogil:
    if level == nh:
        return 1
    cdef u64 cand = fullg & ~used
    cdef u64 need = req[level], low
    cdef u64 total = 0
    cdef int v, deg = degs[level]
    while need:
        low = need & (~need + 1)
        need ^= low
        cand &= adjg[placed[_ctz(low)]]
    while cand:
        low = cand & (~cand + 1)
        v = _ctz(low)
        cand ^= low
        if _popcount(adjg[v]) >= deg:
            placed[level] = v
            total += _count_embeddings(adjg, ng, fullg, req, degs, nh, level + 1,
                                       used | low, placed)
    return total


def count_injections(adj_g, int n_g, adj_h, int n_h):
    if n_g > 64 or n_h > 64:
        return pure.count_injections(adj_g, n_g, adj_h, n_h)
    if n_h == 0:
        return 1
    if n_h > n_g:
        return 0
    req_list, degs_list = pure._pattern_order(adj_h, n_h)
    cdef u64 rows[64]
    cdef u64 req[64]
    cdef int degs[64]
    cdef int placed[64]
    cdef int i
    _load_adj(adj_g, n_g, rows)
    for i in range(n_h):
        req[i] = <u64> req_list[i]
        degs[i] = degs_list[i]
    cdef u64 fullg = _full_mask(n_g)
    cdef u64 total
    with nogil:
        total = _count_embeddings(rows, n_g, fullg, req, degs, n_h, 0, 0, placed)
    return total


# --- Tutte-Berge ---------------------------------------------------------------------

cdef int _tb_of_set(u64* adj, int n, u64 inside, int bsize) noexcept nogil:
    """Witness value of B, or -1 if some component of G-B is even."""
    cdef int total = bsize, size
    cdef u64 rest = inside, comp, frontier, grown, low, f
    while rest:
        low = rest & (~rest + 1)
        comp = low
        frontier = low
        while frontier:
            grown = comp
            f = frontier
            while f:
                low = f & (~f + 1)
                f ^= low
                grown |= adj[_ctz(low)] & inside
            frontier = grown & ~comp
            comp = grown
        size = _popcount(comp)
        if size % 2 == 0:
            return -1
        total += (size - 1) // 2
        rest &= ~comp
    return total


cdef int _tb_minimum(u64* adj, int n) noexcept nogil:
    cdef u64 full = _full_mask(n)
    cdef u64 bmask = 0, top = (<u64>1) << n
    cdef int best = n, val
    while bmask < top:
        val = _tb_of_set(adj, n, full & ~bmask, _popcount(bmask))
        if val >= 0 and val < best:
            best = val
        bmask += 1
    return best


def tb_minimum(adj, int n):
    if n > 20:
        return pure.tb_minimum(adj, n)
    cdef u64 rows[64]
    _load_adj(adj, n, rows)
    cdef int best
    with nogil:
        best = _tb_minimum(rows, n)
    return best


# --- exhaustive / sampled scans -------------------------------------------------------

DEF MAX_SCAN_N = 11  # 55 edge slots; a single u64 edge mask suffices

cdef void _adj_of_mask(int n, int slots, int* pi, int* pj, u64 mask, u64* rows) noexcept nogil:
    cdef int k
    for k in range(n):
        rows[k] = 0
    for k in range(slots):
        if (mask >> k) & 1:
            rows[pi[k]] |= (<u64>1) << pj[k]
            rows[pj[k]] |= (<u64>1) << pi[k]


cdef void _adj_of_mask2(int n, int slots, int* pi, int* pj, u64 lo, u64 hi,
                        u64* rows) noexcept nogil:
    cdef int k
    cdef u64 bit
    for k in range(n):
        rows[k] = 0
    for k in range(slots):
        bit = (lo >> k) & 1 if k < 64 else (hi >> (k - 64)) & 1
        if bit:
            rows[pi[k]] |= (<u64>1) << pj[k]
            rows[pj[k]] |= (<u64>1) << pi[k]


cdef int _fill_pairs(int n, int* pi, int* pj) noexcept nogil:
    cdef int i, j, k = 0
    for i in range(n):
        for j in range(i + 1, n):
            pi[k] = i
            pj[k] = j
            k += 1
    return k


cdef void _draw_mask2(u64* state, int slots, u64* lo, u64* hi) noexcept nogil:
    """Mirror of pure.random_edge_mask: 64-bit words, little-endian, truncated."""
    cdef int shift = 0
    lo[0] = 0
    hi[0] = 0
    while shift < slots:
        if shift == 0:
            lo[0] = _splitmix_next(state)
        elif shift == 64:
            hi[0] = _splitmix_next(state)
        shift += 64
    if slots < 64:
        lo[0] &= ((<u64>1) << slots) - 1
        hi[0] = 0
    elif slots < 128:
        hi[0] &= ((<u64>1) << (slots - 64)) - 1


cdef object _mask2_to_int(u64 lo, u64 hi):
    return (<object> int(hi) << 64) | int(lo)


def scan_matching_equality(int n):
    if n > MAX_SCAN_N:
        raise OverflowError(f"exhaustive scan capped at {MAX_SCAN_N} vertices")
    cdef int pi[256]
    cdef int pj[256]
    cdef int slots = _fill_pairs(n, pi, pj)
    cdef u64 rows[64]
    cdef signed char match[64]
    cdef unsigned char* dp = <unsigned char*> malloc((<size_t>1) << n)
    if dp == NULL:
        raise MemoryError()
    cdef u64 mask = 0, top = (<u64>1) << slots
    cdef i64 mismatches = 0, first_bad = -1
    try:
        with nogil:
            while mask < top:
                _adj_of_mask(n, slots, pi, pj, mask, rows)
                if _blossom_all(rows, n, match) != _nu_dp(rows, n, dp):
                    mismatches += 1
                    if first_bad < 0:
                        first_bad = <i64> mask
                mask += 1
    finally:
        free(dp)
    return (1 << slots), mismatches, first_bad


def scan_matching_equality_random(int n, i64 samples, u64 seed):
    if n > 16:
        raise OverflowError("random scan capped at 16 vertices")
    cdef int pi[256]
    cdef int pj[256]
    cdef int slots = _fill_pairs(n, pi, pj)
    cdef u64 rows[64]
    cdef signed char match[64]
    cdef unsigned char* dp = <unsigned char*> malloc((<size_t>1) << n)
    if dp == NULL:
        raise MemoryError()
    cdef u64 state = seed, lo, hi, bad_lo = 0, bad_hi = 0
    cdef i64 it, mismatches = 0
    cdef bint have_bad = 0
    try:
        with nogil:
            for it in range(samples):
                _draw_mask2(&state, slots, &lo, &hi)
                _adj_of_mask2(n, slots, pi, pj, lo, hi, rows)
                if _blossom_all(rows, n, match) != _nu_dp(rows, n, dp):
                    mismatches += 1
                    if not have_bad:
                        have_bad = 1
                        bad_lo = lo
                        bad_hi = hi
    finally:
        free(dp)
    return samples, mismatches, (_mask2_to_int(bad_lo, bad_hi) if have_bad else -1)


def scan_tutte_berge(int n, i64 samples, u64 seed):
    if n > MAX_SCAN_N:
        raise OverflowError(f"scan capped at {MAX_SCAN_N} vertices")
    cdef int pi[256]
    cdef int pj[256]
    cdef int slots = _fill_pairs(n, pi, pj)
    cdef u64 rows[64]
    cdef signed char match[64]
    cdef u64 state = seed, mask, top, lo, hi, bad_lo = 0, bad_hi = 0
    cdef i64 it, checked, mismatches = 0, first_bad = -1
    cdef bint have_bad = 0
    if samples == 0:
        top = (<u64>1) << slots
        checked = <i64> top
        with nogil:
            mask = 0
            while mask < top:
                _adj_of_mask(n, slots, pi, pj, mask, rows)
                if _tb_minimum(rows, n) != _blossom_all(rows, n, match):
                    mismatches += 1
                    if first_bad < 0:
                        first_bad = <i64> mask
                mask += 1
        return checked, mismatches, first_bad
    with nogil:
        for it in range(samples):
            _draw_mask2(&state, slots, &lo, &hi)
            _adj_of_mask2(n, slots, pi, pj, lo, hi, rows)
            if _tb_minimum(rows, n) != _blossom_all(rows, n, match):
                mismatches += 1
                if not have_bad:
                    have_bad = 1
                    bad_lo = lo
                    bad_hi = hi
    return samples, mismatches, (_mask2_to_int(bad_lo, bad_hi) if have_bad else -1)


cdef bint _connected(u64* adj, int n) noexcept nogil:
    if n == 0:
        return 1
    cdef u64 comp = 1, frontier = 1, grown, f, low
    while frontier:
        grown = comp
        f = frontier
        while f:
            low = f & (~f + 1)
            f ^= low
            grown |= adj[_ctz(low)]
        frontier = grown & ~comp
        comp = grown
    return comp == _full_mask(n)


def scan_path_degree_bound(int n):
    if n > MAX_SCAN_N:
        raise OverflowError(f"scan capped at {MAX_SCAN_N} vertices")
    cdef int pi[256]
    cdef int pj[256]
    cdef int slots = _fill_pairs(n, pi, pj)
    cdef u64 rows[64]
    cdef u64 size = (<u64>1) << n
    cdef u32* reach = <u32*> malloc(size * sizeof(u32))
    cdef u32* starts = <u32*> malloc(size * n * sizeof(u32))
    if reach == NULL or starts == NULL:
        free(reach)
        free(starts)
        raise MemoryError()
    cdef u64 mask = 0, top = (<u64>1) << slots, sub
    cdef i64 checked = 0, violations = 0, first_bad = -1
    cdef u32 ends, e, low, ext, lu, sv
    cdef int v, u, best, pc, du
    cdef bint bad
    try:
        with nogil:
            while mask < top:
                _adj_of_mask(n, slots, pi, pj, mask, rows)
                if not _connected(rows, n):
                    mask += 1
                    continue
                checked += 1
                best = _longest_path(rows, n, reach)
                if best == n:
                    mask += 1
                    continue
                memset(starts, 0, size * n * sizeof(u32))
                for v in range(n):
                    starts[(((<u64>1) << v)) * n + v] = (<u32>1) << v
                sub = 1
                while sub < size:
                    ends = reach[sub]
                    if ends:
                        e = ends
                        while e:
                            low = e & (~e + 1)
                            v = _ctz(low)
                            e ^= low
                            sv = starts[sub * n + v]
                            ext = (<u32> rows[v]) & (~(<u32> sub))
                            while ext:
                                lu = ext & (~ext + 1)
                                u = _ctz(lu)
                                ext ^= lu
                                starts[(sub | lu) * n + u] |= sv
                    sub += 1
                bad = 0
                sub = 1
                while sub < size and not bad:
                    if _popcount(sub) == best and reach[sub]:
                        e = reach[sub]
                        while e and not bad:
                            low = e & (~e + 1)
                            v = _ctz(low)
                            e ^= low
                            du = _popcount(rows[v]) + 1
                            sv = starts[sub * n + v]
                            while sv:
                                lu = sv & (~sv + 1)
                                u = _ctz(lu)
                                sv ^= lu
                                pc = _popcount(rows[u]) + du
                                if pc > n:
                                    pc = n
                                if best < pc:
                                    bad = 1
                                    break
                    sub += 1
                if bad:
                    violations += 1
                    if first_bad < 0:
                        first_bad = <i64> mask
                mask += 1
    finally:
        free(reach)
        free(starts)
    return checked, violations, first_bad


cdef int _components_of(u64* adj, int n, u64* comps) noexcept nogil:
    cdef u64 rest = _full_mask(n), comp, frontier, grown, f, low
    cdef int count = 0
    while rest:
        low = rest & (~rest + 1)
        comp = low
        frontier = low
        while frontier:
            grown = comp
            f = frontier
            while f:
                low = f & (~f + 1)
                f ^= low
                grown |= adj[_ctz(low)]
            frontier = grown & ~comp
            comp = grown
        comps[count] = comp
        count += 1
        rest &= ~comp
    return count


cdef int _verts_of(u64 comp, int* verts) noexcept nogil:
    cdef int k = 0
    cdef u64 low
    while comp:
        low = comp & (~comp + 1)
        verts[k] = _ctz(low)
        comp ^= low
        k += 1
    return k


cdef void _local_adj_c(u64* adj, int* verts, int k, u64* local) noexcept nogil:
    cdef int i, j
    for i in range(k):
        local[i] = 0
        for j in range(k):
            if (adj[verts[i]] >> verts[j]) & 1:
                local[i] |= (<u64>1) << j


def scan_component_cliqueify(int n):
    if n > MAX_SCAN_N:
        raise OverflowError(f"scan capped at {MAX_SCAN_N} vertices")
    cdef int pi[256]
    cdef int pj[256]
    cdef int slots = _fill_pairs(n, pi, pj)
    cdef u64 rows[64]
    cdef u64 rep[64]
    cdef u64 comps[64]
    cdef u64 local[64]
    cdef int verts[64]
    cdef signed char match[64]
    cdef u32* reach = <u32*> malloc(((<size_t>1) << n) * sizeof(u32))
    if reach == NULL:
        raise MemoryError()
    cdef u64 mask = 0, top = (<u64>1) << slots, comp
    cdef i64 instances = 0, violations = 0, first_bad = -1
    cdef int ncomp, ci, k, v, nu_g
    cdef bint spanned
    try:
        with nogil:
            while mask < top:
                _adj_of_mask(n, slots, pi, pj, mask, rows)
                ncomp = _components_of(rows, n, comps)
                nu_g = -1
                for ci in range(ncomp):
                    comp = comps[ci]
                    k = _verts_of(comp, verts)
                    if k == 1:
                        spanned = 1
                    else:
                        _local_adj_c(rows, verts, k, local)
                        spanned = _longest_path(local, k, reach) == k
                    if not spanned:
                        continue
                    instances += 1
                    if nu_g < 0:
                        nu_g = _blossom_all(rows, n, match)
                    for v in range(n):
                        rep[v] = rows[v]
                    for v in range(k):
                        rep[verts[v]] = comp & ~((<u64>1) << verts[v])
                    if _blossom_all(rep, n, match) != nu_g:
                        violations += 1
                        if first_bad < 0:
                            first_bad = <i64> mask
                mask += 1
    finally:
        free(reach)
    return instances, violations, first_bad


def scan_component_rewire(int n):
    if n > MAX_SCAN_N:
        raise OverflowError(f"scan capped at {MAX_SCAN_N} vertices")
    cdef int pi[256]
    cdef int pj[256]
    cdef int slots = _fill_pairs(n, pi, pj)
    cdef u64 rows[64]
    cdef u64 rep[64]
    cdef u64 comps[64]
    cdef u64 local[64]
    cdef int verts[64]
    cdef signed char match[64]
    cdef unsigned char* dp = <unsigned char*> malloc((<size_t>1) << n)
    if dp == NULL:
        raise MemoryError()
    cdef u64 mask = 0, top = (<u64>1) << slots, comp, outside, wl
    cdef i64 instances = 0, violations = 0, first_bad = -1
    cdef int ncomp, ci, k, v, w, nu_g
    try:
        with nogil:
            while mask < top:
                _adj_of_mask(n, slots, pi, pj, mask, rows)
                ncomp = _components_of(rows, n, comps)
                nu_g = -1
                for ci in range(ncomp):
                    comp = comps[ci]
                    k = _popcount(comp)
                    if k % 2 or k == 0:
                        continue
                    k = _verts_of(comp, verts)
                    _local_adj_c(rows, verts, k, local)
                    if _nu_dp(local, k, dp) != k // 2:
                        continue
                    if nu_g < 0:
                        nu_g = _blossom_all(rows, n, match)
                    outside = _full_mask(n) & ~comp
                    while outside:
                        wl = outside & (~outside + 1)
                        w = _ctz(wl)
                        outside ^= wl
                        instances += 1
                        for v in range(n):
                            rep[v] = rows[v] & ~wl
                        rep[w] = comp
                        for v in range(k):
                            rep[verts[v]] |= wl
                        if _blossom_all(rep, n, match) > nu_g:
                            violations += 1
                            if first_bad < 0:
                                first_bad = <i64> mask
                mask += 1
    finally:
        free(dp)
    return instances, violations, first_bad


# --- the extremal search ---------------------------------------------------------

DEF MAX_SEARCH_SLOTS = 64  # one u64 edge mask; n <= 11

cdef struct SearchCtx:
    int n
    int r
    int s_bound          # -1 means unconstrained
    int total_slots
    u64 adj[64]
    signed char match[64]
    int nu
    u64 count
    u64 edge_mask
    i64 nodes
    i64 best             # -1 before the first leaf
    u64* wit
    i64 wit_len
    i64 wit_alloc
    i64 wit_cap
    bint truncated
    bint oom
    int pair_i[MAX_SEARCH_SLOTS]
    int pair_j[MAX_SEARCH_SLOTS]
    # flattened anchored pattern plans
    int n_plans
    int* plan_nh
    i64* plan_off
    u64* plan_req
    int* plan_deg
    # per-depth undo stacks
    u64* delta_stack
    signed char* match_stack
    int* nu_stack
    # optimistic completions for upper-bound pruning
    bint ub_prune
    u64* future


cdef bint _new_edge_makes_pattern(SearchCtx* ctx, int u, int v) noexcept nogil:
    cdef int pidx, nh, du, dv
    cdef i64 off
    cdef int placed[64]
    cdef u64 fullg = _full_mask(ctx.n)
    du = _popcount(ctx.adj[u])
    dv = _popcount(ctx.adj[v])
    for pidx in range(ctx.n_plans):
        nh = ctx.plan_nh[pidx]
        off = ctx.plan_off[pidx]
        if du < ctx.plan_deg[off] or dv < ctx.plan_deg[off + 1]:
            continue
        placed[0] = u
        placed[1] = v
        if nh == 2:
            return 1
        if _embed_c(ctx.adj, ctx.n, fullg, ctx.plan_req + off, ctx.plan_deg + off,
                    nh, 2, ((<u64>1) << u) | ((<u64>1) << v), placed):
            return 1
    return 0


cdef bint _try_include(SearchCtx* ctx, int slot) noexcept nogil:
    cdef int i = ctx.pair_i[slot]
    cdef int j = ctx.pair_j[slot]
    cdef u64 bi = (<u64>1) << i
    cdef u64 bj = (<u64>1) << j
    cdef bint augmented
    cdef int v
    ctx.adj[i] |= bj
    ctx.adj[j] |= bi
    if _new_edge_makes_pattern(ctx, i, j):
        ctx.adj[i] &= ~bj
        ctx.adj[j] &= ~bi
        return 0
    memcpy(ctx.match_stack + slot * ctx.n, ctx.match, ctx.n)
    ctx.nu_stack[slot] = ctx.nu
    if ctx.s_bound >= 0:
        if ctx.match[i] == -1 and ctx.match[j] == -1:
            if ctx.nu + 1 > ctx.s_bound:
                ctx.adj[i] &= ~bj
                ctx.adj[j] &= ~bi
                return 0
            ctx.match[i] = <signed char> j
            ctx.match[j] = <signed char> i
            ctx.nu += 1
        else:
            augmented = 0
            for v in range(ctx.n):
                if ctx.match[v] == -1 and ctx.adj[v]:
                    if _find_augmenting(ctx.adj, ctx.n, ctx.match, v):
                        augmented = 1
                        break
            if augmented:
                if ctx.nu + 1 > ctx.s_bound:
                    memcpy(ctx.match, ctx.match_stack + slot * ctx.n, ctx.n)
                    ctx.adj[i] &= ~bj
                    ctx.adj[j] &= ~bi
                    return 0
                ctx.nu += 1
    if ctx.r >= 2:
        if ctx.r == 2:
            ctx.delta_stack[slot] = 1
        else:
            ctx.delta_stack[slot] = _cliques_in(ctx.adj, ctx.adj[i] & ctx.adj[j],
                                                ctx.r - 2)
    else:
        ctx.delta_stack[slot] = 0
    ctx.count += ctx.delta_stack[slot]
    ctx.edge_mask |= (<u64>1) << slot
    return 1


cdef void _undo_include(SearchCtx* ctx, int slot) noexcept nogil:
    cdef int i = ctx.pair_i[slot]
    cdef int j = ctx.pair_j[slot]
    ctx.adj[i] &= ~((<u64>1) << j)
    ctx.adj[j] &= ~((<u64>1) << i)
    ctx.count -= ctx.delta_stack[slot]
    ctx.edge_mask &= ~((<u64>1) << slot)
    memcpy(ctx.match, ctx.match_stack + slot * ctx.n, ctx.n)
    ctx.nu = ctx.nu_stack[slot]


cdef void _record_leaf(SearchCtx* ctx) noexcept nogil:
    cdef u64* grown
    cdef i64 want
    if <i64> ctx.count > ctx.best:
        ctx.best = <i64> ctx.count
        ctx.wit_len = 0
        ctx.truncated = 0
    elif <i64> ctx.count < ctx.best:
        return
    if ctx.wit_len >= ctx.wit_cap:
        ctx.truncated = 1
        return
    if ctx.wit_len == ctx.wit_alloc:
        want = ctx.wit_alloc * 2 if ctx.wit_alloc else 1024
        if want > ctx.wit_cap:
            want = ctx.wit_cap
        grown = <u64*> realloc(ctx.wit, want * sizeof(u64))
        if grown == NULL:
            ctx.oom = 1
            ctx.truncated = 1
            return
        ctx.wit = grown
        ctx.wit_alloc = want
    ctx.wit[ctx.wit_len] = ctx.edge_mask
    ctx.wit_len += 1


cdef u64 _count_r_cliques(SearchCtx* ctx, u64* rows) noexcept nogil:
    if ctx.r == 0:
        return 1
    if ctx.r == 1:
        return <u64> ctx.n
    return _cliques_in(rows, _full_mask(ctx.n), ctx.r)


cdef void _dfs(SearchCtx* ctx, int slot) noexcept nogil:
    cdef int v
    cdef u64 opt[64]
    ctx.nodes += 1
    if ctx.oom:
        return
    if slot == ctx.total_slots:
        _record_leaf(ctx)
        return
    if ctx.ub_prune and ctx.best >= 0:
        for v in range(ctx.n):
            opt[v] = ctx.adj[v] | ctx.future[slot * ctx.n + v]
        if <i64> _count_r_cliques(ctx, opt) < ctx.best:
            return
    if _try_include(ctx, slot):
        _dfs(ctx, slot + 1)
        _undo_include(ctx, slot)
    _dfs(ctx, slot + 1)


cdef int _ctx_setup(SearchCtx* ctx, int n, int r, object patterns, object s_bound,
                    u64 prefix_mask, int depth, bint ub_prune, i64 witness_cap) except -1:
    """Plans come from the pure module so both backends walk identical orders."""
    cdef int slots, k, v, idx
    cdef i64 total_req = 0
    ctx.n = n
    ctx.r = r
    ctx.s_bound = -1 if s_bound is None else <int> s_bound
    slots = _fill_pairs(n, ctx.pair_i, ctx.pair_j)
    ctx.total_slots = slots
    ctx.nodes = 0
    ctx.best = -1
    ctx.wit = NULL
    ctx.wit_len = 0
    ctx.wit_alloc = 0
    ctx.wit_cap = witness_cap
    ctx.truncated = 0
    ctx.oom = 0
    ctx.ub_prune = ub_prune
    ctx.future = NULL
    ctx.plan_nh = NULL
    ctx.plan_off = NULL
    ctx.plan_req = NULL
    ctx.plan_deg = NULL
    ctx.delta_stack = NULL
    ctx.match_stack = NULL
    ctx.nu_stack = NULL

    plans = []
    for adj_h, n_h in patterns:
        if n_h > n:
            continue
        seen = set()
        for a in range(n_h):
            row = adj_h[a]
            while row:
                low = row & -row
                b = low.bit_length() - 1
                row ^= low
                req, degs = pure._pattern_order(adj_h, n_h, seed=(a, b))
                key = (tuple(req), tuple(degs))
                if key in seen:
                    continue
                seen.add(key)
                plans.append((n_h, req, degs))
    ctx.n_plans = len(plans)
    for plan in plans:
        total_req += <int> plan[0]
    ctx.plan_nh = <int*> malloc(max(ctx.n_plans, 1) * sizeof(int))
    ctx.plan_off = <i64*> malloc(max(ctx.n_plans, 1) * sizeof(i64))
    ctx.plan_req = <u64*> malloc(max(total_req, 1) * sizeof(u64))
    ctx.plan_deg = <int*> malloc(max(total_req, 1) * sizeof(int))
    ctx.delta_stack = <u64*> malloc(max(slots, 1) * sizeof(u64))
    ctx.match_stack = <signed char*> malloc(max(slots * n, 1))
    ctx.nu_stack = <int*> malloc(max(slots, 1) * sizeof(int))
    if (ctx.plan_nh == NULL or ctx.plan_off == NULL or ctx.plan_req == NULL
            or ctx.plan_deg == NULL or ctx.delta_stack == NULL
            or ctx.match_stack == NULL or ctx.nu_stack == NULL):
        _ctx_teardown(ctx)
        raise MemoryError()
    idx = 0
    for k in range(ctx.n_plans):
        n_h, req, degs = plans[k]
        ctx.plan_nh[k] = <int> n_h
        ctx.plan_off[k] = idx
        for v in range(<int> n_h):
            ctx.plan_req[idx] = <u64> req[v]
            ctx.plan_deg[idx] = <int> degs[v]
            idx += 1
    if ub_prune:
        ctx.future = <u64*> malloc(max(slots * n, 1) * sizeof(u64))
        if ctx.future == NULL:
            _ctx_teardown(ctx)
            raise MemoryError()
        memset(ctx.future, 0, slots * n * sizeof(u64))
        # slot k itself is still undecided when the bound is evaluated
        for k in range(slots):
            for v in range(k, slots):
                ctx.future[k * n + ctx.pair_i[v]] |= (<u64>1) << ctx.pair_j[v]
                ctx.future[k * n + ctx.pair_j[v]] |= (<u64>1) << ctx.pair_i[v]
    for v in range(n):
        ctx.adj[v] = 0
    ctx.edge_mask = prefix_mask
    for k in range(depth):
        if (prefix_mask >> k) & 1:
            ctx.adj[ctx.pair_i[k]] |= (<u64>1) << ctx.pair_j[k]
            ctx.adj[ctx.pair_j[k]] |= (<u64>1) << ctx.pair_i[k]
    ctx.count = _count_r_cliques(ctx, ctx.adj)
    ctx.nu = 0
    for v in range(n):
        ctx.match[v] = -1
    if ctx.s_bound >= 0:
        ctx.nu = _blossom_all(ctx.adj, n, ctx.match)
    return 0


cdef void _ctx_teardown(SearchCtx* ctx) noexcept nogil:
    free(ctx.plan_nh)
    free(ctx.plan_off)
    free(ctx.plan_req)
    free(ctx.plan_deg)
    free(ctx.delta_stack)
    free(ctx.match_stack)
    free(ctx.nu_stack)
    free(ctx.future)
    free(ctx.wit)


def search_subtree(int n, int r, patterns, s_bound, prefix_mask, int depth,
                   bint ub_prune=False, witness_cap=1 << 20):
    if n * (n - 1) // 2 > MAX_SEARCH_SLOTS:
        return pure.search_subtree(n, r, patterns, s_bound, prefix_mask, depth,
                                   ub_prune, witness_cap)
    cdef SearchCtx ctx
    _ctx_setup(&ctx, n, r, patterns, s_bound, <u64> prefix_mask, depth, ub_prune,
               <i64> witness_cap)
    cdef i64 k
    try:
        with nogil:
            _dfs(&ctx, depth)
        if ctx.oom:
            raise MemoryError()
        witnesses = [int(ctx.wit[k]) for k in range(ctx.wit_len)]
        return int(ctx.best), witnesses, int(ctx.nodes), bool(ctx.truncated)
    finally:
        _ctx_teardown(&ctx)


cdef void _record_prefix(SearchCtx* ctx) noexcept nogil:
    cdef u64* grown
    cdef i64 want
    if ctx.wit_len == ctx.wit_alloc:
        want = ctx.wit_alloc * 2 if ctx.wit_alloc else 1024
        grown = <u64*> realloc(ctx.wit, want * sizeof(u64))
        if grown == NULL:
            ctx.oom = 1
            return
        ctx.wit = grown
        ctx.wit_alloc = want
    ctx.wit[ctx.wit_len] = ctx.edge_mask
    ctx.wit_len += 1


cdef void _prefix_dfs(SearchCtx* ctx, int slot, int depth) noexcept nogil:
    ctx.nodes += 1
    if ctx.oom:
        return
    if slot == depth:
        _record_prefix(ctx)
        return
    if _try_include(ctx, slot):
        _prefix_dfs(ctx, slot + 1, depth)
        _undo_include(ctx, slot)
    _prefix_dfs(ctx, slot + 1, depth)


def search_prefixes(int n, patterns, s_bound, int depth):
    if n * (n - 1) // 2 > MAX_SEARCH_SLOTS:
        return pure.search_prefixes(n, patterns, s_bound, depth)
    cdef SearchCtx ctx
    _ctx_setup(&ctx, n, 0, patterns, s_bound, 0, 0, False, 0)
    if depth > ctx.total_slots:
        depth = ctx.total_slots
    cdef i64 k
    try:
        with nogil:
            _prefix_dfs(&ctx, 0, depth)
        if ctx.oom:
            raise MemoryError()
        return [int(ctx.wit[k]) for k in range(ctx.wit_len)], int(ctx.nodes)
    finally:
        _ctx_teardown(&ctx)


def count_admissible(int n, patterns, s_bound):
    masks, _ = search_prefixes(n, patterns, s_bound, n * (n - 1) // 2)
    return len(masks)
