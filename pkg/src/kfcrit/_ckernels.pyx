# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled bitmask kernels for graphs with at most 64 vertices.

Mirrors ``_pykernels`` name for name; see that module for the contracts.
"""

from libc.stdlib cimport malloc, free
from libc.string cimport memset

ctypedef unsigned long long u64

cdef extern from *:
    int __builtin_popcountll(unsigned long long) nogil
    int __builtin_ctzll(unsigned long long) nogil

cdef enum:
    MAXN = 64


cdef inline int popcount(u64 x) noexcept nogil:
    return __builtin_popcountll(x)


cdef inline int lowbit(u64 x) noexcept nogil:
    return __builtin_ctzll(x)


cdef inline u64 bit(int i) noexcept nogil:
    return (<u64>1) << i


cdef inline u64 fullmask(int n) noexcept nogil:
    if n >= 64:
        return ~(<u64>0)
    return bit(n) - 1


cdef int load(object adj, u64 *a) except -1:
    cdef int n = len(adj)
    cdef int i
    if n > MAXN:
        raise ValueError("compiled kernels handle at most 64 vertices")
    for i in range(n):
        a[i] = <u64>adj[i]
    return n


# ---------------------------------------------------------------- matching

cdef struct Blossom:
    int n
    u64 alive
    u64 *adj
    int match[MAXN]
    int parent[MAXN]
    int base[MAXN]
    int used[MAXN]
    int flag[MAXN]
    int queue[MAXN]


cdef int _lca(Blossom *s, int a, int b) noexcept nogil:
    cdef int seen[MAXN]
    memset(seen, 0, sizeof(seen))
    while True:
        a = s.base[a]
        seen[a] = 1
        if s.match[a] == -1:
            break
        a = s.parent[s.match[a]]
    while True:
        b = s.base[b]
        if seen[b]:
            return b
        b = s.parent[s.match[b]]


cdef void _mark_path(Blossom *s, int v, int b, int child) noexcept nogil:
    while s.base[v] != b:
        s.flag[s.base[v]] = 1
        s.flag[s.base[s.match[v]]] = 1
        s.parent[v] = child
        child = s.match[v]
        v = s.parent[s.match[v]]


cdef int _find_path(Blossom *s, int root) noexcept nogil:
    cdef int n = s.n
    cdef int i, v, to, cur, head = 0, tail = 0
    cdef u64 nb, rest
    for i in range(n):
        s.parent[i] = -1
        s.base[i] = i
        s.used[i] = 0
    s.used[root] = 1
    s.queue[tail] = root
    tail += 1
    while head < tail:
        v = s.queue[head]
        head += 1
        nb = s.adj[v] & s.alive
        while nb:
            to = lowbit(nb)
            nb &= nb - 1
            if s.base[v] == s.base[to] or s.match[v] == to:
                continue
            if to == root or (s.match[to] != -1 and s.parent[s.match[to]] != -1):
                cur = _lca(s, v, to)
                memset(s.flag, 0, sizeof(s.flag))
                _mark_path(s, v, cur, to)
                _mark_path(s, to, cur, v)
                rest = s.alive
                while rest:
                    i = lowbit(rest)
                    rest &= rest - 1
                    if s.flag[s.base[i]]:
                        s.base[i] = cur
                        if not s.used[i]:
                            s.used[i] = 1
                            s.queue[tail] = i
                            tail += 1
            elif s.parent[to] == -1:
                s.parent[to] = v
                if s.match[to] == -1:
                    return to
                s.used[s.match[to]] = 1
                s.queue[tail] = s.match[to]
                tail += 1
    return -1


cdef int c_max_matching(u64 *adj, int n, u64 alive, int *out) noexcept nogil:
    """Fill ``out`` with the mate array; return the matching size."""
    cdef Blossom s
    cdef int v, w, pv, ppv, size = 0
    cdef u64 rest, nb
    s.n = n
    s.alive = alive
    s.adj = adj
    for v in range(n):
        s.match[v] = -1
    rest = alive
    while rest:
        v = lowbit(rest)
        rest &= rest - 1
        if s.match[v] != -1:
            continue
        nb = adj[v] & alive & ~fullmask(v + 1)
        while nb:
            w = lowbit(nb)
            nb &= nb - 1
            if s.match[w] == -1:
                s.match[v] = w
                s.match[w] = v
                size += 1
                break
    rest = alive
    while rest:
        v = lowbit(rest)
        rest &= rest - 1
        if s.match[v] != -1:
            continue
        w = _find_path(&s, v)
        if w != -1:
            size += 1
        while w != -1:
            pv = s.parent[w]
            ppv = s.match[pv]
            s.match[w] = pv
            s.match[pv] = w
            w = ppv
    if out != NULL:
        for v in range(n):
            out[v] = s.match[v]
    return size


cdef inline bint c_has_pm(u64 *adj, int n, u64 alive) noexcept nogil:
    cdef int cnt = popcount(alive)
    if cnt & 1:
        return False
    return 2 * c_max_matching(adj, n, alive, NULL) == cnt


def max_matching(adj, alive):
    cdef u64 a[MAXN]
    cdef int out[MAXN]
    cdef int n = load(adj, a)
    c_max_matching(a, n, <u64>alive, out)
    return [out[i] for i in range(n)]


def matching_size(adj, alive):
    cdef u64 a[MAXN]
    cdef int n = load(adj, a)
    return c_max_matching(a, n, <u64>alive, NULL)


def has_perfect_matching(adj, alive):
    cdef u64 a[MAXN]
    cdef int n = load(adj, a)
    return c_has_pm(a, n, <u64>alive)


cdef int _brute(u64 *adj, u64 mask, signed char *memo) noexcept nogil:
    cdef int v, w, best, cand
    cdef u64 rest, nb
    if mask & (mask - 1) == 0:
        return 0
    if memo[mask] >= 0:
        return memo[mask]
    v = lowbit(mask)
    rest = mask & ~bit(v)
    best = _brute(adj, rest, memo)
    nb = adj[v] & rest
    while nb:
        w = lowbit(nb)
        nb &= nb - 1
        cand = 1 + _brute(adj, rest & ~bit(w), memo)
        if cand > best:
            best = cand
    memo[mask] = <signed char>best
    return best


def brute_matching_size(adj, alive):
    cdef u64 a[MAXN]
    cdef int n = load(adj, a)
    cdef signed char *memo
    cdef int result
    if n > 24:
        raise ValueError("exhaustive matching is limited to 24 vertices")
    memo = <signed char *>malloc(<size_t>1 << n)
    if memo == NULL:
        raise MemoryError()
    memset(memo, 0xFF, <size_t>1 << n)
    result = _brute(a, <u64>alive, memo)
    free(memo)
    return result


# -------------------------------------------------------------- components

cdef int c_components(u64 *adj, u64 alive, u64 *out) noexcept nogil:
    cdef int count = 0, v
    cdef u64 rest = alive, comp, frontier, grow, f
    while rest:
        comp = rest & (~rest + 1)
        frontier = comp
        while frontier:
            grow = 0
            f = frontier
            while f:
                v = lowbit(f)
                f &= f - 1
                grow |= adj[v]
            grow &= rest & ~comp
            comp |= grow
            frontier = grow
        out[count] = comp
        count += 1
        rest &= ~comp
    return count


cdef inline bint c_connected(u64 *adj, u64 alive) noexcept nogil:
    cdef u64 comp, frontier, grow, f
    cdef int v
    if alive == 0:
        return True
    comp = alive & (~alive + 1)
    frontier = comp
    while frontier:
        grow = 0
        f = frontier
        while f:
            v = lowbit(f)
            f &= f - 1
            grow |= adj[v]
        grow &= alive & ~comp
        comp |= grow
        frontier = grow
    return comp == alive


def components(adj, alive):
    cdef u64 a[MAXN]
    cdef u64 out[MAXN]
    load(adj, a)
    cdef int c = c_components(a, <u64>alive, out)
    return [out[i] for i in range(c)]


def odd_component_count(adj, alive):
    cdef u64 a[MAXN]
    cdef u64 out[MAXN]
    load(adj, a)
    cdef int c = c_components(a, <u64>alive, out)
    cdef int i, odd = 0
    for i in range(c):
        odd += popcount(out[i]) & 1
    return odd


def is_connected(adj, alive):
    cdef u64 a[MAXN]
    load(adj, a)
    return c_connected(a, <u64>alive)


def tutte_barrier(adj, alive):
    cdef u64 a[MAXN]
    cdef int mate[MAXN]
    cdef int n = load(adj, a)
    cdef u64 al = <u64>alive, missed = 0, barrier = 0, rest
    cdef int v
    cdef int size = c_max_matching(a, n, al, mate)
    if 2 * size == popcount(al):
        return -1
    rest = al
    while rest:
        v = lowbit(rest)
        rest &= rest - 1
        if mate[v] == -1 or c_max_matching(a, n, al & ~bit(v), NULL) == size:
            missed |= bit(v)
    rest = missed
    while rest:
        v = lowbit(rest)
        rest &= rest - 1
        barrier |= a[v]
    return barrier & al & ~missed


# ------------------------------------------------------- subset searches

cdef inline u64 _spread(u64 comb, int *universe) noexcept nogil:
    cdef u64 mask = 0
    while comb:
        mask |= bit(universe[lowbit(comb)])
        comb &= comb - 1
    return mask


cdef inline u64 _gosper(u64 comb) noexcept nogil:
    cdef u64 low = comb & (~comb + 1)
    cdef u64 ripple = comb + low
    return (((ripple ^ comb) >> 2) // low) | ripple


cdef long long c_kfc_failure(u64 *adj, int n, int k, u64 avoid) noexcept nogil:
    cdef int universe[MAXN]
    cdef int m = 0, v
    cdef u64 full = fullmask(n), comb, limit, x
    for v in range(n):
        if not (avoid >> v) & 1:
            universe[m] = v
            m += 1
    if k > m:
        return -1
    if k == 0:
        if (n & 1) or not c_has_pm(adj, n, full):
            return 0
        return -1
    if m >= 64:
        limit = 0
    else:
        limit = bit(m)
    comb = bit(k) - 1
    while True:
        x = _spread(comb, universe)
        if ((n - k) & 1) or not c_has_pm(adj, n, full & ~x):
            return <long long>x
        comb = _gosper(comb)
        if limit != 0 and comb >= limit:
            break
        if limit == 0 and comb == 0:
            break
    return -1


def kfc_failure(adj, int k, avoid=0, int skip_u=-1, int skip_v=-1):
    cdef u64 a[MAXN]
    cdef int n = load(adj, a)
    if skip_u >= 0:
        a[skip_u] &= ~bit(skip_v)
        a[skip_v] &= ~bit(skip_u)
    return c_kfc_failure(a, n, k, <u64>avoid)


def non_minimal_edge(adj, int k):
    cdef u64 a[MAXN]
    cdef int n = load(adj, a)
    cdef int u, v
    cdef u64 nb
    for u in range(n):
        nb = a[u] & ~fullmask(u + 1)
        while nb:
            v = lowbit(nb)
            nb &= nb - 1
            a[u] &= ~bit(v)
            a[v] &= ~bit(u)
            if c_kfc_failure(a, n, k, bit(u) | bit(v)) == -1:
                return (u, v)
            a[u] |= bit(v)
            a[v] |= bit(u)
    return None


cdef long long c_find_witness(u64 *adj, int n, int k, int u, int v,
                              int min_size, int max_size) noexcept nogil:
    cdef int universe[MAXN]
    cdef u64 comps[MAXN]
    cdef int m = 0, w, size, want, c, i, odd
    cdef u64 full = fullmask(n), comb, limit, s, cu, cv
    for w in range(n):
        if w != u and w != v:
            universe[m] = w
            m += 1
    if min_size < 0:
        min_size = 0
    if max_size > m:
        max_size = m
    limit = bit(m) if m < 64 else 0
    for size in range(min_size, max_size + 1):
        want = size - k + 2
        if want < 2:
            continue
        comb = bit(size) - 1
        while True:
            s = _spread(comb, universe)
            c = c_components(adj, full & ~s, comps)
            odd = 0
            cu = 0
            cv = 0
            for i in range(c):
                if popcount(comps[i]) & 1:
                    odd += 1
                    if (comps[i] >> u) & 1:
                        cu = comps[i]
                    if (comps[i] >> v) & 1:
                        cv = comps[i]
            if odd == want and cu != 0 and cv != 0 and cu != cv:
                return <long long>s
            if size == 0:
                break
            comb = _gosper(comb)
            if (limit != 0 and comb >= limit) or (limit == 0 and comb == 0):
                break
    return -1


def find_witness(adj, int k, int u, int v, int min_size, int max_size):
    cdef u64 a[MAXN]
    cdef int n = load(adj, a)
    a[u] &= ~bit(v)
    a[v] &= ~bit(u)
    return c_find_witness(a, n, k, u, v, min_size, max_size)


def all_edges_have_witness(adj, int k):
    cdef u64 a[MAXN]
    cdef int n = load(adj, a)
    cdef int u, v
    cdef u64 nb
    cdef long long found
    for u in range(n):
        nb = a[u] & ~fullmask(u + 1)
        while nb:
            v = lowbit(nb)
            nb &= nb - 1
            a[u] &= ~bit(v)
            a[v] &= ~bit(u)
            found = c_find_witness(a, n, k, u, v, k, n - 2)
            a[u] |= bit(v)
            a[v] |= bit(u)
            if found == -1:
                return False
    return True


# ------------------------------------------------------------ misc checks

def find_claw(adj):
    cdef u64 a[MAXN]
    cdef int n = load(adj, a)
    cdef int c, x, y, z
    cdef u64 nb, rx, ry
    for c in range(n):
        nb = a[c]
        while nb:
            x = lowbit(nb)
            nb &= nb - 1
            rx = nb & ~a[x]
            while rx:
                y = lowbit(rx)
                rx &= rx - 1
                ry = rx & ~a[y]
                if ry:
                    z = lowbit(ry)
                    return (c, x, y, z)
    return None


def vertex_connectivity(adj):
    cdef u64 a[MAXN]
    cdef int n = load(adj, a)
    cdef int universe[MAXN]
    cdef int size, v
    cdef u64 full = fullmask(n), comb, limit
    if n <= 1:
        return 0
    for v in range(n):
        universe[v] = v
    limit = bit(n) if n < 64 else 0
    for size in range(n - 1):
        if size == 0:
            if not c_connected(a, full):
                return 0
            continue
        comb = bit(size) - 1
        while True:
            if not c_connected(a, full & ~_spread(comb, universe)):
                return size
            comb = _gosper(comb)
            if (limit != 0 and comb >= limit) or (limit == 0 and comb == 0):
                break
    return n - 1


def edge_connectivity(adj):
    cdef u64 a[MAXN]
    cdef int n = load(adj, a)
    cdef u64 full = fullmask(n), side, s, f
    cdef int best = -1, cut, v
    if n <= 1:
        return 0
    if n > 30:
        raise ValueError("exhaustive edge cuts are limited to 30 vertices")
    for side in range(bit(n - 1)):
        s = (side << 1) | 1
        if s == full:
            continue
        cut = 0
        f = s
        while f:
            v = lowbit(f)
            f &= f - 1
            cut += popcount(a[v] & ~s & full)
        if best < 0 or cut < best:
            best = cut
    return best if best >= 0 else 0
