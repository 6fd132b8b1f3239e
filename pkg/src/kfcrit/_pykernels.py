"""Pure-Python bitmask kernels.

Every function takes ``adj``, a sequence of ints where bit ``j`` of
``adj[i]`` is set iff ``ij`` is an edge, and most take ``alive``, a vertex
mask restricting the computation to the induced subgraph on those vertices.
The compiled module ``_ckernels`` exposes the same names and semantics for
graphs with at most 64 vertices.
"""

from __future__ import annotations

from collections import deque


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _colex_subsets(universe: list[int], size: int):
    """Yield vertex masks of ``size``-subsets of ``universe`` in colex order."""
    m = len(universe)
    if size > m:
        return
    if size == 0:
        yield 0
        return
    comb = (1 << size) - 1
    limit = 1 << m
    while comb < limit:
        mask = 0
        for i in _bits(comb):
            mask |= 1 << universe[i]
        yield mask
        # Gosper's hack: next integer with the same popcount
        low = comb & -comb
        ripple = comb + low
        comb = (((ripple ^ comb) >> 2) // low) | ripple


def full_mask(n: int) -> int:
    return (1 << n) - 1


def max_matching(adj, alive: int) -> list[int]:
    """Edmonds' blossom algorithm; returns the mate array (-1 = exposed)."""
    n = len(adj)
    match = [-1] * n
    # greedy warm start in canonical order
    for v in _bits(alive):
        if match[v] == -1:
            for w in _bits(adj[v] & alive):
                if w > v and match[w] == -1:
                    match[v] = w
                    match[w] = v
                    break

    base = list(range(n))
    parent = [-1] * n

    def lca(a: int, b: int) -> int:
        seen = [False] * n
        while True:
            a = base[a]
            seen[a] = True
            if match[a] == -1:
                break
            a = parent[match[a]]
        while True:
            b = base[b]
            if seen[b]:
                return b
            b = parent[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
        while base[v] != b:
            blossom[base[v]] = blossom[base[match[v]]] = True
            parent[v] = child
            child = match[v]
            v = parent[match[v]]

    def find_path(root: int) -> int:
        used = [False] * n
        for i in range(n):
            parent[i] = -1
            base[i] = i
        used[root] = True
        queue = deque([root])
        while queue:
            v = queue.popleft()
            for to in _bits(adj[v] & alive):
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and parent[match[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in _bits(alive):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                queue.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if match[to] == -1:
                        return to
                    used[match[to]] = True
                    queue.append(match[to])
        return -1

    for root in _bits(alive):
        if match[root] != -1:
            continue
        v = find_path(root)
        while v != -1:
            pv = parent[v]
            ppv = match[pv]
            match[v] = pv
            match[pv] = v
            v = ppv
    return match


def matching_size(adj, alive: int) -> int:
    return sum(1 for m in max_matching(adj, alive) if m != -1) // 2


def has_perfect_matching(adj, alive: int) -> bool:
    cnt = alive.bit_count()
    if cnt & 1:
        return False
    return 2 * matching_size(adj, alive) == cnt


def brute_matching_size(adj, alive: int) -> int:
    """Exhaustive maximum matching size: the lowest vertex is left exposed or
    matched to each neighbour in turn."""
    memo: dict[int, int] = {}

    def best(mask: int) -> int:
        if mask & (mask - 1) == 0:
            return 0
        hit = memo.get(mask)
        if hit is not None:
            return hit
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        result = best(rest)
        for w in _bits(adj[v] & rest):
            cand = 1 + best(rest ^ (1 << w))
            if cand > result:
                result = cand
        memo[mask] = result
        return result

    return best(alive)


def components(adj, alive: int) -> list[int]:
    """Component vertex masks, ordered by smallest member."""
    out = []
    rest = alive
    while rest:
        comp = rest & -rest
        frontier = comp
        while frontier:
            grow = 0
            for v in _bits(frontier):
                grow |= adj[v]
            grow &= rest & ~comp
            comp |= grow
            frontier = grow
        out.append(comp)
        rest &= ~comp
    return out


def odd_component_count(adj, alive: int) -> int:
    return sum(1 for c in components(adj, alive) if c.bit_count() & 1)


def is_connected(adj, alive: int) -> bool:
    return len(components(adj, alive)) <= 1


def tutte_barrier(adj, alive: int) -> int:
    """A set X with c_o(G[alive] - X) > |X|, or -1 if a perfect matching exists.

    X is the neighbourhood of the vertices missed by some maximum matching
    (Gallai-Edmonds); those vertices are found by deleting each one and
    checking whether the maximum matching shrinks.
    """
    mate = max_matching(adj, alive)
    size = sum(1 for m in mate if m != -1) // 2
    count = alive.bit_count()
    if 2 * size == count:
        return -1
    missed = 0
    for v in _bits(alive):
        if mate[v] == -1 or matching_size(adj, alive & ~(1 << v)) == size:
            missed |= 1 << v
    barrier = 0
    for v in _bits(missed):
        barrier |= adj[v]
    return barrier & alive & ~missed


def kfc_failure(adj, k: int, avoid: int = 0, skip_u: int = -1, skip_v: int = -1) -> int:
    """First k-subset X (colex, drawn from vertices outside ``avoid``) such
    that G - X has no perfect matching, or -1.

    ``skip_u``/``skip_v`` name an edge to treat as deleted.
    """
    n = len(adj)
    if skip_u >= 0:
        adj = list(adj)
        adj[skip_u] &= ~(1 << skip_v)
        adj[skip_v] &= ~(1 << skip_u)
    full = full_mask(n)
    universe = [v for v in range(n) if not (avoid >> v) & 1]
    if (n - k) & 1:
        for x in _colex_subsets(universe, k):
            return x
        return -1
    for x in _colex_subsets(universe, k):
        if not has_perfect_matching(adj, full & ~x):
            return x
    return -1


def non_minimal_edge(adj, k: int) -> tuple[int, int] | None:
    """First edge (lexicographic) whose deletion keeps a k-factor-critical
    graph k-factor-critical.  Assumes the input graph is k-factor-critical,
    so a failing set for G - uv must avoid u and v."""
    n = len(adj)
    for u in range(n):
        for v in _bits(adj[u] >> (u + 1) << (u + 1)):
            if kfc_failure(adj, k, (1 << u) | (1 << v), u, v) == -1:
                return (u, v)
    return None


def find_witness(adj, k: int, u: int, v: int, min_size: int, max_size: int) -> int:
    """Smallest S (sizes ascending, colex within a size) with S avoiding u, v,
    c_o(G - uv - S) = |S| - k + 2 and u, v in distinct odd components."""
    n = len(adj)
    adj = list(adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    full = full_mask(n)
    universe = [w for w in range(n) if w != u and w != v]
    for size in range(max(min_size, 0), min(max_size, n - 2) + 1):
        want = size - k + 2
        if want < 2:
            continue
        for s in _colex_subsets(universe, size):
            comps = components(adj, full & ~s)
            odd = 0
            cu = cv = 0
            for c in comps:
                if c.bit_count() & 1:
                    odd += 1
                    if (c >> u) & 1:
                        cu = c
                    if (c >> v) & 1:
                        cv = c
            if odd == want and cu and cv and cu != cv:
                return s
    return -1


def all_edges_have_witness(adj, k: int) -> bool:
    n = len(adj)
    for u in range(n):
        for v in _bits(adj[u] >> (u + 1) << (u + 1)):
            if find_witness(adj, k, u, v, k, n - 2) == -1:
                return False
    return True


def find_claw(adj) -> tuple[int, int, int, int] | None:
    """Lexicographically least (centre, a, b, c) with a < b < c pairwise
    non-adjacent neighbours of the centre."""
    n = len(adj)
    for c in range(n):
        nb = list(_bits(adj[c]))
        for i, a in enumerate(nb):
            for j in range(i + 1, len(nb)):
                b = nb[j]
                if (adj[a] >> b) & 1:
                    continue
                for d in nb[j + 1:]:
                    if not (adj[a] >> d) & 1 and not (adj[b] >> d) & 1:
                        return (c, a, b, d)
    return None


def vertex_connectivity(adj) -> int:
    """Smallest vertex cut by exhaustive search; n - 1 for complete graphs."""
    n = len(adj)
    if n <= 1:
        return 0
    full = full_mask(n)
    everyone = list(range(n))
    for size in range(n - 1):
        for s in _colex_subsets(everyone, size):
            if not is_connected(adj, full & ~s):
                return size
    return n - 1


def edge_connectivity(adj) -> int:
    """Smallest edge cut by scanning every vertex bipartition that holds 0."""
    n = len(adj)
    if n <= 1:
        return 0
    best = None
    full = full_mask(n)
    for side in range(1 << (n - 1)):
        s = (side << 1) | 1
        if s == full:
            continue
        cut = 0
        for v in _bits(s):
            cut += (adj[v] & ~s & full).bit_count()
        if best is None or cut < best:
            best = cut
    return best if best is not None else 0
