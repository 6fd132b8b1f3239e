"""Maximum matchings, perfect-matching decisions and Tutte certificates."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from . import kernels
from .graph import ComponentPartition, Edge, Graph, components, mask_of, members

BRUTE_FORCE_LIMIT = 16


@dataclass(frozen=True)
class Matching:
    edges: frozenset[Edge]

    def __len__(self):
        return len(self.edges)

    @property
    def size(self) -> int:
        return len(self.edges)

    def mate(self) -> dict[int, int]:
        out = {}
        for e in self.edges:
            out[e.u] = e.v
            out[e.v] = e.u
        return out

    def covered(self) -> frozenset[int]:
        return frozenset(self.mate())

    def is_valid(self, g: Graph) -> bool:
        seen: set[int] = set()
        for e in self.edges:
            if not g.has_edge(e.u, e.v) or e.u in seen or e.v in seen:
                return False
            seen.update((e.u, e.v))
        return True

    def is_perfect(self, g: Graph) -> bool:
        return self.is_valid(g) and 2 * self.size == g.n

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)


def _from_mates(mate: list[int]) -> Matching:
    return Matching(frozenset(Edge(v, w) for v, w in enumerate(mate) if w > v))


def maximum_matching(g: Graph) -> Matching:
    """Maximum-cardinality matching via Edmonds' blossom algorithm."""
    return _from_mates(kernels.max_matching(g.adj, g.full))


def has_perfect_matching(g: Graph) -> bool:
    if g.n % 2:
        return False
    return kernels.has_perfect_matching(g.adj, g.full)


def brute_force_maximum_matching(g: Graph) -> Matching:
    """Maximum matching by exhaustive branching (test oracle, n <= 16)."""
    if g.n > BRUTE_FORCE_LIMIT:
        raise ValueError(f"brute force is limited to {BRUTE_FORCE_LIMIT} vertices, got {g.n}")
    adj = g.adj
    mask = g.full
    best = kernels.brute_matching_size(adj, mask)
    edges = []
    # walk down the exhaustive recursion along an optimal branch
    while best:
        v = (mask & -mask).bit_length() - 1
        rest = mask & ~(1 << v)
        if kernels.brute_matching_size(adj, rest) == best:
            mask = rest
            continue
        for w in members(adj[v] & rest):
            if kernels.brute_matching_size(adj, rest & ~(1 << w)) == best - 1:
                edges.append(Edge(v, w))
                mask = rest & ~(1 << w)
                best -= 1
                break
        else:
            raise AssertionError("exhaustive recursion lost its optimum")
    return Matching(frozenset(edges))


def find_augmenting_path(g: Graph, m: Matching) -> list[int] | None:
    """An M-augmenting path found by exhaustive DFS over simple alternating
    paths from each exposed vertex, or None.  Exponential; for checks only."""
    mate = m.mate()
    exposed = [v for v in g.vertices if v not in mate]

    def extend(path: list[int], on_path: set[int]):
        last = path[-1]
        # odd positions leave along non-matching edges
        for w in g.neighbors(last):
            if w in on_path or mate.get(last) == w:
                continue
            if w not in mate:
                return path + [w]
            x = mate[w]
            if x in on_path:
                continue
            found = extend(path + [w, x], on_path | {w, x})
            if found:
                return found
        return None

    for s in exposed:
        found = extend([s], {s})
        if found:
            return found
    return None


@dataclass(frozen=True)
class TutteCertificate:
    """A set X with more odd components in G - X than |X|."""

    X: frozenset[int]
    partition: ComponentPartition

    @property
    def odd_count(self) -> int:
        return self.partition.odd_count

    def verify(self, g: Graph) -> bool:
        """Recompute the components of G - X from scratch."""
        return components(g, self.X).odd_count > len(self.X)


def _exhaustive_barrier(g: Graph) -> frozenset[int] | None:
    for size in range(g.n + 1):
        for xs in combinations(range(g.n), size):
            alive = g.full & ~mask_of(xs)
            if kernels.odd_component_count(g.adj, alive) > size:
                return frozenset(xs)
    return None


def tutte_certificate(g: Graph) -> TutteCertificate | None:
    """None iff g has a perfect matching; otherwise a verified barrier.

    The barrier is the Gallai-Edmonds set A(G); if it ever failed to verify,
    an exhaustive search over subsets (n <= 16) would take over.
    """
    barrier = kernels.tutte_barrier(g.adj, g.full)
    if barrier == -1:
        return None
    X = members(barrier)
    part = components(g, X)
    if part.odd_count <= len(X):
        if g.n > BRUTE_FORCE_LIMIT:
            raise AssertionError("Gallai-Edmonds barrier failed to verify")
        X = _exhaustive_barrier(g)
        if X is None:
            raise AssertionError("no Tutte barrier found for a graph without perfect matching")
        part = components(g, X)
    return TutteCertificate(X, part)
