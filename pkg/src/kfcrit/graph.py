"""Simple undirected graphs on vertices ``0..n-1`` and their basic queries.

Adjacency is stored as one int bitmask per vertex, which is also the
representation the kernels consume.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from . import kernels

VertexSet = frozenset


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> frozenset[int]:
    return frozenset(_bits(mask))


@dataclass(frozen=True, order=True)
class Edge:
    """Undirected edge stored as ``(u, v)`` with ``u < v``."""

    u: int
    v: int

    def __post_init__(self):
        if self.u == self.v:
            raise ValueError(f"self-loop at {self.u}")
        if self.u > self.v:
            a, b = self.v, self.u
            object.__setattr__(self, "u", a)
            object.__setattr__(self, "v", b)

    def __iter__(self):
        yield self.u
        yield self.v

    def other(self, x: int) -> int:
        if x == self.u:
            return self.v
        if x == self.v:
            return self.u
        raise ValueError(f"{x} is not an endpoint of {self}")

    def __repr__(self):
        return f"Edge({self.u}, {self.v})"


class Graph:
    """Immutable simple graph.

    >>> g = Graph.from_edges(3, [(0, 1), (1, 2)])
    >>> g.degree(1), g.m
    (2, 2)
    """

    __slots__ = ("n", "adj", "_hash")

    def __init__(self, n: int, adj: Iterable[int], *, check: bool = True):
        adj = tuple(adj)
        if check:
            if n < 0 or len(adj) != n:
                raise ValueError(f"expected {n} adjacency rows, got {len(adj)}")
            limit = (1 << n) - 1
            for v, row in enumerate(adj):
                if row < 0 or row & ~limit:
                    raise ValueError(f"vertex {v} has a neighbour out of range")
                if (row >> v) & 1:
                    raise ValueError(f"self-loop at {v}")
                for w in _bits(row):
                    if not (adj[w] >> v) & 1:
                        raise ValueError(f"adjacency not symmetric at {v}-{w}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> Graph:
        adj = [0] * n
        for a, b in edges:
            if a == b:
                raise ValueError(f"self-loop at {a}")
            if not (0 <= a < n and 0 <= b < n):
                raise ValueError(f"edge {a}-{b} out of range for n={n}")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, adj, check=False)

    @classmethod
    def from_networkx(cls, nxg) -> Graph:
        nodes = sorted(nxg.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.from_edges(len(nodes), ((index[a], index[b]) for a, b in nxg.edges()))

    def __eq__(self, other):
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(self, "_hash", hash((self.n, self.adj)))
        return self._hash

    def __repr__(self):
        return f"Graph(n={self.n}, edges={[tuple(e) for e in self.edges()]})"

    @property
    def vertices(self) -> range:
        return range(self.n)

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def m(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edges(self) -> list[Edge]:
        """Edges in lexicographic (canonical) order."""
        out = []
        for u, row in enumerate(self.adj):
            for v in _bits(row >> (u + 1)):
                out.append(Edge(u, u + 1 + v))
        return out

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and 0 <= v < self.n and bool((self.adj[u] >> v) & 1)

    def neighbors(self, v: int) -> frozenset[int]:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def is_connected(self) -> bool:
        return kernels.is_connected(self.adj, self.full)

    def is_claw_free(self) -> bool:
        return kernels.find_claw(self.adj) is None


@dataclass(frozen=True)
class ComponentPartition:
    """Connected components, each a vertex set, ordered by smallest member."""

    components: tuple[frozenset[int], ...]

    @property
    def odd_count(self) -> int:
        return sum(1 for c in self.components if len(c) % 2)

    @property
    def odd_components(self) -> tuple[frozenset[int], ...]:
        return tuple(c for c in self.components if len(c) % 2)

    @property
    def even_components(self) -> tuple[frozenset[int], ...]:
        return tuple(c for c in self.components if not len(c) % 2)

    def index_of(self, v: int) -> int:
        for i, c in enumerate(self.components):
            if v in c:
                return i
        raise KeyError(v)

    def __len__(self):
        return len(self.components)


def _check_vertices(g: Graph, vs: Iterable[int]) -> frozenset[int]:
    vs = frozenset(vs)
    for v in vs:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise ValueError(f"vertex {v!r} out of range for n={g.n}")
    return vs


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Subgraph on ``keep`` relabelled densely by ascending original id.

    Returns ``(subgraph, mapping)`` where ``mapping[new] = original``.
    """
    mapping = tuple(sorted(_check_vertices(g, keep)))
    index = {v: i for i, v in enumerate(mapping)}
    keep_mask = mask_of(mapping)
    adj = []
    for v in mapping:
        row = 0
        for w in _bits(g.adj[v] & keep_mask):
            row |= 1 << index[w]
        adj.append(row)
    return Graph(len(mapping), adj, check=False), mapping


def delete_vertices(g: Graph, removed: Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """``G - X``, relabelled; see :func:`induced_subgraph` for the mapping."""
    removed = _check_vertices(g, removed)
    return induced_subgraph(g, (v for v in g.vertices if v not in removed))


def delete_edge(g: Graph, e: Edge | tuple[int, int]) -> Graph:
    u, v = e
    if not g.has_edge(u, v):
        raise ValueError(f"{u}-{v} is not an edge")
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return Graph(g.n, adj, check=False)


def components(g: Graph, removed: Iterable[int] = ()) -> ComponentPartition:
    """Components of ``G - removed`` in original vertex ids."""
    alive = g.full & ~mask_of(_check_vertices(g, removed))
    return ComponentPartition(tuple(members(c) for c in kernels.components(g.adj, alive)))


def find_claw(g: Graph) -> tuple[int, tuple[int, int, int]] | None:
    """Lexicographically least ``(centre, (a, b, c))`` inducing K_{1,3}."""
    hit = kernels.find_claw(g.adj)
    if hit is None:
        return None
    return hit[0], hit[1:]


# ------------------------------------------------------------ connectivity

def _max_flow(cap: dict[int, dict[int, int]], s: int, t: int, bound: int | None = None) -> int:
    """Unit-ish augmenting-path max flow on a residual capacity map."""
    flow = 0
    while bound is None or flow < bound:
        parent = {s: None}
        queue = deque([s])
        while queue and t not in parent:
            x = queue.popleft()
            for y, c in cap[x].items():
                if c > 0 and y not in parent:
                    parent[y] = x
                    queue.append(y)
        if t not in parent:
            break
        y = t
        while parent[y] is not None:
            x = parent[y]
            cap[x][y] -= 1
            cap[y][x] = cap[y].get(x, 0) + 1
            y = x
        flow += 1
    return flow


def local_vertex_connectivity(g: Graph, s: int, t: int) -> int:
    """Maximum number of internally disjoint s-t paths (s, t non-adjacent)."""
    # vertex v splits into v_in = 2v and v_out = 2v + 1
    inf = g.n
    cap: dict[int, dict[int, int]] = {x: {} for x in range(2 * g.n)}
    for v in g.vertices:
        cap[2 * v][2 * v + 1] = inf if v in (s, t) else 1
        cap[2 * v + 1].setdefault(2 * v, 0)
        for w in _bits(g.adj[v]):
            cap[2 * v + 1][2 * w] = inf
            cap[2 * w].setdefault(2 * v + 1, 0)
    return _max_flow(cap, 2 * s + 1, 2 * t)


def local_edge_connectivity(g: Graph, s: int, t: int) -> int:
    cap = {v: {w: 1 for w in _bits(g.adj[v])} for v in g.vertices}
    return _max_flow(cap, s, t)


def vertex_connectivity_menger(g: Graph) -> int:
    """Vertex connectivity from internally disjoint path counts."""
    n = g.n
    if n <= 1:
        return 0
    if not g.is_connected():
        return 0
    best = n - 1
    for s, t in combinations(range(n), 2):
        if not g.has_edge(s, t):
            best = min(best, local_vertex_connectivity(g, s, t))
    return best


def edge_connectivity_menger(g: Graph) -> int:
    if g.n < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    return min(local_edge_connectivity(g, 0, t) for t in range(1, g.n))


EXHAUSTIVE_LIMIT = 16


def vertex_connectivity(g: Graph) -> int:
    """Size of a smallest vertex cut; n - 1 for K_n, 0 if disconnected."""
    if g.n <= EXHAUSTIVE_LIMIT:
        return kernels.vertex_connectivity(g.adj)
    return vertex_connectivity_menger(g)


def edge_connectivity(g: Graph) -> int:
    """Size of a smallest disconnecting edge set."""
    if g.n < 2:
        raise ValueError("edge connectivity needs at least two vertices")
    if g.n <= EXHAUSTIVE_LIMIT:
        return kernels.edge_connectivity(g.adj)
    return edge_connectivity_menger(g)


# ------------------------------------------------------------ named graphs

def complete_graph(n: int) -> Graph:
    return Graph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)))


def path_graph(n: int) -> Graph:
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)))


def empty_graph(n: int) -> Graph:
    return Graph(n, [0] * n, check=False)


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves} with centre 0."""
    return Graph.from_edges(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph.from_edges(a + b, ((i, a + j) for i in range(a) for j in range(b)))


def bowtie_graph() -> Graph:
    """Two triangles sharing vertex 0."""
    return Graph.from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


def prism_graph() -> Graph:
    """Triangular prism (complement of C_6)."""
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)])


def wheel_graph(rim: int) -> Graph:
    """Hub 0 joined to a rim cycle on 1..rim."""
    edges = [(0, i) for i in range(1, rim + 1)]
    edges += [(i, i % rim + 1) for i in range(1, rim + 1)]
    return Graph.from_edges(rim + 1, edges)
