"""Witness sets for minimal k-factor-critical graphs, edge types and
Property Q cuts.

A witness for an edge e = uv is a set S avoiding u and v such that
G - e - S has exactly |S| - k + 2 odd components, with u and v in two
different ones.  A k-factor-critical graph is minimal exactly when every
edge has one.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from itertools import combinations

from . import kernels
from .criticality import is_minimal_k_factor_critical
from .graph import (
    ComponentPartition,
    Edge,
    Graph,
    components,
    delete_edge,
    find_claw,
    induced_subgraph,
    mask_of,
    members,
    vertex_connectivity,
)


class StructuralViolation(RuntimeError):
    """A smallest witness with a shape the theory rules out.

    Under valid preconditions this can only mean a bug; runs abort on it.
    """

    def __init__(self, message: str, edge: Edge | None = None):
        super().__init__(message)
        self.edge = edge


@dataclass(frozen=True)
class WitnessSet:
    edge: Edge
    S: frozenset[int]
    partition: ComponentPartition  # components of G - e - S
    comp_u: int
    comp_v: int

    @property
    def size(self) -> int:
        return len(self.S)

    @property
    def odd_components(self) -> tuple[frozenset[int], ...]:
        return self.partition.odd_components

    def other_odd_components(self) -> list[frozenset[int]]:
        return [
            c
            for i, c in enumerate(self.partition.components)
            if len(c) % 2 and i not in (self.comp_u, self.comp_v)
        ]


def _as_edge(g: Graph, e) -> Edge:
    e = e if isinstance(e, Edge) else Edge(*e)
    if not (0 <= e.u < g.n and 0 <= e.v < g.n) or not g.has_edge(e.u, e.v):
        raise ValueError(f"{e} is not an edge of the graph")
    return e


def _witness_from_set(g: Graph, e: Edge, S: frozenset[int]) -> WitnessSet:
    part = components(delete_edge(g, e), S)
    return WitnessSet(e, S, part, part.index_of(e.u), part.index_of(e.v))


def verify_witness(g: Graph, k: int, w: WitnessSet) -> bool:
    """Recompute every witness condition on g from scratch."""
    e = _as_edge(g, w.edge)
    S = frozenset(w.S)
    for x in S:
        if not 0 <= x < g.n:
            raise ValueError(f"vertex {x} out of range")
    if e.u in S or e.v in S or len(S) < k:
        return False
    part = components(delete_edge(g, e), S)
    if part.odd_count != len(S) - k + 2:
        return False
    cu, cv = part.index_of(e.u), part.index_of(e.v)
    if cu == cv:
        return False
    return len(part.components[cu]) % 2 == 1 and len(part.components[cv]) % 2 == 1


def find_witness(g: Graph, k: int, e, minimize: bool = True,
                 max_size: int | None = None) -> WitnessSet | None:
    """A witness for e, searching sizes k, k+1, ... and colex order within a
    size, so the first hit is also a smallest one.  ``minimize`` is kept for
    callers that only need existence; both modes return the same set."""
    e = _as_edge(g, e)
    if not 1 <= k < g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    top = g.n - 2 if max_size is None else max_size
    s = kernels.find_witness(g.adj, k, e.u, e.v, k, top)
    if s == -1:
        return None
    return _witness_from_set(g, e, members(s))


def witness_free_edge(g: Graph, k: int) -> Edge | None:
    """First edge (canonical order) admitting no witness, or None."""
    for e in g.edges():
        if find_witness(g, k, e) is None:
            return e
    return None


# ---------------------------------------------------------------- edge types

class EdgeType(enum.Enum):
    TYPE1 = "type1"
    TYPE2 = "type2"
    NOT_APPLICABLE = "not_applicable"


@dataclass(frozen=True)
class EdgeClassification:
    edge: Edge
    verdict: EdgeType
    witness: WitnessSet | None = None
    reason: str = ""


def _check_preconditions(g: Graph, k: int) -> None:
    if find_claw(g) is not None:
        raise ValueError("graph is not claw-free")
    if not is_minimal_k_factor_critical(g, k).holds:
        raise ValueError(f"graph is not minimal {k}-factor-critical")


def classify_edge(g: Graph, k: int, e, verify_preconditions: bool = False) -> EdgeClassification:
    """Type of e in a minimal k-factor-critical claw-free graph.

    Edges with an endpoint of degree <= k+1, and every edge when k < 2,
    get NOT_APPLICABLE.  Otherwise the smallest witness must have size k
    (type 1) or k+1 (type 2) with the matching component shape; anything
    else raises StructuralViolation.
    """
    e = _as_edge(g, e)
    if k < 2:
        return EdgeClassification(e, EdgeType.NOT_APPLICABLE, reason="k < 2")
    if verify_preconditions:
        _check_preconditions(g, k)
    u, v = e
    if g.degree(u) <= k + 1 or g.degree(v) <= k + 1:
        return EdgeClassification(
            e, EdgeType.NOT_APPLICABLE, reason=f"endpoint degree <= k+1 ({g.degree(u)}, {g.degree(v)})"
        )
    w = find_witness(g, k, e, max_size=k + 1)
    if w is None:
        raise StructuralViolation(f"{e}: no witness of size {k} or {k + 1}", e)
    part = w.partition
    if part.even_components:
        raise StructuralViolation(f"{e}: G - e - S has an even component", e)
    cu = part.components[w.comp_u]
    cv = part.components[w.comp_v]
    if w.size == k:
        if part.odd_count != 2 or len(cu) == 1 or len(cv) == 1:
            raise StructuralViolation(f"{e}: size-{k} witness without two nontrivial odd components", e)
        return EdgeClassification(e, EdgeType.TYPE1, w)
    others = w.other_odd_components()
    if part.odd_count != 3 or len(cu) != 1 or len(cv) != 1 or len(others) != 1:
        raise StructuralViolation(f"{e}: size-{k + 1} witness without the three-component shape", e)
    third = mask_of(others[0])
    for x in w.S:
        if not (g.has_edge(u, x) and g.has_edge(v, x) and g.adj[x] & third):
            raise StructuralViolation(f"{e}: witness vertex {x} breaks the type-2 shape", e)
    return EdgeClassification(e, EdgeType.TYPE2, w)


def classify_edges(g: Graph, k: int) -> list[EdgeClassification]:
    return [classify_edge(g, k, e) for e in g.edges()]


# ---------------------------------------------------------------- Property Q

@dataclass(frozen=True)
class PropertyQCut:
    edge: Edge
    anchor: int  # endpoint lying in the odd component C
    X: frozenset[int]
    C: frozenset[int]


def derive_property_q_cuts(g: Graph, k: int, e, w: WitnessSet) -> tuple[PropertyQCut, PropertyQCut]:
    """The cuts S + {v} anchored at u and S + {u} anchored at v from a
    size-k witness."""
    e = _as_edge(g, e)
    if len(w.S) != k:
        raise ValueError(f"Property Q cuts need a witness of size k={k}, got {len(w.S)}")
    cuts = []
    for anchor in (e.u, e.v):
        X = frozenset(w.S) | {e.other(anchor)}
        C = components(g, X).components
        comp = next(c for c in C if anchor in c)
        cuts.append(PropertyQCut(e, anchor, X, comp))
    return cuts[0], cuts[1]


def property_q_failure(g: Graph, k: int, c: PropertyQCut) -> int | None:
    """Index (1-4) of the first violated Property Q clause, or None."""
    e = _as_edge(g, c.edge)
    if c.anchor not in (e.u, e.v):
        raise ValueError(f"anchor {c.anchor} is not an endpoint of {e}")
    other = e.other(c.anchor)
    X = frozenset(c.X)
    if len(X) != k + 1:
        return 1
    if other not in X:
        return 2
    if c.anchor in X:
        return 3
    comp = next(cc for cc in components(g, X).components if c.anchor in cc)
    if len(comp) % 2 == 0 or comp != frozenset(c.C):
        return 3
    if g.adj[other] & mask_of(comp) != 1 << c.anchor:
        return 4
    return None


def verify_property_q(g: Graph, k: int, c: PropertyQCut) -> bool:
    return property_q_failure(g, k, c) is None


# ------------------------------------------------------- structural checks

@dataclass(frozen=True)
class Violation:
    check: str
    edge: Edge | None
    detail: str


@dataclass
class StructuralReport:
    violations: list[Violation] = field(default_factory=list)
    classifications: list[EdgeClassification] = field(default_factory=list)

    @property
    def applicable_edges(self) -> int:
        return sum(1 for c in self.classifications if c.verdict is not EdgeType.NOT_APPLICABLE)

    def __bool__(self):
        return not self.violations


def edge_is_forced(g: Graph, X, e: Edge) -> bool:
    """Whether every perfect matching of G - X uses e: G - X - u - v has a
    perfect matching while G - X - e has none."""
    alive = g.full & ~mask_of(X)
    u, v = e
    if not kernels.has_perfect_matching(g.adj, alive & ~(1 << u) & ~(1 << v)):
        return False
    adj = list(g.adj)
    adj[u] &= ~(1 << v)
    adj[v] &= ~(1 << u)
    return not kernels.has_perfect_matching(adj, alive)


def check_structural_propositions(g: Graph, k: int) -> StructuralReport:
    """Classify all edges and check the consequences of the edge-type theory:

    * ``dichotomy``: smallest witnesses have the type-1 or type-2 shape;
    * ``twin_neighbourhoods``: a type-2 edge uv has N(u)-v = N(v)-u;
    * ``one_type2_per_vertex``: no vertex meets two type-2 edges;
    * ``forced_edge``: for each edge and each k-subset X of its smallest
      witness, every perfect matching of G - X contains the edge;
    * ``witness_vertex_reach``: for a smallest witness of size >= k+1 each
      of its vertices sees an odd component other than those of u and v;
    * ``property_q``: cuts derived from type-1 witnesses verify.

    Returns an empty report (all edges not applicable) when k < 2.
    """
    report = StructuralReport()
    if k < 2:
        report.classifications = [
            EdgeClassification(e, EdgeType.NOT_APPLICABLE, reason="k < 2") for e in g.edges()
        ]
        return report
    add = report.violations.append
    type2_at: dict[int, list[Edge]] = {}
    for e in g.edges():
        try:
            cls = classify_edge(g, k, e)
        except StructuralViolation as exc:
            add(Violation("dichotomy", e, str(exc)))
            continue
        report.classifications.append(cls)
        u, v = e
        if cls.verdict is EdgeType.TYPE2:
            if g.neighbors(u) - {v} != g.neighbors(v) - {u}:
                add(Violation("twin_neighbourhoods", e, "N(u)-v != N(v)-u"))
            type2_at.setdefault(u, []).append(e)
            type2_at.setdefault(v, []).append(e)
        elif cls.verdict is EdgeType.TYPE1:
            for cut in derive_property_q_cuts(g, k, e, cls.witness):
                bad = property_q_failure(g, k, cut)
                if bad is not None:
                    add(Violation("property_q", e, f"cut anchored at {cut.anchor} fails clause {bad}"))

        w = cls.witness or find_witness(g, k, e)
        if w is None:
            add(Violation("forced_edge", e, "no witness for this edge"))
            continue
        for X in combinations(sorted(w.S), k):
            if not edge_is_forced(g, X, e):
                add(Violation("forced_edge", e, f"a perfect matching of G - {list(X)} avoids the edge"))
        if w.size >= k + 1:
            reach = 0
            for c in w.other_odd_components():
                reach |= mask_of(c)
            for x in sorted(w.S):
                if not g.adj[x] & reach:
                    add(Violation("witness_vertex_reach", e, f"vertex {x} sees no other odd component"))
    for x, es in sorted(type2_at.items()):
        if len(es) > 1:
            add(Violation("one_type2_per_vertex", None, f"vertex {x} meets type-2 edges {es}"))
    return report


# ------------------------------------------------------------ forest claim

def _is_forest(edges: list[Edge]) -> bool:
    parent: dict[int, int] = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in edges:
        a, b = find(e.u), find(e.v)
        if a == b:
            return False
        parent[a] = b
    return True


def high_degree_edges(g: Graph, k: int) -> tuple[frozenset[int], list[Edge]]:
    """Vertices of degree >= k+2 and the edges of the subgraph they induce."""
    high = frozenset(v for v in g.vertices if g.degree(v) >= k + 2)
    sub, back = induced_subgraph(g, high)
    return high, [Edge(back[a], back[b]) for a, b in sub.edges()]


def type1_forest_check(g: Graph, k: int, check_preconditions: bool = True) -> bool:
    """Whether the type-1 edges among vertices of degree >= k+2 span a forest."""
    if k < 2:
        raise ValueError("the forest claim needs k >= 2")
    if check_preconditions:
        _check_preconditions(g, k)
        if vertex_connectivity(g) < k + 1:
            raise ValueError(f"graph is not {k + 1}-connected")
    _, edges = high_degree_edges(g, k)
    type1 = [e for e in edges if classify_edge(g, k, e).verdict is EdgeType.TYPE1]
    return _is_forest(type1)
