"""k-factor-criticality, minimality and brick decisions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from . import kernels
from .graph import Edge, Graph, delete_edge, delete_vertices, members, vertex_connectivity
from .matching import TutteCertificate, tutte_certificate


@dataclass(frozen=True)
class CriticalityVerdict:
    """Outcome of a k-factor-criticality test.

    On failure ``failing_removal`` is the colex-least k-set X whose removal
    leaves no perfect matching, and ``failing_certificate`` is a Tutte
    certificate for G - X in the relabelled ids given by ``relabel``
    (``relabel[i]`` is the original id of vertex i of G - X).
    """

    holds: bool
    k: int
    failing_removal: frozenset[int] | None = None
    failing_certificate: TutteCertificate | None = None
    relabel: tuple[int, ...] | None = None

    def __bool__(self):
        return self.holds

    def certificate_in_original_ids(self) -> tuple[frozenset[int], list[frozenset[int]]] | None:
        if self.failing_certificate is None:
            return None
        back = self.relabel
        X = frozenset(back[i] for i in self.failing_certificate.X)
        odd = [frozenset(back[i] for i in c) for c in self.failing_certificate.partition.odd_components]
        return X, odd


@dataclass(frozen=True)
class MinimalityVerdict:
    holds: bool
    k: int
    critical: CriticalityVerdict
    edge: Edge | None = None  # an edge whose deletion keeps G k-factor-critical

    def __bool__(self):
        return self.holds


def _check_k(g: Graph, k: int, lo: int = 0, strict_upper: bool = False) -> None:
    if not isinstance(k, int) or k < lo or k > g.n or (strict_upper and k >= g.n):
        raise ValueError(f"k={k} out of range for n={g.n}")


def kfc_failure(g: Graph, k: int) -> frozenset[int] | None:
    """Colex-least k-set X with G - X lacking a perfect matching, or None."""
    _check_k(g, k)
    x = kernels.kfc_failure(g.adj, k)
    return None if x == -1 else members(x)


def is_k_factor_critical(g: Graph, k: int) -> CriticalityVerdict:
    """Whether deleting any k vertices leaves a perfect matching.

    k = 0 means "has a perfect matching".  When n - k is odd the verdict is
    false at once, with the first k-set as the (trivially) failing removal.
    """
    _check_k(g, k)
    X = kfc_failure(g, k)
    if X is None:
        return CriticalityVerdict(True, k)
    reduced, relabel = delete_vertices(g, X)
    cert = tutte_certificate(reduced)
    return CriticalityVerdict(False, k, X, cert, relabel)


def is_minimal_k_factor_critical(g: Graph, k: int) -> MinimalityVerdict:
    """Minimal: k-factor-critical, and no single edge deletion preserves it.

    For G - uv only k-sets avoiding u and v can fail (any X containing an
    endpoint leaves G - X untouched by the deletion), so the kernel searches
    just those.
    """
    _check_k(g, k, lo=1, strict_upper=True)
    crit = is_k_factor_critical(g, k)
    if not crit:
        return MinimalityVerdict(False, k, crit)
    hit = kernels.non_minimal_edge(g.adj, k)
    if hit is None:
        return MinimalityVerdict(True, k, crit)
    return MinimalityVerdict(False, k, crit, Edge(*hit))


def is_factor_critical(g: Graph) -> bool:
    return g.n >= 2 and is_k_factor_critical(g, 1).holds


def is_bicritical(g: Graph) -> bool:
    return g.n >= 3 and g.m > 0 and is_k_factor_critical(g, 2).holds


def is_brick(g: Graph) -> bool:
    """3-connected and bicritical."""
    if g.n < 4:
        return False
    return vertex_connectivity(g) >= 3 and is_k_factor_critical(g, 2).holds


def brick_breaking_edge(g: Graph) -> Edge | None:
    """First edge e (canonical order) with G - e still a brick."""
    for e in g.edges():
        if is_brick(delete_edge(g, e)):
            return e
    return None


def is_minimal_brick(g: Graph) -> bool:
    return is_brick(g) and brick_breaking_edge(g) is None


def minimal_brick_not_minimal_bicritical(graphs: Iterable[Graph]) -> Iterator[tuple[Graph, Edge]]:
    """Yield minimal bricks that are not minimal bicritical, each with an
    edge e such that G - e is still bicritical."""
    for g in graphs:
        if g.n < 4 or g.n % 2 or g.min_degree() < 3:
            continue
        if not is_minimal_brick(g):
            continue
        verdict = is_minimal_k_factor_critical(g, 2)
        if not verdict.holds and verdict.edge is not None:
            yield g, verdict.edge
