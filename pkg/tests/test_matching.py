from __future__ import annotations

from functools import lru_cache

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from kfcrit.graph import Graph, complete_graph, empty_graph
from kfcrit.matching import (
    Matching,
    brute_force_maximum_matching,
    find_augmenting_path,
    has_perfect_matching,
    maximum_matching,
    tutte_certificate,
)

from .helpers import C5, C6, C7, CLAW, K2, K4, PETERSEN, all_graphs, random_graph


def edge_list_oracle(g: Graph) -> int:
    """Maximum matching size by recursion over the edge list: take or skip
    each edge.  Shares no code with the package."""
    edges = [(e.u, e.v) for e in g.edges()]

    @lru_cache(maxsize=None)
    def best(i: int, used: int) -> int:
        if i == len(edges):
            return 0
        u, v = edges[i]
        skip = best(i + 1, used)
        if used >> u & 1 or used >> v & 1:
            return skip
        return max(skip, 1 + best(i + 1, used | 1 << u | 1 << v))

    return best(0, 0)


@pytest.mark.parametrize("g, size", [(K4, 2), (CLAW, 1), (PETERSEN, 5), (C7, 3), (empty_graph(4), 0)])
def test_sizes(g, size):
    m = maximum_matching(g)
    assert m.size == size and m.is_valid(g)
    assert brute_force_maximum_matching(g).size == size


@pytest.mark.parametrize("g, expected", [(K2, True), (C5, False), (C6, True), (PETERSEN, True), (CLAW, False)])
def test_has_perfect_matching(g, expected):
    assert has_perfect_matching(g) is expected


def test_against_edge_list_oracle_small_exhaustive():
    for g in all_graphs(6):
        m = maximum_matching(g)
        b = brute_force_maximum_matching(g)
        assert m.is_valid(g) and b.is_valid(g)
        assert m.size == b.size == edge_list_oracle(g)


def test_random_graphs_agree(rng):
    for _ in range(300):
        g = random_graph(rng, rng.randint(8, 14))
        m = maximum_matching(g)
        assert m.is_valid(g)
        assert m.size == brute_force_maximum_matching(g).size
        assert find_augmenting_path(g, m) is None


def test_augmenting_path_found_for_submaximum():
    g = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3)])
    path = find_augmenting_path(g, Matching(frozenset([g.edges()[1]])))
    assert path == [0, 1, 2, 3]


def test_brute_force_guard():
    with pytest.raises(ValueError):
        brute_force_maximum_matching(complete_graph(17))


@pytest.mark.parametrize(
    "g, X, odd",
    [(CLAW, {0}, 3), (C5, set(), 1)],
)
def test_certificate_examples(g, X, odd):
    cert = tutte_certificate(g)
    assert cert.X == frozenset(X)
    assert cert.odd_count == odd
    assert cert.verify(g)


def test_no_certificate_for_k4():
    assert tutte_certificate(K4) is None


def test_tutte_duality_small_exhaustive():
    for g in all_graphs(6):
        cert = tutte_certificate(g)
        assert (cert is None) == has_perfect_matching(g)
        if cert is not None:
            assert cert.verify(g) and cert.odd_count > len(cert.X)


@settings(max_examples=200, deadline=None)
@given(st.integers(1, 20), st.randoms(use_true_random=False))
def test_duality_and_parity_random(n, r):
    g = random_graph(r, n)
    m = maximum_matching(g)
    cert = tutte_certificate(g)
    assert (cert is None) == (2 * m.size == n)
    if cert is not None:
        assert cert.verify(g)
        # Tutte-Berge: deficiency is at least c_o(G - X) - |X| for every X
        assert n - 2 * m.size >= cert.odd_count - len(cert.X)
        assert (cert.odd_count - len(cert.X)) % 2 == n % 2
