"""The compiled and pure-Python kernels must agree call for call."""

from __future__ import annotations

import os
import subprocess
import sys

import pytest

from kfcrit import kernels
from kfcrit.kernels import backends

from .helpers import all_graphs, random_graph

pytestmark = pytest.mark.skipif("cython" not in backends(), reason="extension not built")


def _results(mod, g, k):
    adj, full = g.adj, g.full
    res = [
        tuple(mod.max_matching(adj, full)),
        mod.matching_size(adj, full),
        mod.has_perfect_matching(adj, full),
        mod.brute_matching_size(adj, full),
        mod.tutte_barrier(adj, full),
        tuple(mod.components(adj, full)),
        mod.odd_component_count(adj, full),
        mod.is_connected(adj, full),
        mod.find_claw(adj),
        mod.vertex_connectivity(adj),
        mod.edge_connectivity(adj),
        mod.kfc_failure(adj, k),
        mod.non_minimal_edge(adj, k) if mod.kfc_failure(adj, k) == -1 else None,
        mod.all_edges_have_witness(adj, k),
    ]
    for e in g.edges()[:4]:
        res.append(mod.find_witness(adj, k, e.u, e.v, k, g.n - 2))
        res.append(mod.kfc_failure(adj, k, (1 << e.u) | (1 << e.v), e.u, e.v))
    return res


def test_backends_agree_exhaustively_small():
    c, py = backends()["cython"], backends()["python"]
    for g in all_graphs(5):
        for k in range(0, min(g.n, 3) + 1):
            if k == 0:
                assert c.kfc_failure(g.adj, 0) == py.kfc_failure(g.adj, 0)
                continue
            assert _results(c, g, k) == _results(py, g, k)


def test_backends_agree_random(rng):
    c, py = backends()["cython"], backends()["python"]
    for _ in range(400):
        g = random_graph(rng, rng.randint(6, 12))
        k = rng.randint(1, 3)
        assert _results(c, g, k) == _results(py, g, k)


def test_dispatch_falls_back_above_64_vertices():
    adj = [0] * 70
    for i in range(0, 70, 2):
        adj[i] |= 1 << (i + 1)
        adj[i + 1] |= 1 << i
    assert kernels.matching_size(adj, (1 << 70) - 1) == 35
    with pytest.raises(ValueError):
        backends()["cython"].matching_size(adj, (1 << 70) - 1)


def test_pure_python_fallback_selected_by_env():
    env = dict(os.environ, KFCRIT_PURE_PYTHON="1")
    code = "import kfcrit; print(kfcrit.BACKEND)"
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "python"
    assert kernels.BACKEND == "cython"
