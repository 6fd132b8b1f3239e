"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--graphs 500] [--seed 1] [--repeat 3]

Both backends run the same calls on the same seeded random graphs; results
are compared before any timing is reported.
"""

from __future__ import annotations

import argparse
import random
import time
from itertools import combinations

from kfcrit.graph import Graph
from kfcrit.kernels import backends


def sample(rng: random.Random, count: int, lo: int, hi: int, p: float | None = None) -> list[Graph]:
    out = []
    for _ in range(count):
        n = rng.randint(lo, hi)
        q = rng.random() if p is None else p
        out.append(Graph.from_edges(n, [e for e in combinations(range(n), 2) if rng.random() < q]))
    return out


def workloads(rng: random.Random, count: int):
    medium = sample(rng, count, 10, 16)
    dense = sample(rng, count // 10 or 1, 10, 12, p=0.8)
    big = sample(rng, count // 20 or 1, 40, 64, p=0.2)
    return {
        "max_matching n=40..64": (big, lambda m, g: tuple(m.max_matching(g.adj, g.full))),
        "brute matching n=10..16": (medium, lambda m, g: m.brute_matching_size(g.adj, g.full)),
        "tutte_barrier n=10..16": (medium, lambda m, g: m.tutte_barrier(g.adj, g.full)),
        "find_claw n=10..16": (medium, lambda m, g: m.find_claw(g.adj)),
        "kfc_failure k=2 dense": (dense, lambda m, g: m.kfc_failure(g.adj, 2)),
        "non_minimal_edge k=2 dense": (dense, lambda m, g: m.non_minimal_edge(g.adj, 2)),
        "all_edges_have_witness k=2 dense": (dense, lambda m, g: m.all_edges_have_witness(g.adj, 2)),
        "vertex_connectivity n=10..16": (medium, lambda m, g: m.vertex_connectivity(g.adj)),
    }


def best_of(fn, graphs, mod, repeat: int) -> tuple[float, list]:
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = [fn(mod, g) for g in graphs]
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--graphs", type=int, default=500)
    ap.add_argument("--seed", type=int, default=1)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)

    mods = backends()
    if "cython" not in mods:
        print("compiled extension not built; only the Python backend is available")
        return 1
    rng = random.Random(args.seed)
    print(f"{'workload':36} {'graphs':>7} {'cython s':>10} {'python s':>10} {'speedup':>8}")
    for name, (graphs, fn) in workloads(rng, args.graphs).items():
        tc, rc = best_of(fn, graphs, mods["cython"], args.repeat)
        tp, rp = best_of(fn, graphs, mods["python"], args.repeat)
        if rc != rp:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:36} {len(graphs):>7} {tc:>10.4f} {tp:>10.4f} {tp / tc:>7.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
