from __future__ import annotations

import random
from itertools import combinations

from kfcrit.graph import (
    Graph,
    bowtie_graph,
    complete_bipartite_graph,
    complete_graph,
    cycle_graph,
    path_graph,
    petersen_graph,
    star_graph,
)
from kfcrit.harness import enumerate_labeled_graphs


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(a, b) for a, b in combinations(range(n), 2) if rng.random() < p])


def all_graphs(max_n: int, min_n: int = 1):
    for n in range(min_n, max_n + 1):
        yield from enumerate_labeled_graphs(n)


K4 = complete_graph(4)
K5 = complete_graph(5)
C5 = cycle_graph(5)
C6 = cycle_graph(6)
C7 = cycle_graph(7)
K2 = complete_graph(2)
P3 = path_graph(3)
CLAW = star_graph(3)
K33 = complete_bipartite_graph(3, 3)
BOWTIE = bowtie_graph()
PETERSEN = petersen_graph()
