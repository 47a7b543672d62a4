"""Seeded random connected graphs for oracle and property checks."""

from __future__ import annotations

import random

from .graph_core import Graph, build_graph


def random_connected(rng: random.Random, n: int, p: float = 0.35) -> Graph:
    """Random spanning tree plus independent extra edges with probability ``p``."""
    order = list(range(n))
    rng.shuffle(order)
    edges = {tuple(sorted((order[i], order[rng.randrange(i)]))) for i in range(1, n)}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < p:
                edges.add((u, v))
    return build_graph(n, edges)


def random_connected_bipartite(rng: random.Random, n: int, p: float = 0.4) -> Graph:
    """Random connected bipartite graph; every vertex gets a random side."""
    side = [rng.randrange(2) for _ in range(n)]
    if len(set(side)) == 1:
        side[rng.randrange(n)] ^= 1
    left = [v for v in range(n) if side[v] == 0]
    right = [v for v in range(n) if side[v] == 1]
    # spanning tree grown across the bipartition keeps the graph connected
    placed = [left[0]]
    todo = left[1:] + right
    rng.shuffle(todo)
    edges = set()
    while todo:
        for i, v in enumerate(todo):
            hosts = [u for u in placed if side[u] != side[v]]
            if hosts:
                u = rng.choice(hosts)
                edges.add((min(u, v), max(u, v)))
                placed.append(v)
                del todo[i]
                break
    for u in left:
        for v in right:
            if rng.random() < p:
                edges.add((min(u, v), max(u, v)))
    return build_graph(n, edges)


def corpus(seed: int, count: int, n_min: int = 4, n_max: int = 8,
           bipartite: bool = False) -> list[Graph]:
    rng = random.Random(seed)
    make = random_connected_bipartite if bipartite else random_connected
    return [make(rng, rng.randint(n_min, n_max)) for _ in range(count)]
