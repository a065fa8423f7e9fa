"""Slow but obviously-correct reference implementations and shared
instance generators for the test suite.

Everything here is deliberately written the naive way so that a bug in
the library and a bug in the reference are unlikely to coincide.
"""

from __future__ import annotations

import random
from collections import deque
from typing import NamedTuple, Optional, Sequence

import numpy as np

from circlematch.harness import derive_seed
from circlematch.market import Market, SocialCircle, build_market
from circlematch.netgen import MODELS, Graph, generate
from circlematch.topology import UNREACHABLE, DistanceMatrix, all_pairs_shortest


def naive_distances(graph: Graph) -> DistanceMatrix:
    """Per-source breadth-first search with a plain Python queue."""
    n = graph.n
    dist = np.full((n, n), UNREACHABLE, dtype=np.int32)
    for source in range(n):
        dist[source, source] = 0
        queue = deque([source])
        while queue:
            u = queue.popleft()
            for v in graph.neighbors(u):
                if dist[source, v] == UNREACHABLE:
                    dist[source, v] = dist[source, u] + 1
                    queue.append(v)
    return DistanceMatrix(n, dist)


def full_circle(n: int) -> SocialCircle:
    """A circle in which everyone recognizes everyone else."""
    dist = np.ones((n, n), dtype=np.int32)
    np.fill_diagonal(dist, 0)
    return SocialCircle(DistanceMatrix(n, dist), 1)


def valid_degrees(n: int) -> list[int]:
    """Even nominal degrees accepted by the ring-based generators."""
    return list(range(2, n - 1, 2))


class Instance(NamedTuple):
    model: str
    n: int
    k: int
    dep: int
    graph: Graph
    dm: DistanceMatrix
    circle: SocialCircle
    market: Market


def random_instance(seed: int,
                    n_pool: Sequence[int] = tuple(range(4, 41, 2)),
                    dep_pool: Sequence[int] = (1, 2, 3, 4),
                    models: Sequence[str] = MODELS,
                    p_rewire: float = 0.1) -> Instance:
    """One reproducible market-plus-graph draw, seeded the same way the
    experiment harness seeds its cells."""
    picker = random.Random(derive_seed(seed, "instance"))
    model = picker.choice(list(models))
    n = picker.choice(list(n_pool))
    k = picker.choice(valid_degrees(n))
    dep = picker.choice(list(dep_pool))
    market = build_market(n, random.Random(derive_seed(seed, "market")))
    graph = generate(model, n, k, p_rewire=p_rewire,
                     rng=random.Random(derive_seed(seed, f"graph:{model}")))
    dm = all_pairs_shortest(graph)
    return Instance(model, n, k, dep, graph, dm, SocialCircle(dm, dep), market)


def assert_valid_graph(graph: Graph, n: int, m: Optional[int] = None) -> None:
    assert graph.n == n
    seen = set()
    for u, v in graph.edges:
        assert 0 <= u < v < n
        assert (u, v) not in seen
        seen.add((u, v))
    if m is not None:
        assert graph.m == m
    degree_sum = sum(graph.degrees())
    assert degree_sum == 2 * graph.m
