"""Shortest-path structure and summary metrics for generated graphs."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from typing import Optional

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import shortest_path

from .netgen import Graph

UNREACHABLE = -1


@dataclass(frozen=True, eq=False)
class DistanceMatrix:
    """All-pairs hop counts; entries of UNREACHABLE mark disconnected pairs."""

    n: int
    dist: np.ndarray

    def distance(self, i: int, j: int) -> int:
        return int(self.dist[i, j])

    def reachable(self, i: int, j: int) -> bool:
        return self.dist[i, j] != UNREACHABLE

    def diameter(self) -> Optional[int]:
        """Largest finite distance between distinct nodes, or None if every
        pair is disconnected (or there are no pairs at all)."""
        off_diagonal = ~np.eye(self.n, dtype=bool)
        finite = self.dist[(self.dist != UNREACHABLE) & off_diagonal]
        if finite.size == 0:
            return None
        return int(finite.max())

    def _upper_triangle(self) -> np.ndarray:
        iu = np.triu_indices(self.n, k=1)
        return self.dist[iu]


def all_pairs_shortest(graph: Graph) -> DistanceMatrix:
    """Minimum hop count between every node pair.

    Unweighted breadth-first traversal from every node, delegated to scipy's
    compiled routines; pairs in different components come back UNREACHABLE.
    """
    n = graph.n
    if graph.edges:
        rows = [u for u, _ in graph.edges]
        cols = [v for _, v in graph.edges]
        data = np.ones(len(rows), dtype=np.int8)
        mat = csr_matrix((data, (rows, cols)), shape=(n, n))
    else:
        mat = csr_matrix((n, n), dtype=np.int8)
    raw = shortest_path(mat, directed=False, unweighted=True)
    dist = np.where(np.isinf(raw), float(UNREACHABLE), raw).astype(np.int32)
    return DistanceMatrix(n, dist)


def average_degree(graph: Graph) -> float:
    """Mean node degree, 2M/N."""
    return 2.0 * graph.m / graph.n


def degree_distribution(graph: Graph) -> dict[int, int]:
    """Histogram mapping degree value to the number of nodes holding it."""
    return dict(Counter(graph.degrees()))


def reachable_pairs(dm: DistanceMatrix) -> int:
    """Number of unordered node pairs connected by some path."""
    upper = dm._upper_triangle()
    return int((upper != UNREACHABLE).sum())


def average_path_length(dm: DistanceMatrix) -> Optional[float]:
    """Mean hop distance over reachable unordered pairs.

    Pairs in different components are excluded from both numerator and
    denominator. Returns None when no pair is reachable, which callers
    should treat as undefined rather than zero.
    """
    upper = dm._upper_triangle()
    finite = upper[upper != UNREACHABLE]
    if finite.size == 0:
        return None
    return float(finite.mean())


def connectivity(dm: DistanceMatrix, dep: int) -> float:
    """Fraction of unordered pairs within distance ``dep`` of each other."""
    if dep < 1:
        raise ValueError(f"recognition depth must be >= 1, got {dep}")
    if dm.n < 2:
        raise ValueError("connectivity needs at least 2 nodes")
    upper = dm._upper_triangle()
    close = (upper != UNREACHABLE) & (upper <= dep)
    return float(close.sum()) / (dm.n * (dm.n - 1) // 2)


def poisson_connectivity(lam: float, dep: int) -> float:
    """Connectivity predicted when path lengths were Poisson with mean ``lam``:
    the probability mass on 1..dep."""
    if lam <= 0:
        raise ValueError(f"mean path length must be positive, got {lam}")
    if dep < 1:
        raise ValueError(f"recognition depth must be >= 1, got {dep}")
    return sum(lam ** l * math.exp(-lam) / math.factorial(l) for l in range(1, dep + 1))


@dataclass(frozen=True)
class TopologyReport:
    """Metric bundle for one graph at one recognition depth."""

    n: int
    m: int
    average_degree: float
    degree_histogram: dict[int, int]
    apl: Optional[float]
    reachable_pairs: int
    connectivity: float
    dep: int

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "average_degree": self.average_degree,
            "degree_histogram": dict(self.degree_histogram),
            "apl": self.apl,
            "reachable_pairs": self.reachable_pairs,
            "connectivity": self.connectivity,
            "dep": self.dep,
        }


def analyze(graph: Graph, dep: int = 3) -> TopologyReport:
    """Compute the full metric bundle for one graph."""
    dm = all_pairs_shortest(graph)
    return TopologyReport(
        n=graph.n,
        m=graph.m,
        average_degree=average_degree(graph),
        degree_histogram=degree_distribution(graph),
        apl=average_path_length(dm),
        reachable_pairs=reachable_pairs(dm),
        connectivity=connectivity(dm, dep),
        dep=dep,
    )
