"""Seeded experiment driver: single cells, sweeps, and aggregation.

One replication is keyed by a single master seed. The market sub-seed is
derived from the master seed alone, while the graph sub-seed also folds in
the model name, so at fixed (n, seed) all four models face the same market
on different networks.
"""

from __future__ import annotations

import csv
import hashlib
import random
import statistics
import time
from dataclasses import dataclass
from typing import IO, Iterable, Optional, Sequence

from . import netgen
from .market import (Market, Matching, SocialCircle, average_utility, build_market,
                     restricted_deferred_acceptance)
from .netgen import MODELS, Graph
from .topology import (DistanceMatrix, all_pairs_shortest, average_path_length,
                       connectivity)


def derive_seed(master_seed: int, label: str) -> int:
    """Stable 64-bit sub-seed for one role of one replication."""
    digest = hashlib.sha256(f"{master_seed}:{label}".encode("utf-8")).digest()
    return int.from_bytes(digest[:8], "big")


@dataclass(frozen=True)
class ExperimentConfig:
    """Cross-product experiment grid: models x n_values x k_values x seeds."""

    models: tuple[str, ...]
    n_values: tuple[int, ...]
    k_values: tuple[int, ...]
    seeds: tuple[int, ...]
    dep: int = 3
    p_rewire: float = 0.1

    def __post_init__(self):
        object.__setattr__(self, "models", tuple(self.models))
        object.__setattr__(self, "n_values", tuple(self.n_values))
        object.__setattr__(self, "k_values", tuple(self.k_values))
        object.__setattr__(self, "seeds", tuple(self.seeds))
        if not self.models:
            raise ValueError("at least one model is required")
        for model in self.models:
            if model not in MODELS:
                raise ValueError(f"unknown model {model!r}; expected one of {MODELS}")
        if not self.n_values:
            raise ValueError("at least one market size is required")
        for n in self.n_values:
            if n < 4 or n % 2:
                raise ValueError(f"market size must be even and >= 4, got {n}")
        if not self.k_values:
            raise ValueError("at least one nominal degree is required")
        for k in self.k_values:
            if k < 2 or k % 2:
                raise ValueError(f"nominal degree must be even and >= 2, got {k}")
        if set(self.models) & {"ncn", "ws"}:
            if max(self.k_values) > min(self.n_values) - 2:
                raise ValueError("ring models need k <= n - 2 for every configured n")
        if self.dep < 1:
            raise ValueError(f"recognition depth must be >= 1, got {self.dep}")
        if not 0.0 <= self.p_rewire <= 1.0:
            raise ValueError(f"rewiring probability must be in [0, 1], got {self.p_rewire}")
        if not self.seeds:
            raise ValueError("at least one seed is required")
        for seed in self.seeds:
            if not 0 <= seed < 2 ** 64:
                raise ValueError(f"seeds must fit in 64 bits, got {seed}")

    @staticmethod
    def replicated(models: Sequence[str], n_values: Sequence[int], k_values: Sequence[int],
                   base_seed: int, replications: int, *, dep: int = 3,
                   p_rewire: float = 0.1) -> "ExperimentConfig":
        """Grid with ``replications`` consecutive master seeds from ``base_seed``."""
        if replications < 1:
            raise ValueError(f"replication count must be >= 1, got {replications}")
        seeds = tuple(range(base_seed, base_seed + replications))
        return ExperimentConfig(tuple(models), tuple(n_values), tuple(k_values),
                                seeds, dep=dep, p_rewire=p_rewire)


@dataclass(frozen=True)
class ExperimentResult:
    """Flat record of one simulated cell; field order mirrors the CSV schema."""

    model: str
    n: int
    k: int
    dep: int
    p_rewire: float
    seed: int
    average_utility: float
    apl: Optional[float]
    connectivity: float
    matched_pairs: int
    runtime_ms: float


@dataclass(frozen=True, eq=False)
class CellRun:
    """Full artifacts of one cell, for inspection beyond the flat metrics."""

    graph: Graph
    dm: DistanceMatrix
    circle: SocialCircle
    market: Market
    matching: Matching
    result: ExperimentResult


def run_cell_full(model: str, n: int, k: int, dep: int = 3, seed: int = 0,
                  p_rewire: float = 0.1) -> CellRun:
    """Run one replication and keep every intermediate object."""
    start = time.perf_counter()
    market = build_market(n, random.Random(derive_seed(seed, "market")))
    graph_rng = random.Random(derive_seed(seed, f"graph:{model}"))
    graph = netgen.generate(model, n, k, p_rewire=p_rewire, rng=graph_rng)
    dm = all_pairs_shortest(graph)
    circle = SocialCircle(dm, dep)
    matching = restricted_deferred_acceptance(market, circle)
    runtime_ms = (time.perf_counter() - start) * 1000.0
    result = ExperimentResult(
        model=model, n=n, k=k, dep=dep, p_rewire=p_rewire, seed=seed,
        average_utility=average_utility(market, matching),
        apl=average_path_length(dm),
        connectivity=connectivity(dm, dep),
        matched_pairs=len(matching.pairs),
        runtime_ms=runtime_ms,
    )
    return CellRun(graph=graph, dm=dm, circle=circle, market=market,
                   matching=matching, result=result)


def run_cell(model: str, n: int, k: int, dep: int = 3, seed: int = 0,
             p_rewire: float = 0.1) -> ExperimentResult:
    """Run one replication: build market and graph from the seed, restrict by
    circle, match, and measure."""
    return run_cell_full(model, n, k, dep, seed, p_rewire).result


def sweep(config: ExperimentConfig) -> list[ExperimentResult]:
    """All cells of the grid in deterministic order (model, n, k, seed)."""
    results = []
    for model in config.models:
        for n in config.n_values:
            for k in config.k_values:
                for seed in config.seeds:
                    results.append(run_cell(model, n, k, config.dep, seed, config.p_rewire))
    return results


_SUMMARY_METRICS = ("average_utility", "apl", "connectivity", "matched_pairs")
_GROUPABLE = ("model", "n", "k", "dep", "p_rewire", "seed")


def summarize(results: Sequence[ExperimentResult],
              group_by: Sequence[str]) -> list[dict]:
    """Mean and population stddev of every metric, grouped by config fields.

    Undefined path lengths (None) are dropped from the apl aggregate; a
    group where every apl is undefined reports None for both moments.
    """
    if not results:
        raise ValueError("no results to summarize")
    group_by = tuple(group_by)
    for field in group_by:
        if field not in _GROUPABLE:
            raise ValueError(f"cannot group by {field!r}; choose from {_GROUPABLE}")
    groups: dict[tuple, list[ExperimentResult]] = {}
    for r in results:
        key = tuple(getattr(r, f) for f in group_by)
        groups.setdefault(key, []).append(r)
    rows = []
    for key in sorted(groups):
        members = groups[key]
        row: dict = dict(zip(group_by, key))
        row["count"] = len(members)
        for metric in _SUMMARY_METRICS:
            values = [getattr(r, metric) for r in members if getattr(r, metric) is not None]
            row[f"mean_{metric}"] = statistics.fmean(values) if values else None
            row[f"std_{metric}"] = statistics.pstdev(values) if values else None
        rows.append(row)
    return rows


CSV_FIELDS = ("model", "n", "k", "dep", "p_rewire", "seed",
              "average_utility", "apl", "connectivity", "matched_pairs")


def results_to_csv(results: Iterable[ExperimentResult], out: IO[str]) -> None:
    """Write results as CSV with the fixed schema; byte-identical on reruns."""
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(CSV_FIELDS)
    for r in results:
        writer.writerow([
            r.model, r.n, r.k, r.dep, r.p_rewire, r.seed,
            r.average_utility, "" if r.apl is None else r.apl,
            r.connectivity, r.matched_pairs,
        ])


def results_to_json(results: Iterable[ExperimentResult]) -> list[dict]:
    """Results as JSON-ready dicts, runtime included."""
    return [
        {
            "model": r.model, "n": r.n, "k": r.k, "dep": r.dep,
            "p_rewire": r.p_rewire, "seed": r.seed,
            "average_utility": r.average_utility, "apl": r.apl,
            "connectivity": r.connectivity, "matched_pairs": r.matched_pairs,
            "runtime_ms": r.runtime_ms,
        }
        for r in results
    ]


def table2_config(replications: int = 50, base_seed: int = 0, *, dep: int = 3,
                  p_rewire: float = 0.1) -> ExperimentConfig:
    """All models across market sizes 20..100 at nominal degree 2."""
    return ExperimentConfig.replicated(MODELS, (20, 40, 60, 80, 100), (2,),
                                       base_seed, replications, dep=dep, p_rewire=p_rewire)


def fig1_config(replications: int = 50, base_seed: int = 0, *, dep: int = 3,
                p_rewire: float = 0.1) -> ExperimentConfig:
    """Utility versus market size: same grid as ``table2_config``."""
    return table2_config(replications, base_seed, dep=dep, p_rewire=p_rewire)


def fig2_config(replications: int = 50, base_seed: int = 0, *, dep: int = 3,
                p_rewire: float = 0.1) -> ExperimentConfig:
    """Utility versus nominal degree at fixed market size 60."""
    return ExperimentConfig.replicated(MODELS, (60,), (2, 4, 8, 16),
                                       base_seed, replications, dep=dep, p_rewire=p_rewire)


def fig36_config(replications: int = 50, base_seed: int = 0, *, dep: int = 3,
                 p_rewire: float = 0.1) -> ExperimentConfig:
    """Path length and connectivity versus nominal degree at market size 100."""
    return ExperimentConfig.replicated(MODELS, (100,), (2, 4, 6, 8, 10, 12),
                                       base_seed, replications, dep=dep, p_rewire=p_rewire)
