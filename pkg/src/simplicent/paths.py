"""Shortest paths over the underlying network of simplices.

Distances at level k are unweighted shortest-path lengths on the combined
adjacency; a step between adjacent k-simplices realizes one hop of the
alternating simplex/face walk, so the graph distance and the simplicial
distance coincide.  Unreachable pairs are at distance ``inf`` -- a real
IEEE infinity, never a large stand-in, so that ``1/inf == 0`` holds exactly
where harmonic sums need it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._util import parallel_map
from .adjacency import LevelAdjacency, combined_adjacency
from .complexes import CliqueComplex

DEFAULT_MATRIX_LIMIT = 20_000


def bfs_distances(mat, source: int) -> np.ndarray:
    """Distances from ``source`` on a CSR adjacency; unreachable -> inf."""
    n = mat.shape[0]
    indptr, indices = mat.indptr, mat.indices
    dist = np.full(n, np.inf)
    dist[source] = 0.0
    frontier = [source]
    d = 0
    while frontier:
        d += 1
        nxt = []
        for u in frontier:
            for v in indices[indptr[u] : indptr[u + 1]]:
                if dist[v] == np.inf:
                    dist[v] = d
                    nxt.append(int(v))
        frontier = nxt
    return dist


@dataclass(eq=False)
class DistanceMatrix:
    """All-pairs level-k distances (float64; inf across components)."""

    level: int
    dist: np.ndarray

    @property
    def n(self) -> int:
        return self.dist.shape[0]


@dataclass(eq=False)
class ComponentLabeling:
    """Connected components of the level-k simplices."""

    level: int
    labels: np.ndarray  # component id per simplex, 0-based
    sizes: list[int]

    @property
    def n_components(self) -> int:
        return len(self.sizes)


def shortest_distances(
    c: CliqueComplex, k: int, max_size: int = DEFAULT_MATRIX_LIMIT, threads: int = 1
) -> DistanceMatrix:
    """Materialize the full level-k distance matrix (guarded by ``max_size``;
    use the per-source helpers for very large levels)."""
    adj = combined_adjacency(c, k)
    n = adj.n
    if n > max_size:
        raise ValueError(
            f"level {k} has {n} simplices, above the matrix materialization "
            f"limit {max_size}; raise the limit or stream per-source BFS"
        )
    rows = parallel_map(lambda s: bfs_distances(adj.mat, s), range(n), threads)
    dist = np.array(rows).reshape(n, n) if n else np.zeros((0, 0))
    return DistanceMatrix(k, dist)


def connected_components(c: CliqueComplex, k: int) -> ComponentLabeling:
    """Partition the k-simplices into maximal sets at finite mutual distance."""
    adj = combined_adjacency(c, k)
    return components_of(adj)


def components_of(adj: LevelAdjacency) -> ComponentLabeling:
    n = adj.n
    labels = np.full(n, -1, dtype=np.int64)
    sizes: list[int] = []
    indptr, indices = adj.mat.indptr, adj.mat.indices
    for start in range(n):
        if labels[start] >= 0:
            continue
        comp = len(sizes)
        labels[start] = comp
        stack = [start]
        size = 1
        while stack:
            u = stack.pop()
            for v in indices[indptr[u] : indptr[u + 1]]:
                if labels[v] < 0:
                    labels[v] = comp
                    size += 1
                    stack.append(int(v))
        sizes.append(size)
    return ComponentLabeling(adj.level, labels, sizes)


def eccentricity(d: DistanceMatrix, i: int) -> float:
    """Largest distance from simplex ``i`` within its component (0 for a
    singleton)."""
    row = d.dist[i]
    return float(row[np.isfinite(row)].max())


def eccentricities(d: DistanceMatrix) -> np.ndarray:
    masked = np.where(np.isfinite(d.dist), d.dist, -np.inf)
    return masked.max(axis=1) if d.n else np.zeros(0)


def diameter(d: DistanceMatrix) -> float:
    """Maximum eccentricity over all simplices (nan for an empty level)."""
    if d.n == 0:
        return math.nan
    return float(eccentricities(d).max())


def average_path_length(d: DistanceMatrix) -> float:
    """Mean distance over all unordered pairs; the level must be connected.

    Undefined (nan) with fewer than two simplices.  On a connected level the
    value lies in [1, (n+1)/3].
    """
    n = d.n
    if n < 2:
        return math.nan
    off = d.dist[~np.eye(n, dtype=bool)]
    if not np.isfinite(off).all():
        raise ValueError("level is not connected; use average_path_length_by_component")
    return float(off.sum() / (n * (n - 1)))


def average_path_length_by_component(
    d: DistanceMatrix, labeling: ComponentLabeling
) -> list[float]:
    """Per-component mean pairwise distance (nan for singleton components)."""
    out: list[float] = []
    for comp, size in enumerate(labeling.sizes):
        if size < 2:
            out.append(math.nan)
            continue
        idx = np.flatnonzero(labeling.labels == comp)
        block = d.dist[np.ix_(idx, idx)]
        out.append(float(block.sum() / (size * (size - 1))))
    return out


@dataclass(eq=False)
class LevelPathSummary:
    """Streaming per-level path statistics (no full matrix kept)."""

    level: int
    n: int
    component_sizes: list[int]
    diameter: float
    avg_path_lengths: list[float]  # per component, nan for singletons
    eccentricities: np.ndarray


def level_summary(c: CliqueComplex, k: int, threads: int = 1) -> LevelPathSummary:
    """Component count/sizes, diameter, per-component average path length and
    all eccentricities at level k, via per-source traversals."""
    adj = combined_adjacency(c, k)
    labeling = components_of(adj)
    n = adj.n
    ecc = np.zeros(n)
    comp_sums = [0.0] * labeling.n_components

    def row_stats(s: int) -> tuple[float, float]:
        row = bfs_distances(adj.mat, s)
        finite = row[np.isfinite(row)]
        return float(finite.max()), float(finite.sum())

    for s, (e, total) in enumerate(parallel_map(row_stats, range(n), threads)):
        ecc[s] = e
        comp_sums[labeling.labels[s]] += total

    avg = [
        comp_sums[i] / (size * (size - 1)) if size >= 2 else math.nan
        for i, size in enumerate(labeling.sizes)
    ]
    diam = float(ecc.max()) if n else math.nan
    return LevelPathSummary(k, n, labeling.sizes, diam, avg, ecc)
