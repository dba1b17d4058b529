"""Lower, upper, and combined adjacency among the k-simplices of a complex.

Two k-simplices are lower adjacent when they share a (k-1)-face and upper
adjacent when both are faces of one (k+1)-simplex.  The combined relation --
lower and not upper for k >= 1, plain graph adjacency for k = 0 -- is the
adjacency used by every distance and centrality in this package; its graph
view is the "underlying network of simplices".
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from scipy import sparse

from .complexes import CliqueComplex, Graph
from .errors import InsufficientDepthError


@dataclass(eq=False)
class LevelAdjacency:
    """Symmetric 0/1 sparse adjacency among the k-simplices of one level."""

    level: int
    kind: str  # "lower" | "upper" | "combined"
    mat: sparse.csr_matrix
    complex: CliqueComplex = field(repr=False)

    @property
    def n(self) -> int:
        return self.mat.shape[0]

    def degrees(self) -> np.ndarray:
        """Row sums: the simplex degree of every simplex at this level."""
        return np.asarray(self.mat.sum(axis=1)).ravel().astype(np.int64)

    def entry(self, i: int, j: int) -> int:
        return int(self.mat[i, j])

    def __repr__(self) -> str:
        return f"LevelAdjacency(level={self.level}, kind={self.kind!r}, n={self.n})"


def _pairs_to_csr(pairs: list[tuple[int, int]], n: int) -> sparse.csr_matrix:
    """Symmetric 0/1 CSR from unordered index pairs (deduplicated)."""
    if not pairs:
        return sparse.csr_matrix((n, n), dtype=np.int8)
    arr = np.unique(np.array(pairs, dtype=np.int64), axis=0)
    rows = np.concatenate([arr[:, 0], arr[:, 1]])
    cols = np.concatenate([arr[:, 1], arr[:, 0]])
    data = np.ones(rows.size, dtype=np.int8)
    return sparse.csr_matrix((data, (rows, cols)), shape=(n, n))


def lower_adjacency(c: CliqueComplex, k: int) -> LevelAdjacency:
    """Adjacency of k-simplices sharing a common (k-1)-face.

    0-simplices are never lower adjacent, so k=0 yields the zero matrix.
    Pairs are found by bucketing the k-simplices on each (k-1)-face, which
    avoids comparing all simplex pairs.
    """
    n = c.n_simplices(k)
    if k == 0:
        return LevelAdjacency(0, "lower", sparse.csr_matrix((n, n), dtype=np.int8), c)
    pairs: list[tuple[int, int]] = []
    for cofaces in c.face_index(k).values():
        for a in range(len(cofaces)):
            for b in range(a + 1, len(cofaces)):
                pairs.append((cofaces[a], cofaces[b]))
    return LevelAdjacency(k, "lower", _pairs_to_csr(pairs, n), c)


def upper_adjacency(c: CliqueComplex, k: int) -> LevelAdjacency:
    """Adjacency of k-simplices that are faces of one common (k+1)-simplex.

    Requires level k+1 to be materialized; otherwise the result would be
    silently understated, so the call is rejected instead.
    """
    if c.max_level < k + 1:
        raise InsufficientDepthError(
            f"insufficient complex depth: upper adjacency at level {k} needs "
            f"level {k + 1} materialized (max_level={c.max_level})"
        )
    n = c.n_simplices(k)
    pairs: list[tuple[int, int]] = []
    for sid in range(c.n_simplices(k + 1)):
        faces = c.face_ids(k + 1, sid)
        for a in range(len(faces)):
            for b in range(a + 1, len(faces)):
                pairs.append((faces[a], faces[b]))
    return LevelAdjacency(k, "upper", _pairs_to_csr(pairs, n), c)


def combined_adjacency(c: CliqueComplex, k: int) -> LevelAdjacency:
    """The level-k adjacency matrix: lower-and-not-upper for k >= 1, upper
    (i.e. ordinary graph adjacency) for k = 0."""
    if k == 0:
        upper = upper_adjacency(c, 0)
        return LevelAdjacency(0, "combined", upper.mat, c)
    lower = lower_adjacency(c, k).mat.astype(bool)
    upper = upper_adjacency(c, k).mat.astype(bool)
    mat = (lower > upper).astype(np.int8).tocsr()  # boolean AND NOT
    mat.eliminate_zeros()
    return LevelAdjacency(k, "combined", mat, c)


def simplex_degree(a: LevelAdjacency, i: int) -> int:
    """Number of other k-simplices adjacent to simplex ``i`` (row sum)."""
    if a.kind != "combined":
        raise ValueError(f"simplex degree is defined on combined adjacency, got {a.kind!r}")
    return int(a.mat[i].sum())


def interaction_count(a: LevelAdjacency) -> int:
    """Number of unordered adjacent pairs at this level."""
    return int(a.mat.sum()) // 2


def underlying_network(a: LevelAdjacency) -> Graph:
    """Graph whose nodes are the k-simplex IDs and whose edges are the
    combined adjacencies; node labels render the simplices' vertex labels."""
    if a.kind != "combined":
        raise ValueError(f"underlying network is defined on combined adjacency, got {a.kind!r}")
    coo = a.mat.tocoo()
    edges = [(int(i), int(j)) for i, j in zip(coo.row, coo.col) if i < j]
    labels = [a.complex.simplex_label(a.level, sid) for sid in range(a.n)]
    return Graph(labels, edges)


def write_matrix(a: LevelAdjacency, path: str, sidecar_path: str) -> None:
    """Export as coordinate-format text (``i j`` per unordered pair, 0-based
    IDs) plus a sidecar mapping ID -> vertex tuple."""
    coo = a.mat.tocoo()
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(f"# level {a.level} kind {a.kind} n {a.n}\n")
        for i, j in zip(coo.row, coo.col):
            if i < j:
                fh.write(f"{i} {j}\n")
    with open(sidecar_path, "w", encoding="utf-8") as fh:
        fh.write("# id\tvertices\n")
        for sid in range(a.n):
            fh.write(f"{sid}\t{a.complex.simplex_label(a.level, sid)}\n")
