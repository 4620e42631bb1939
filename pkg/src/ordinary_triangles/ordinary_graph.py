"""The tau-ordinary graph: vertices are points, edges are pairs whose line
holds at most tau points.

Adjacency rows are packed little-endian into uint64 words, so bit ``j`` of row
``i`` lives in word ``j // 64`` at position ``j % 64``. Common-neighbour counts
are then a row AND followed by a popcount.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

import numpy as np

from .exact_geom import PointSet
from .incidence import IncidenceMap


@dataclass(frozen=True, eq=False)
class OrdinaryGraph:
    n: int
    tau: int
    rows: np.ndarray  # (n, words) uint64

    @property
    def words(self) -> int:
        return self.rows.shape[1]

    def has_edge(self, i: int, j: int) -> bool:
        return bool((int(self.rows[i, j >> 6]) >> (j & 63)) & 1)

    def row_bits(self, i: int) -> np.ndarray:
        """Row ``i`` unpacked to a length-n bool vector."""
        return unpack_row(self.rows[i], self.n)

    def neighbors(self, i: int) -> np.ndarray:
        return np.flatnonzero(self.row_bits(i))

    def degrees(self) -> np.ndarray:
        return np.bitwise_count(self.rows).sum(axis=1, dtype=np.int64)

    def edge_count(self) -> int:
        return int(self.degrees().sum()) // 2

    def to_dense(self) -> np.ndarray:
        return np.unpackbits(self.rows.view(np.uint8), axis=1, bitorder="little")[:, : self.n].astype(bool)


def unpack_row(row: np.ndarray, n: int) -> np.ndarray:
    return np.unpackbits(row.view(np.uint8), bitorder="little")[:n].astype(bool)


def pack_rows(dense: np.ndarray) -> np.ndarray:
    n = dense.shape[0]
    words = max(1, (n + 63) // 64)
    packed = np.packbits(dense, axis=1, bitorder="little")
    out = np.zeros((n, words * 8), dtype=np.uint8)
    out[:, : packed.shape[1]] = packed
    return out.view(np.uint64)


def build_graph(points: PointSet, imap: IncidenceMap, tau: int) -> OrdinaryGraph:
    if tau < 2:
        raise ValueError("tau must be >= 2")
    if imap.points is not points and imap.points != points:
        raise ValueError("incidence map was built from a different point set")
    counts = imap.pair_counts
    # the diagonal of pair_counts is 0, so this also excludes self-loops
    dense = (counts > 0) & (counts <= tau)
    return OrdinaryGraph(points.n, tau, pack_rows(dense))


def degenerate_triple_count(imap: IncidenceMap, tau: int) -> int:
    """Collinear vertex triples that are triangles of the tau-ordinary graph.

    Every triple on a line with 3 <= I <= tau has all three sides on that
    line, hence is a graph triangle without being a geometric one.
    """
    if tau < 2:
        raise ValueError("tau must be >= 2")
    return sum(comb(rec.count, 3) for rec in imap.entries.values() if 3 <= rec.count <= tau)
