"""Reporting, counting and detecting tau-ordinary triangles.

The counter follows the triangle-counting-by-matrix-product recipe: for each
edge (i, j) the entry (A^2)[i, j] is the popcount of row_i AND row_j, and the
sum of these over edges is trace(A^3) / 2. Collinear graph triangles are then
subtracted, since three points on one tau-ordinary line span no triangle.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, List, NamedTuple, Optional

import numpy as np

from .exact_geom import PointSet, orient
from .incidence import IncidenceMap
from .ordinary_graph import OrdinaryGraph, build_graph, degenerate_triple_count


class Triangle(NamedTuple):
    i: int
    j: int
    k: int


@dataclass(frozen=True)
class TriangleCount:
    tau: int
    count: int
    graph_triangles: int
    degenerate: int

    def to_dict(self) -> dict:
        return asdict(self)


def resolve_threads(threads: Optional[int] = None) -> int:
    """``threads`` if given, else ``$OT_THREADS``, else the CPU count."""
    if threads is None:
        env = os.environ.get("OT_THREADS")
        threads = int(env) if env else (os.cpu_count() or 1)
    if threads < 1:
        raise ValueError("threads must be >= 1")
    return threads


def _chunks(n: int, parts: int) -> List[range]:
    parts = max(1, min(parts, n))
    step = -(-n // parts)
    return [range(s, min(s + step, n)) for s in range(0, n, step)]


def _common_counts(rows: np.ndarray, i: int, js: np.ndarray) -> np.ndarray:
    """(A^2)[i, j] for each j in ``js``."""
    return np.bitwise_count(rows[js] & rows[i]).sum(axis=1, dtype=np.int64)


def _later_neighbors(graph: OrdinaryGraph, i: int) -> np.ndarray:
    nbrs = graph.neighbors(i)
    return nbrs[nbrs > i]


def _edge_common_sum(graph: OrdinaryGraph, block: Iterable[int]) -> int:
    total = 0
    for i in block:
        js = _later_neighbors(graph, i)
        if js.size:
            total += int(_common_counts(graph.rows, i, js).sum())
    return total


def graph_triangle_count(graph: OrdinaryGraph, threads: Optional[int] = None) -> int:
    """Number of triangles of the graph, trace(A^3) / 6, via packed rows."""
    blocks = _chunks(graph.n, resolve_threads(threads))
    if len(blocks) == 1:
        half_trace = _edge_common_sum(graph, blocks[0])
    else:
        with ThreadPoolExecutor(len(blocks)) as pool:
            half_trace = sum(pool.map(lambda b: _edge_common_sum(graph, b), blocks))
    return half_trace // 3


def count_matmul(
    points: PointSet, imap: IncidenceMap, tau: int, threads: Optional[int] = None
) -> TriangleCount:
    graph = build_graph(points, imap, tau)
    raw = graph_triangle_count(graph, threads)
    degenerate = degenerate_triple_count(imap, tau)
    return TriangleCount(tau, raw - degenerate, raw, degenerate)


def count_brute(graph: OrdinaryGraph, points: PointSet, outer: Optional[Iterable[int]] = None) -> TriangleCount:
    """Triple loop over i < j < k on the unpacked adjacency.

    ``outer`` restricts the first vertex and exists for partial timing runs.
    """
    n = graph.n
    adj = graph.to_dense().tolist()
    raw = degenerate = 0
    for i in range(n) if outer is None else outer:
        ai, pi = adj[i], points[i]
        for j in range(i + 1, n):
            if not ai[j]:
                continue
            aj, pj = adj[j], points[j]
            for k in range(j + 1, n):
                if ai[k] and aj[k]:
                    raw += 1
                    if orient(pi, pj, points[k]) == 0:
                        degenerate += 1
    return TriangleCount(graph.tau, raw - degenerate, raw, degenerate)


def count_graph_triangles_unpacked(graph: OrdinaryGraph, outer: Optional[Iterable[int]] = None) -> int:
    """Plain triple loop over a list-of-lists adjacency; the baseline the
    packed counter is benchmarked against."""
    n = graph.n
    adj = graph.to_dense().tolist()
    total = 0
    for i in range(n) if outer is None else outer:
        ai = adj[i]
        for j in range(i + 1, n):
            if ai[j]:
                aj = adj[j]
                for k in range(j + 1, n):
                    if ai[k] and aj[k]:
                        total += 1
    return total


def _report_rows(points: PointSet, dense: np.ndarray, block: Iterable[int]) -> List[Triangle]:
    out = []
    for i in block:
        pi = points[i]
        for j in np.flatnonzero(dense[i, i + 1:]).tolist():
            j += i + 1
            pj = points[j]
            for k in (np.flatnonzero(dense[i, j + 1:] & dense[j, j + 1:]) + (j + 1)).tolist():
                if orient(pi, pj, points[k]) != 0:
                    out.append(Triangle(i, j, k))
    return out


def report_all(
    points: PointSet, imap: IncidenceMap, tau: int, threads: Optional[int] = None
) -> List[Triangle]:
    """All tau-ordinary triangles in lexicographic (i, j, k) order."""
    if points.n < 3:
        raise ValueError("need at least 3 points to report triangles")
    dense = build_graph(points, imap, tau).to_dense()
    blocks = _chunks(points.n, resolve_threads(threads))
    if len(blocks) == 1:
        return _report_rows(points, dense, blocks[0])
    with ThreadPoolExecutor(len(blocks)) as pool:
        parts = list(pool.map(lambda b: _report_rows(points, dense, b), blocks))
    return [t for part in parts for t in part]


def detect(points: PointSet, imap: IncidenceMap, tau: int) -> Optional[Triangle]:
    """The lexicographically smallest tau-ordinary triangle, or None.

    An edge (i, j) lies in a genuine triangle iff its common-neighbour count
    exceeds I(line(i, j)) - 2: every other point of that line is a common
    neighbour and is collinear with i and j. The first such edge in lex order
    is the first two vertices of the smallest triangle.
    """
    graph = build_graph(points, imap, tau)
    counts = imap.pair_counts
    for i in range(graph.n):
        js = _later_neighbors(graph, i)
        if not js.size:
            continue
        hits = np.flatnonzero(_common_counts(graph.rows, i, js) > counts[i, js] - 2)
        if not hits.size:
            continue
        j = int(js[hits[0]])
        common = graph.row_bits(i) & graph.row_bits(j)
        for k in np.flatnonzero(common).tolist():
            if orient(points[i], points[j], points[k]) != 0:
                return Triangle(*sorted((i, j, k)))
        raise AssertionError("common-neighbour count promised a noncollinear witness")
    return None


def min_tau(points: PointSet, imap: IncidenceMap) -> Optional[int]:
    """Smallest tau >= 2 admitting a tau-ordinary triangle.

    Doubles tau from 2 (capped at n) until detection succeeds, then binary
    searches between the last failure and the first success. None means the
    set is collinear.
    """
    n = points.n
    if n < 3:
        raise ValueError("need at least 3 points")
    lo, tau = 1, 2
    while True:
        tau = min(tau, n)
        if detect(points, imap, tau) is not None:
            hi = tau
            break
        if tau == n:
            return None
        lo, tau = tau, tau * 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if detect(points, imap, mid) is not None:
            hi = mid
        else:
            lo = mid
    return hi
