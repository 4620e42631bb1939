"""Reference counter used only to cross-check the fast paths.

Nothing here touches canonical lines, hashing or the incidence map: the size
of the line through a pair is found by scanning every point with ``orient``.
The per-pair scan result is memoised in a plain n x n table within one call,
so a full count is O(n^3) instead of O(n^4); the table is indexed by point
indices, not by any line key.
"""

from __future__ import annotations

from typing import List, Optional, Sequence

from .exact_geom import Point, orient


class _ScanTable:
    def __init__(self, pts: Sequence[Point]):
        self.pts = pts
        n = len(pts)
        self._cnt: List[List[int]] = [[0] * n for _ in range(n)]

    def line_size(self, i: int, j: int) -> int:
        v = self._cnt[i][j]
        if v == 0:
            v = line_size_scan(self.pts, i, j)
            self._cnt[i][j] = self._cnt[j][i] = v
        return v


def line_size_scan(points: Sequence[Point], i: int, j: int) -> int:
    """Points of ``points`` on the line through points i and j, by direct scan."""
    p, q = points[i], points[j]
    return sum(1 for r in points if orient(p, q, r) == 0)


def _worst_side(table: _ScanTable, i: int, j: int, k: int) -> Optional[int]:
    """Largest side incidence of the triple, or None when it is collinear."""
    pts = table.pts
    if orient(pts[i], pts[j], pts[k]) == 0:
        return None
    return max(table.line_size(i, j), table.line_size(j, k), table.line_size(i, k))


def count_reference(points: Sequence[Point], tau: int) -> int:
    pts = list(points)
    n = len(pts)
    if n < 3:
        raise ValueError("need at least 3 points")
    if tau < 2:
        raise ValueError("tau must be >= 2")
    table = _ScanTable(pts)
    total = 0
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                w = _worst_side(table, i, j, k)
                if w is not None and w <= tau:
                    total += 1
    return total


def min_tau_reference(points: Sequence[Point]) -> Optional[int]:
    """Linear scan tau = 2, 3, ..., n asking whether any triple qualifies."""
    pts = list(points)
    n = len(pts)
    if n < 3:
        raise ValueError("need at least 3 points")
    table = _ScanTable(pts)
    worst = [
        w
        for i in range(n)
        for j in range(i + 1, n)
        for k in range(j + 1, n)
        if (w := _worst_side(table, i, j, k)) is not None
    ]
    for tau in range(2, n + 1):
        if any(w <= tau for w in worst):
            return tau
    return None
