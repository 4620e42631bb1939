"""Exact "can X be covered by k lines?" for small k.

Bounded search tree: a line holding more than k uncovered points must be in
every k-cover, and without such a line k lines reach at most k^2 points.
Otherwise branch on the lines through the first uncovered point.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Sequence

from .exact_geom import CanonicalLine, PointSet, canonical_line, normalize_line
from .incidence import build_incidence_map

MAX_K = 6


def _check_k(k: int) -> None:
    if k < 0:
        raise ValueError("k must be >= 0")
    if k > MAX_K:
        raise ValueError(f"line cover search is capped at k <= {MAX_K}, got {k}")


def _any_line_through(p) -> CanonicalLine:
    return normalize_line(0, 1, -p[1])


def _lines_among(points: PointSet, idx: Sequence[int]) -> Dict[CanonicalLine, List[int]]:
    sub = PointSet(points[i] for i in idx)
    return {line: [idx[m] for m in rec.members] for line, rec in build_incidence_map(sub)}


def _cover(points: PointSet, uncovered: List[int], k: int) -> Optional[List[CanonicalLine]]:
    if not uncovered:
        return []
    if k == 0:
        return None
    if len(uncovered) <= k:
        out = []
        for a in range(0, len(uncovered), 2):
            pair = uncovered[a:a + 2]
            p = points[pair[0]]
            out.append(canonical_line(p, points[pair[1]]) if len(pair) == 2 else _any_line_through(p))
        return out

    lines = _lines_among(points, uncovered)
    for line, members in lines.items():
        if len(members) > k:
            on = set(members)
            rest = _cover(points, [u for u in uncovered if u not in on], k - 1)
            return None if rest is None else [line, *rest]
    if len(uncovered) > k * k:
        return None

    p = uncovered[0]
    for line, members in lines.items():
        if members[0] != p:
            continue
        on = set(members)
        rest = _cover(points, [u for u in uncovered if u not in on], k - 1)
        if rest is not None:
            return [line, *rest]
    # p alone on its line; kept so the recursion is complete on its own terms
    rest = _cover(points, uncovered[1:], k - 1)
    return None if rest is None else [_any_line_through(points[p]), *rest]


def coverable(points: PointSet, k: int) -> Optional[List[CanonicalLine]]:
    """At most k lines covering every point, or None if no such lines exist."""
    _check_k(k)
    return _cover(points, list(range(points.n)), k)


def min_cover_size(points: PointSet, k_max: int) -> Optional[int]:
    _check_k(k_max)
    for k in range(k_max + 1):
        if coverable(points, k) is not None:
            return k
    return None


def covers(points: PointSet, lines: Sequence[CanonicalLine]) -> bool:
    return all(any(line.contains(p) for line in lines) for p in points)
