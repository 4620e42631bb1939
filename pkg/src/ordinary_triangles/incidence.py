"""Connecting lines of a point set and their incidence counts.

Two builders produce identical maps. When every coordinate fits below 2**30
the canonical triples of all pairs are computed in int64 and grouped with a
lexsort. Otherwise a pure-int path groups, around each anchor point, the later
points by reduced direction; a group is a new line only when the anchor is its
smallest index, and later members remember the direction so the line is not
rediscovered. Both are O(n^2) up to the sort.
"""

from __future__ import annotations

import gc
from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from itertools import repeat
from math import comb, gcd
from typing import Dict, Iterator, List, NamedTuple, Tuple

import numpy as np

from .exact_geom import CanonicalLine, PointSet, canonical_line


class LineRecord(NamedTuple):
    count: int
    members: Tuple[int, ...]


@dataclass(frozen=True, eq=False)
class IncidenceMap:
    """Every connecting line of ``points`` keyed by its canonical form.

    ``entries`` iterates in lexicographic (a, b, c) order.
    """

    points: PointSet
    entries: Dict[CanonicalLine, LineRecord] = field(repr=False)

    @property
    def n(self) -> int:
        return self.points.n

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[Tuple[CanonicalLine, LineRecord]]:
        return iter(self.entries.items())

    @cached_property
    def pair_counts(self) -> np.ndarray:
        """n x n int32 matrix with I(line(i, j)) off the diagonal, 0 on it."""
        n = self.n
        m = np.zeros((n, n), dtype=np.int32)
        by_size: Dict[int, List[Tuple[int, ...]]] = {}
        for rec in self.entries.values():
            by_size.setdefault(rec.count, []).append(rec.members)
        for size, groups in by_size.items():
            arr = np.asarray(groups, dtype=np.intp)
            for a in range(size):
                for b in range(a + 1, size):
                    m[arr[:, a], arr[:, b]] = size
                    m[arr[:, b], arr[:, a]] = size
        return m

    @cached_property
    def lines_per_point(self) -> np.ndarray:
        """Number of connecting lines through each point."""
        deg = np.zeros(self.n, dtype=np.int64)
        for rec in self.entries.values():
            deg[list(rec.members)] += 1
        return deg


def _direction(dx: int, dy: int) -> Tuple[int, int]:
    g = gcd(dx, dy)
    dx //= g
    dy //= g
    if dx < 0 or (dx == 0 and dy < 0):
        return -dx, -dy
    return dx, dy


# keeps |a*x + b*y| below 2**62 in the int64 path
_INT64_COORD_LIMIT = 1 << 30


def build_incidence_map(points: PointSet) -> IncidenceMap:
    n = points.n
    if n < 2:
        raise ValueError("need at least 2 points")
    small = all(abs(p.x) < _INT64_COORD_LIMIT and abs(p.y) < _INT64_COORD_LIMIT for p in points)
    # millions of small tuples are created below; cyclic GC passes only cost time here
    was_enabled = gc.isenabled()
    gc.disable()
    try:
        return _build_int64(points) if small else _build_exact(points)
    finally:
        if was_enabled:
            gc.enable()


def _build_int64(points: PointSet) -> IncidenceMap:
    n = points.n
    x = np.fromiter((p.x for p in points), dtype=np.int64, count=n)
    y = np.fromiter((p.y for p in points), dtype=np.int64, count=n)
    pi, pj = np.triu_indices(n, 1)
    a = y[pj] - y[pi]
    b = x[pi] - x[pj]
    c = -(a * x[pi] + b * y[pi])
    g = np.gcd(np.gcd(a, b), c)
    a //= g
    b //= g
    c //= g
    flip = (a < 0) | ((a == 0) & (b < 0))
    a[flip] *= -1
    b[flip] *= -1
    c[flip] *= -1

    # stable, so pairs inside a group stay in (i, j) order
    order = np.lexsort((c, b, a))
    a, b, c, pi, pj = a[order], b[order], c[order], pi[order], pj[order]
    fresh = np.ones(len(a), dtype=bool)
    fresh[1:] = (a[1:] != a[:-1]) | (b[1:] != b[:-1]) | (c[1:] != c[:-1])
    starts = np.flatnonzero(fresh)
    npairs = np.diff(np.append(starts, len(a)))
    # C(m, 2) = npairs
    counts = np.rint((1 + np.sqrt(1 + 8 * npairs.astype(np.float64))) / 2).astype(np.int64)

    keys = map(CanonicalLine._make, zip(a[starts].tolist(), b[starts].tolist(), c[starts].tolist()))
    pairs = zip(pi[starts].tolist(), pj[starts].tolist())
    records = list(map(LineRecord._make, zip(repeat(2), pairs)))
    for k in np.flatnonzero(counts > 2).tolist():
        s, m = int(starts[k]), int(counts[k])
        # the first m-1 pairs of the group all start at its smallest member
        records[k] = LineRecord(m, (int(pi[s]), *pj[s:s + m - 1].tolist()))
    imap = IncidenceMap(points, dict(zip(keys, records)))

    pc = np.zeros((n, n), dtype=np.int32)
    per_pair = np.repeat(counts, npairs).astype(np.int32)
    pc[pi, pj] = per_pair
    pc[pj, pi] = per_pair
    imap.__dict__["pair_counts"] = pc
    return imap


def _build_exact(points: PointSet) -> IncidenceMap:
    n = points.n
    xs = [p.x for p in points]
    ys = [p.y for p in points]
    # directions (from this point towards higher indices) already owned by a line
    claimed: List[set] = [set() for _ in range(n)]
    found: Dict[CanonicalLine, LineRecord] = {}
    for i in range(n):
        xi, yi = xs[i], ys[i]
        groups: Dict[Tuple[int, int], List[int]] = {}
        for j in range(i + 1, n):
            key = _direction(xs[j] - xi, ys[j] - yi)
            bucket = groups.get(key)
            if bucket is None:
                groups[key] = [j]
            else:
                bucket.append(j)
        skip = claimed[i]
        for key, js in groups.items():
            if key in skip:
                continue
            for m in js[:-1]:
                claimed[m].add(key)
            line = canonical_line(points[i], points[js[0]])
            found[line] = LineRecord(len(js) + 1, (i, *js))
        claimed[i] = None  # free memory early
    entries = {line: found[line] for line in sorted(found)}
    return IncidenceMap(points, entries)


def line_through(imap: IncidenceMap, i: int, j: int) -> LineRecord:
    if i == j:
        raise ValueError(f"line_through needs two distinct indices, got {i} twice")
    n = imap.n
    if not (0 <= i < n and 0 <= j < n):
        raise IndexError(f"point index out of range for n={n}")
    return imap.entries[canonical_line(imap.points[i], imap.points[j])]


def max_collinear(imap: IncidenceMap) -> int:
    return max(rec.count for rec in imap.entries.values())


def incidence_histogram(imap: IncidenceMap) -> Dict[int, int]:
    hist = Counter(rec.count for rec in imap.entries.values())
    return dict(sorted(hist.items()))


def total_incidences(imap: IncidenceMap) -> int:
    return sum(rec.count for rec in imap.entries.values())


def pair_identity_holds(imap: IncidenceMap) -> bool:
    return sum(comb(rec.count, 2) for rec in imap.entries.values()) == comb(imap.n, 2)
