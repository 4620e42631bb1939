"""Exact integer predicates and canonical line keys.

Everything downstream works on integer coordinates, so every predicate here
is exact. Python ints are unbounded, which removes any overflow concern.
"""

from __future__ import annotations

from math import gcd
from typing import Iterable, Iterator, NamedTuple, Sequence, Tuple, Union


class Point(NamedTuple):
    x: int
    y: int


class CanonicalLine(NamedTuple):
    """The line ``a*x + b*y + c = 0`` in reduced, sign-normalized form.

    Two point pairs on the same geometric line always produce equal tuples,
    so instances are safe to use as dict keys. Tuple ordering gives the
    lexicographic (a, b, c) order used for all observable iteration.
    """

    a: int
    b: int
    c: int

    def contains(self, p: Sequence[int]) -> bool:
        return self.a * p[0] + self.b * p[1] + self.c == 0


PointLike = Union[Point, Tuple[int, int]]


def orient(p: Sequence[int], q: Sequence[int], r: Sequence[int]) -> int:
    """Sign of the cross product (q - p) x (r - p); 0 iff collinear."""
    d = (q[0] - p[0]) * (r[1] - p[1]) - (q[1] - p[1]) * (r[0] - p[0])
    return (d > 0) - (d < 0)


def normalize_line(a: int, b: int, c: int) -> CanonicalLine:
    if a == 0 and b == 0:
        raise ValueError("degenerate line: a = b = 0")
    g = gcd(gcd(a, b), c)
    a, b, c = a // g, b // g, c // g
    if a < 0 or (a == 0 and b < 0):
        a, b, c = -a, -b, -c
    return CanonicalLine(a, b, c)


def canonical_line(p: Sequence[int], q: Sequence[int]) -> CanonicalLine:
    if p[0] == q[0] and p[1] == q[1]:
        raise ValueError(f"degenerate pair: {tuple(p)} == {tuple(q)}")
    a = q[1] - p[1]
    b = p[0] - q[0]
    return normalize_line(a, b, -(a * p[0] + b * p[1]))


def line_contains(line: CanonicalLine, p: Sequence[int]) -> bool:
    return line.a * p[0] + line.b * p[1] + line.c == 0


class PointSet:
    """An ordered set of distinct integer points.

    Indices ``0..n-1`` are the stable identifiers every other module uses.
    """

    __slots__ = ("_points",)

    def __init__(self, points: Iterable[PointLike]):
        pts = tuple(Point(int(p[0]), int(p[1])) for p in points)
        if not pts:
            raise ValueError("empty set")
        first_index = {}
        for idx, p in enumerate(pts):
            if p in first_index:
                raise ValueError(f"duplicate at indices {first_index[p]},{idx}")
            first_index[p] = idx
        self._points = pts

    @property
    def points(self) -> Tuple[Point, ...]:
        return self._points

    @property
    def n(self) -> int:
        return len(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __getitem__(self, i: int) -> Point:
        return self._points[i]

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, PointSet) and self._points == other._points

    def __hash__(self) -> int:
        return hash(self._points)

    def __repr__(self) -> str:
        return f"PointSet(n={self.n})"

    def is_collinear(self) -> bool:
        """True when every point lies on one line (vacuously for n <= 2)."""
        pts = self._points
        if len(pts) <= 2:
            return True
        p, q = pts[0], pts[1]
        return all(orient(p, q, r) == 0 for r in pts[2:])


def make_point_set(points: Iterable[PointLike]) -> PointSet:
    return PointSet(points)
