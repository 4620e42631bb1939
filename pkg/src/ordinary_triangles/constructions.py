"""Seeded generators for the extremal configurations.

Random coordinates come from ``random.Random(seed)`` (MT19937 seeded from the
integer seed), drawn in a fixed order, so the same parameters and seed always
give the same point list. "Arbitrary" collinear points are placed at
x = 0, 1, ..., m-1. Genericity is never assumed: after sampling, the full
incidence map is built and every line with three or more points that is not
one of the intended lines forces a resample of its highest-index free point.
"""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from typing import Callable, List, Optional, Sequence

from .exact_geom import CanonicalLine, Point, PointSet, canonical_line
from .incidence import build_incidence_map

KINDS = ("prop_1_1", "prop_3_1", "three_parallel", "general_position", "bounded_collinear")

_MAX_ROUNDS = 1000

Sampler = Callable[[random.Random], Point]


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    n: int
    k: int = 2
    c: int = 2
    t: int = 0
    m: int = 0
    seed: int = 0
    bbox: Optional[int] = None

    def build(self) -> PointSet:
        return generate(self)


def default_bbox(n: int) -> int:
    return max(4 * n * n, 16)


def _off_lines(bbox: int, y_min: int) -> Sampler:
    def sample(rng: random.Random) -> Point:
        return Point(rng.randrange(bbox), rng.randrange(y_min, y_min + bbox))
    return sample


def _on_level(bbox: int, y: int) -> Sampler:
    def sample(rng: random.Random) -> Point:
        return Point(rng.randrange(bbox), y)
    return sample


def _row(count: int, y: int) -> List[Point]:
    return [Point(x, y) for x in range(count)]


def _horizontal(y: int) -> CanonicalLine:
    return canonical_line((0, y), (1, y))


def place(
    fixed: Sequence[Point],
    samplers: Sequence[Sampler],
    allowed: Sequence[CanonicalLine],
    rng: random.Random,
) -> PointSet:
    """Fixed points followed by one sampled point per sampler, resampled
    until the only lines with >= 3 points are the ``allowed`` ones."""
    fixed = list(fixed)
    allowed = set(allowed)
    nf = len(fixed)
    free = [s(rng) for s in samplers]
    for _ in range(_MAX_ROUNDS):
        pts = fixed + free
        bad = set()
        first = {}
        for idx, p in enumerate(pts):
            if p in first:
                bad.add(idx)
            else:
                first[p] = idx
        if not bad and len(pts) >= 3:
            for line, rec in build_incidence_map(PointSet(pts)):
                if rec.count >= 3 and line not in allowed:
                    # a line through 3+ fixed points is always an allowed one
                    bad.add(rec.members[-1])
        if not bad:
            return PointSet(pts)
        for idx in sorted(bad):
            free[idx - nf] = samplers[idx - nf](rng)
    raise RuntimeError("could not reach a generic placement; enlarge bbox")


def gen_prop_1_1(n: int, k: int, c: int, seed: int, bbox: Optional[int] = None) -> PointSet:
    """n-2k+1 points on the x-axis plus 2k-1 generic points above it."""
    if k < 2 or c < 2:
        raise ValueError("k >= 2 and c >= 2 violated")
    if n < 2 * k + c:
        raise ValueError(f"n >= 2k+c violated (n={n}, k={k}, c={c})")
    bbox = bbox or default_bbox(n)
    rng = random.Random(seed)
    axis = _row(n - 2 * k + 1, 0)
    return place(axis, [_off_lines(bbox, 1)] * (2 * k - 1), [_horizontal(0)], rng)


def gen_prop_3_1(n: int, k: int, c: int, t: int, seed: int, bbox: Optional[int] = None) -> PointSet:
    """n-t points on y=0, t-2k+3 on y=1, and 2k-3 generic points."""
    if k < 2 or c < 2:
        raise ValueError("k >= 2 and c >= 2 violated")
    if t < 2 * k + c - 2:
        raise ValueError(f"t >= 2k+c-2 violated (t={t}, k={k}, c={c})")
    if t >= n - 1:
        raise ValueError(f"t < n-1 violated (n={n}, t={t})")
    if 10 * t > n:
        warnings.warn(f"t <= 0.1n does not hold (n={n}, t={t})", stacklevel=2)
    bbox = bbox or default_bbox(n)
    rng = random.Random(seed)
    fixed = _row(n - t, 0) + _row(t - 2 * k + 3, 1)
    return place(fixed, [_off_lines(bbox, 2)] * (2 * k - 3), [_horizontal(0), _horizontal(1)], rng)


def gen_three_parallel(n: int, t: int, seed: int, bbox: Optional[int] = None) -> PointSet:
    """n/2-t, n/2-t and 2t points on y=0, 1, 2, with no collinear triple
    crossing the levels."""
    if n % 2:
        raise ValueError(f"n must be even (n={n})")
    if t < 2 or 4 * t > n:
        raise ValueError(f"2 <= t <= n/4 violated (n={n}, t={t})")
    bbox = bbox or default_bbox(n)
    rng = random.Random(seed)
    occupancy = (n // 2 - t, n // 2 - t, 2 * t)
    samplers = [_on_level(bbox, y) for y, size in enumerate(occupancy) for _ in range(size)]
    return place([], samplers, [_horizontal(y) for y in range(3)], rng)


def gen_general_position(n: int, seed: int, bbox: Optional[int] = None) -> PointSet:
    if n < 1:
        raise ValueError("n >= 1 violated")
    bbox = bbox or default_bbox(n)
    if bbox < 4 * n * n:
        raise ValueError(f"bbox >= 4n^2 violated (bbox={bbox}, n={n})")
    rng = random.Random(seed)
    return place([], [_off_lines(bbox, 0)] * n, [], rng)


def gen_bounded_collinear(n: int, m: int, seed: int, bbox: Optional[int] = None) -> PointSet:
    """m points on the x-axis, the other n-m generic with respect to everything."""
    if not 2 <= m <= n:
        raise ValueError(f"2 <= m <= n violated (n={n}, m={m})")
    bbox = bbox or default_bbox(n)
    rng = random.Random(seed)
    return place(_row(m, 0), [_off_lines(bbox, 1)] * (n - m), [_horizontal(0)], rng)


def generate(spec: ConstructionSpec) -> PointSet:
    if spec.kind == "prop_1_1":
        return gen_prop_1_1(spec.n, spec.k, spec.c, spec.seed, spec.bbox)
    if spec.kind == "prop_3_1":
        return gen_prop_3_1(spec.n, spec.k, spec.c, spec.t, spec.seed, spec.bbox)
    if spec.kind == "three_parallel":
        return gen_three_parallel(spec.n, spec.t, spec.seed, spec.bbox)
    if spec.kind == "general_position":
        return gen_general_position(spec.n, spec.seed, spec.bbox)
    if spec.kind == "bounded_collinear":
        return gen_bounded_collinear(spec.n, spec.m, spec.seed, spec.bbox)
    raise ValueError(f"unknown construction kind {spec.kind!r}; expected one of {', '.join(KINDS)}")
