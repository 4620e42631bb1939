"""Plain-text point files.

One point per line as two whitespace-separated integers; ``p/q`` tokens are
accepted and the whole set is scaled by the lcm of the denominators, which
leaves every collinearity unchanged. ``#`` starts a comment line and blank
lines are skipped.
"""

from __future__ import annotations

import re
from fractions import Fraction
from math import lcm
from typing import Iterable, List, Tuple

from .exact_geom import PointSet

_TOKEN = re.compile(r"[+-]?\d+(?:/\d+)?\Z")


class PointFileError(ValueError):
    pass


def parse_points(text: str) -> Tuple[PointSet, int]:
    """Parse a point file; returns the integer point set and the scale used."""
    raw: List[Tuple[Fraction, Fraction]] = []
    lines: List[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        tokens = s.split()
        if len(tokens) != 2:
            raise PointFileError(f"line {lineno}: expected 2 coordinates, found {len(tokens)}")
        coords = []
        for tok in tokens:
            if not _TOKEN.match(tok):
                raise PointFileError(f"line {lineno}: bad coordinate {tok!r}")
            try:
                coords.append(Fraction(tok))
            except ZeroDivisionError:
                raise PointFileError(f"line {lineno}: zero denominator in {tok!r}") from None
        raw.append((coords[0], coords[1]))
        lines.append(lineno)
    if not raw:
        raise PointFileError("no points in file")
    scale = lcm(*(f.denominator for pt in raw for f in pt))
    pts = [(int(x * scale), int(y * scale)) for x, y in raw]
    seen = {}
    for idx, p in enumerate(pts):
        if p in seen:
            raise PointFileError(
                f"line {lines[idx]}: duplicate of line {lines[seen[p]]} (indices {seen[p]},{idx})"
            )
        seen[p] = idx
    return PointSet(pts), scale


def format_points(points: PointSet, header: Iterable[str] = ()) -> str:
    out = [f"# {h}" for h in header]
    out.extend(f"{p.x} {p.y}" for p in points)
    return "\n".join(out) + "\n"
