"""Checkers for the incidence lemmas and bound shapes.

The lemmas are theorems, so a checker whose hypothesis holds must report
``satisfied=True``; anything else is a bug upstream. All comparisons use
integers or ``Fraction``; the one irrational threshold, (6 + sqrt 3)/9, is
compared by squaring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

import numpy as np

from .cover import coverable
from .exact_geom import CanonicalLine, PointSet, orient
from .incidence import IncidenceMap, build_incidence_map, incidence_histogram, max_collinear, total_incidences
from .oracle import line_size_scan
from .triangles import count_matmul

C = 17
ALPHA = Fraction(1, 5)


def frac_str(v: Optional[Fraction]) -> Optional[str]:
    if v is None:
        return None
    v = Fraction(v)
    return f"{v.numerator}/{v.denominator}"


@dataclass
class CheckReport:
    name: str
    hypothesis_met: bool
    lhs: Optional[Fraction]
    rhs: Optional[Fraction]
    satisfied: Optional[bool]
    witnesses: Optional[Dict[str, Any]] = None

    def to_dict(self) -> Dict[str, Any]:
        return {
            "name": self.name,
            "hypothesis_met": self.hypothesis_met,
            "lhs": frac_str(self.lhs),
            "rhs": frac_str(self.rhs),
            "satisfied": self.satisfied,
            "witnesses": self.witnesses,
        }


def _report(name, hypothesis_met, lhs, rhs, ok, witnesses=None) -> CheckReport:
    lhs, rhs = Fraction(lhs), Fraction(rhs)
    return CheckReport(name, hypothesis_met, lhs, rhs, ok if hypothesis_met else None, witnesses)


def _imap(points: PointSet, imap: Optional[IncidenceMap]) -> IncidenceMap:
    return imap if imap is not None else build_incidence_map(points)


def at_least_gamma_n(m: int, n: int) -> bool:
    """m >= (6 + sqrt 3) n / 9, i.e. 9m - 6n >= sqrt(3) n, decided exactly."""
    d = 9 * m - 6 * n
    return d >= 0 and d * d >= 3 * n * n


def check_kelly_moser(points: PointSet, imap: Optional[IncidenceMap] = None) -> CheckReport:
    n = points.n
    imap = _imap(points, imap)
    ordinary = incidence_histogram(imap).get(2, 0)
    rhs = Fraction(3 * n, 7)
    return _report("kelly_moser", n >= 3 and not points.is_collinear(), ordinary, rhs, ordinary >= rhs)


def check_beck_half(points: PointSet, imap: Optional[IncidenceMap] = None) -> CheckReport:
    imap = _imap(points, imap)
    poor = sum(v for size, v in incidence_histogram(imap).items() if size <= 3)
    rhs = Fraction(len(imap), 2)
    return _report("beck_half", points.n >= 3 and not points.is_collinear(), poor, rhs, poor >= rhs)


def check_langer(points: PointSet, imap: Optional[IncidenceMap] = None) -> CheckReport:
    n = points.n
    imap = _imap(points, imap)
    lhs = total_incidences(imap)
    rhs = Fraction(n * (n + 3), 3)
    return _report("langer", 3 * max_collinear(imap) <= 2 * n, lhs, rhs, lhs >= rhs)


def check_payne_wood(points: PointSet, imap: Optional[IncidenceMap] = None) -> CheckReport:
    n = points.n
    imap = _imap(points, imap)
    m = max_collinear(imap)
    rhs = Fraction(n * (n - m), 98)
    return _report("payne_wood", n >= 2, len(imap), rhs, len(imap) >= rhs, {"max_collinear": m})


def check_dezeeuw_dichotomy(points: PointSet, imap: Optional[IncidenceMap] = None) -> CheckReport:
    """lhs/rhs carry the line-count branch; the rich-line branch is a witness."""
    n = points.n
    imap = _imap(points, imap)
    m = max_collinear(imap)
    rich = at_least_gamma_n(m, n)
    rhs = Fraction(n * n, 9)
    many = len(imap) >= rhs
    return _report(
        "dezeeuw_dichotomy", n >= 2, len(imap), rhs, rich or many,
        {"max_collinear": m, "rich_line_branch": rich, "many_lines_branch": many},
    )


def check_dezeeuw_rich(points: PointSet, k: int, imap: Optional[IncidenceMap] = None) -> CheckReport:
    if k < 5:
        raise ValueError(f"k must be >= 5, got {k}")
    n = points.n
    imap = _imap(points, imap)
    rich = sum(1 for rec in imap.entries.values() if rec.count >= k)
    rhs = Fraction(4 * len(imap), (k - 2) ** 2)
    return _report(f"dezeeuw_rich_k{k}", 3 * max_collinear(imap) <= 2 * n, rich, rhs, rich <= rhs, {"k": k})


@dataclass
class Lemma33Report:
    line: CanonicalLine
    p: int
    q: int
    L_size: int
    X_p: List[int]
    X_q: List[int]
    good_r: List[int]
    threshold: Fraction
    hypothesis_met: bool
    satisfied: Optional[bool]
    reason: str = ""

    def as_check(self) -> CheckReport:
        return CheckReport(
            "lemma_3_3", self.hypothesis_met, Fraction(len(self.good_r)), self.threshold, self.satisfied,
            {"line": list(self.line), "p": self.p, "q": self.q, "L_size": self.L_size,
             "X_p": self.X_p, "X_q": self.X_q, "good_r": self.good_r, "reason": self.reason},
        )


def check_lemma_3_3(
    points: PointSet, line: CanonicalLine, p: int, q: int, imap: Optional[IncidenceMap] = None
) -> Lemma33Report:
    """Third vertices r on a rich line completing a 17-ordinary triangle with
    an off-line 17-ordinary pair p, q; at least n/15 of them must exist."""
    n = points.n
    imap = _imap(points, imap)
    threshold = ALPHA * n / 3
    on_line = [i for i, pt in enumerate(points) if line.contains(pt)]

    def refuse(reason: str) -> Lemma33Report:
        return Lemma33Report(line, p, q, len(on_line), [], [], [], threshold, False, None, reason)

    if p == q:
        return refuse("p and q coincide")
    if 5 * len(on_line) < n:
        return refuse("line holds fewer than n/5 points")
    if line.contains(points[p]) or line.contains(points[q]):
        return refuse("p or q lies on the line")
    counts = imap.pair_counts
    if counts[p, q] > C:
        return refuse(f"line(p, q) holds {int(counts[p, q])} > {C} points")

    x_p = [x for x in on_line if counts[x, p] >= C + 1]
    x_q = [x for x in on_line if counts[x, q] >= C + 1]
    blocked = set(x_p) | set(x_q)
    good = [r for r in on_line if r not in blocked and orient(points[p], points[q], points[r]) != 0]
    # every r is rechecked by scanning all points, independent of the map
    pts = points.points
    scanned = all(
        line_size_scan(pts, a, b) <= C for r in good for a, b in ((p, q), (p, r), (q, r))
    )
    ok = len(good) >= ceil(threshold) and scanned
    return Lemma33Report(line, p, q, len(on_line), x_p, x_q, good, threshold, True, ok)


def lemma_3_3_candidates(
    points: PointSet, imap: Optional[IncidenceMap] = None, limit: Optional[int] = None
) -> Tuple[Optional[CanonicalLine], List[Tuple[int, int]]]:
    """The first richest line and the off-line pairs whose line is 17-ordinary."""
    imap = _imap(points, imap)
    best = max(imap.entries.items(), key=lambda kv: kv[1].count)[0]
    if 5 * imap.entries[best].count < points.n:
        return None, []
    off = [i for i, pt in enumerate(points) if not best.contains(pt)]
    counts = imap.pair_counts
    pairs = []
    for a in range(len(off)):
        for b in range(a + 1, len(off)):
            if counts[off[a], off[b]] <= C:
                pairs.append((off[a], off[b]))
                if limit is not None and len(pairs) >= limit:
                    return best, pairs
    return best, pairs


def check_lemma_3_3_auto(points: PointSet, imap: Optional[IncidenceMap] = None) -> CheckReport:
    imap = _imap(points, imap)
    line, pairs = lemma_3_3_candidates(points, imap, limit=1)
    if not pairs:
        why = "no line holds n/5 points" if line is None else "no 17-ordinary pair off the richest line"
        return CheckReport("lemma_3_3", False, None, ALPHA * points.n / 3, None, {"reason": why})
    return check_lemma_3_3(points, line, *pairs[0], imap=imap).as_check()


@dataclass
class CaseIIReport:
    hypothesis_met: bool
    satisfied: Optional[bool]
    X_prime: List[int] = field(default_factory=list)
    per_p: List[Dict[str, int]] = field(default_factory=list)

    def as_check(self, n: int) -> CheckReport:
        return CheckReport(
            "case_ii", self.hypothesis_met, Fraction(len(self.X_prime)), Fraction(n, 1000), self.satisfied,
            {"X_prime": self.X_prime, "per_p": self.per_p},
        )


def case_ii_diagnostics(points: PointSet, imap: Optional[IncidenceMap] = None) -> CaseIIReport:
    """X' (points on >= 33n/100 lines) and, for each p in X', the number of
    17-ordinary lines through p, the points X(p) they cover, and y(p), the
    17-ordinary lines spanned by X(p) that avoid p."""
    n = points.n
    imap = _imap(points, imap)
    if 5 * max_collinear(imap) > n:
        return CaseIIReport(False, None)

    recs = list(imap.entries.values())
    sizes = np.array([r.count for r in recs], dtype=np.int64)
    flat = np.fromiter((m for r in recs for m in r.members), dtype=np.int64, count=int(sizes.sum()))
    owner = np.repeat(np.arange(len(recs)), sizes)
    offsets = np.concatenate(([0], np.cumsum(sizes)[:-1]))
    ordinary = sizes <= C
    lines_of: List[List[int]] = [[] for _ in range(n)]
    for li, pt in zip(owner.tolist(), flat.tolist()):
        lines_of[pt].append(li)

    deg = imap.lines_per_point
    x_prime = [p for p in range(n) if 100 * int(deg[p]) >= 33 * n]
    per_p = []
    ok = 1000 * len(x_prime) > n
    for p in x_prime:
        through = np.array(lines_of[p], dtype=np.int64)
        ord_through = through[ordinary[through]]
        in_xp = np.zeros(n, dtype=bool)
        for li in ord_through.tolist():
            in_xp[flat[offsets[li]:offsets[li] + sizes[li]]] = True
        hits = np.add.reduceat(in_xp[flat].astype(np.int64), offsets)
        avoid_p = np.ones(len(recs), dtype=bool)
        avoid_p[through] = False
        y_p = int(np.count_nonzero((hits >= 2) & ordinary & avoid_p))
        per_p.append({"p": p, "lines": int(deg[p]), "ordinary_lines": len(ord_through),
                      "X_p_size": int(in_xp.sum()), "y_p": y_p})
        ok = ok and 100 * len(ord_through) >= 27 * n
    return CaseIIReport(True, ok, x_prime, per_p)


def bound_report(points: PointSet, t: int, imap: Optional[IncidenceMap] = None, tau: int = C) -> CheckReport:
    """tau-ordinary triangle count (17 by default) next to n*t and n^2*t.

    Only existence is judged: a set that no 2 lines cover spans at least one
    17-ordinary triangle. The ratios carry no verdict.
    """
    n = points.n
    imap = _imap(points, imap)
    count = count_matmul(points, imap, tau).count if n >= 3 else 0
    not_two = coverable(points, 2) is None
    nt, n2t = n * t, n * n * t
    witnesses = {
        "n": n, "t": t, "tau": tau, "count": count, "n_t": nt, "n2_t": n2t,
        "ratio_n_t": frac_str(Fraction(count, nt)) if nt else None,
        "ratio_n2_t": frac_str(Fraction(count, n2t)) if n2t else None,
    }
    # the existence guarantee is for 17-ordinary triangles, so smaller tau has no verdict
    return _report("bound", not_two and tau >= C, count, 1, count >= 1, witnesses)


CHECKERS: Dict[str, Callable[..., CheckReport]] = {
    "kelly-moser": lambda X, m, o: check_kelly_moser(X, m),
    "beck": lambda X, m, o: check_beck_half(X, m),
    "langer": lambda X, m, o: check_langer(X, m),
    "payne-wood": lambda X, m, o: check_payne_wood(X, m),
    "dezeeuw-dichotomy": lambda X, m, o: check_dezeeuw_dichotomy(X, m),
    "dezeeuw-rich": lambda X, m, o: check_dezeeuw_rich(X, o.get("k", 5), m),
    "lemma-3-3": lambda X, m, o: check_lemma_3_3_auto(X, m),
    "case-ii": lambda X, m, o: case_ii_diagnostics(X, m).as_check(X.n),
    "bound": lambda X, m, o: bound_report(X, o.get("t", 0), m),
}


def run_checks(points: PointSet, names: Sequence[str], **options) -> List[CheckReport]:
    unknown = [nm for nm in names if nm not in CHECKERS]
    if unknown:
        raise ValueError(f"unknown checker(s) {', '.join(unknown)}; choose from {', '.join(CHECKERS)}")
    imap = build_incidence_map(points)
    return [CHECKERS[nm](points, imap, options) for nm in names]
