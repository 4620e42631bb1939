import itertools

import pytest
from hypothesis import strategies as st

from ordinary_triangles.exact_geom import PointSet, orient

TRIANGLE = [(0, 0), (1, 0), (0, 1)]
GRID3 = [(x, y) for x in range(3) for y in range(3)]
COLLINEAR5 = [(x, 2 * x + 1) for x in range(5)]
FIG2 = [(x, 0) for x in range(7)] + [(x, 1) for x in range(3)] + [(7, 3)]


def brute_lines(points):
    """Member sets of all connecting lines, O(n^3), using only orient."""
    pts = list(points)
    lines = set()
    for i, j in itertools.combinations(range(len(pts)), 2):
        lines.add(frozenset(k for k in range(len(pts)) if orient(pts[i], pts[j], pts[k]) == 0))
    return lines


@pytest.fixture
def triangle():
    return PointSet(TRIANGLE)


@pytest.fixture
def grid3():
    return PointSet(GRID3)


@pytest.fixture
def collinear5():
    return PointSet(COLLINEAR5)


@pytest.fixture
def fig2():
    return PointSet(FIG2)


def small_point_sets(min_size=2, max_size=14, span=5):
    """Distinct points on a small grid, where collinearities are common."""
    coords = st.tuples(st.integers(-span, span), st.integers(-span, span))
    return st.lists(coords, min_size=min_size, max_size=max_size, unique=True).map(PointSet)


def pytest_terminal_summary(terminalreporter):
    """One PASS/FAIL line per acceptance criterion (tests named test_cNN_*)."""
    results = {}
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            name = rep.nodeid.split("::")[-1]
            if "test_acceptance" not in rep.nodeid or not name.startswith("test_c"):
                continue
            crit = int(name[6:8])
            results.setdefault(crit, []).append(outcome == "passed")
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for crit in sorted(results):
        oks = results[crit]
        status = "PASS" if all(oks) else f"FAIL ({oks.count(False)}/{len(oks)} cases failed)"
        terminalreporter.write_line(f"criterion {crit:2d}: {status}")
