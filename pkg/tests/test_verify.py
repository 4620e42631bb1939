import json
from fractions import Fraction
from math import comb

import pytest
from hypothesis import given, settings

from conftest import brute_lines, small_point_sets
from ordinary_triangles.constructions import (
    gen_bounded_collinear,
    gen_general_position,
    gen_prop_1_1,
    gen_prop_3_1,
    gen_three_parallel,
)
from ordinary_triangles.exact_geom import PointSet, canonical_line
from ordinary_triangles.incidence import build_incidence_map
from ordinary_triangles.verify import (
    at_least_gamma_n,
    bound_report,
    case_ii_diagnostics,
    check_beck_half,
    check_dezeeuw_dichotomy,
    check_dezeeuw_rich,
    check_kelly_moser,
    check_langer,
    check_lemma_3_3,
    check_lemma_3_3_auto,
    check_payne_wood,
    run_checks,
)

F = Fraction
AXIS = canonical_line((0, 0), (1, 0))


def test_kelly_moser(triangle, grid3, collinear5):
    r = check_kelly_moser(triangle)
    assert (r.lhs, r.rhs, r.satisfied) == (3, F(9, 7), True)
    r = check_kelly_moser(grid3)
    assert (r.lhs, r.rhs, r.satisfied) == (12, F(27, 7), True)
    r = check_kelly_moser(collinear5)
    assert r.hypothesis_met is False and r.satisfied is None


def test_beck(grid3, triangle, collinear5):
    r = check_beck_half(grid3)
    assert (r.lhs, r.rhs, r.satisfied) == (20, 10, True)
    r = check_beck_half(triangle)
    assert (r.lhs, r.rhs, r.satisfied) == (3, F(3, 2), True)
    r = check_beck_half(gen_general_position(20, seed=1))
    assert r.lhs == 2 * r.rhs == comb(20, 2) and r.satisfied
    assert check_beck_half(collinear5).hypothesis_met is False


def test_langer(grid3, triangle):
    r = check_langer(grid3)
    assert (r.lhs, r.rhs, r.satisfied) == (48, 36, True)
    r = check_langer(triangle)
    assert (r.lhs, r.rhs, r.satisfied) == (6, 6, True)
    assert check_langer(gen_prop_1_1(10, 2, 2, seed=0)).hypothesis_met is False


def test_payne_wood(grid3, collinear5):
    r = check_payne_wood(grid3)
    assert (r.lhs, r.rhs, r.satisfied) == (20, F(27, 49), True)
    r = check_payne_wood(collinear5)
    assert (r.rhs, r.satisfied) == (0, True)
    r = check_payne_wood(gen_general_position(10, seed=4))
    assert (r.lhs, r.rhs, r.satisfied) == (45, F(80, 98), True)


def test_dichotomy(collinear5, grid3):
    r = check_dezeeuw_dichotomy(collinear5)
    assert r.satisfied and r.witnesses["rich_line_branch"]
    r = check_dezeeuw_dichotomy(gen_general_position(10, seed=2))
    assert r.lhs == 45 and r.rhs == F(100, 9) and r.witnesses["many_lines_branch"] and r.satisfied
    r = check_dezeeuw_dichotomy(grid3)
    assert r.lhs == 20 and r.rhs == 9 and r.witnesses["many_lines_branch"]


def test_gamma_threshold_exact():
    gamma = (6 + 3 ** 0.5) / 9
    for n in range(1, 2000):
        smallest = next(m for m in range(n + 1) if at_least_gamma_n(m, n))
        # gamma*n is irrational, never within float error of an integer at this size
        assert smallest - 1 < gamma * n < smallest


def test_dezeeuw_rich(grid3):
    r = check_dezeeuw_rich(grid3, 5)
    assert (r.lhs, r.rhs, r.satisfied) == (0, F(80, 9), True)
    assert check_dezeeuw_rich(gen_general_position(15, seed=0), 7).lhs == 0
    ps = gen_bounded_collinear(30, 10, seed=3)
    lines = brute_lines(ps)
    r = check_dezeeuw_rich(ps, 5)
    assert r.hypothesis_met
    assert r.lhs == sum(1 for s in lines if len(s) >= 5) == 1
    assert r.rhs == F(4 * len(lines), 9) and r.satisfied
    with pytest.raises(ValueError):
        check_dezeeuw_rich(grid3, 4)


def test_lemma_3_3_on_prop_1_1():
    ps = gen_prop_1_1(100, 2, 17, seed=6)
    off = [i for i, p in enumerate(ps) if p.y != 0]
    rep = check_lemma_3_3(ps, AXIS, off[0], off[1])
    assert rep.hypothesis_met and rep.satisfied
    assert len(rep.good_r) >= 7 and rep.threshold == F(20, 3)
    assert not (set(rep.good_r) & (set(rep.X_p) | set(rep.X_q)))
    assert set(rep.X_p) | set(rep.X_q) <= {i for i, p in enumerate(ps) if p.y == 0}


def test_lemma_3_3_blocked_points():
    # two 19-point lines through p and q meet the axis; those axis points are blocked
    axis = [(x, 0) for x in range(60)]
    p, q = (0, 1000), (7, 1000)
    fan_p = [(0, 50 * s) for s in range(1, 19) if 50 * s != 1000]
    fan_q = [(7, 50 * s + 3) for s in range(1, 19)]
    ps = PointSet(axis + [p, q] + fan_p + fan_q)
    ip, iq = 60, 61
    rep = check_lemma_3_3(ps, AXIS, ip, iq)
    assert rep.hypothesis_met and rep.satisfied
    assert rep.X_p == [0] and rep.X_q == [7]
    assert 0 not in rep.good_r and 7 not in rep.good_r


def test_lemma_3_3_hypothesis_failures():
    diag = [(k, k + 100) for k in range(1, 19)]
    ps = PointSet([(x, 0) for x in range(10)] + diag)
    rep = check_lemma_3_3(ps, AXIS, 10, 11)
    assert rep.hypothesis_met is False and "18" in rep.reason

    gp = gen_general_position(20, seed=9)
    rep = check_lemma_3_3(gp, canonical_line(gp[0], gp[1]), 2, 3)
    assert rep.hypothesis_met is False and "n/5" in rep.reason


def test_case_ii(grid3):
    rep = case_ii_diagnostics(gen_general_position(50, seed=3))
    assert rep.hypothesis_met and rep.satisfied
    assert rep.X_prime == list(range(50))
    assert all(d["lines"] == 49 and d["ordinary_lines"] == 49 and d["X_p_size"] == 50 for d in rep.per_p)
    # X(p) is everything; y(p) counts lines missing p
    assert all(d["y_p"] == comb(49, 2) for d in rep.per_p)
    assert case_ii_diagnostics(grid3).hypothesis_met is False


def test_case_ii_bounded_collinear():
    ps = gen_bounded_collinear(200, 30, seed=1)
    rep = case_ii_diagnostics(ps)
    assert rep.hypothesis_met and rep.satisfied
    assert 1000 * len(rep.X_prime) > 200
    assert all(100 * d["ordinary_lines"] >= 27 * 200 for d in rep.per_p)


def test_case_ii_y_p_by_brute_force():
    ps = PointSet([(x, y) for x in range(6) for y in range(6) if (x * 7 + y * 3) % 5])
    imap = build_incidence_map(ps)
    rep = case_ii_diagnostics(ps, imap)
    assert rep.hypothesis_met
    lines = [set(rec.members) for rec in imap.entries.values()]
    for d in rep.per_p:
        p = d["p"]
        ordinary_p = [s for s in lines if p in s and len(s) <= 17]
        xp = set().union(*ordinary_p)
        assert d["ordinary_lines"] == len(ordinary_p) and d["X_p_size"] == len(xp)
        assert d["y_p"] == sum(1 for s in lines if p not in s and len(s) <= 17 and len(s & xp) >= 2)


def test_bound_report(triangle):
    with pytest.warns(UserWarning):
        fig2 = gen_prop_3_1(11, 2, 2, 4, seed=0)
    r = bound_report(fig2, 4, tau=2)
    assert r.lhs == 21 and r.witnesses["ratio_n_t"] == "21/44"
    assert r.satisfied is None
    r = bound_report(fig2, 4)
    assert r.hypothesis_met and r.satisfied and r.lhs == comb(11, 3) - comb(7, 3) - 1
    r = bound_report(gen_three_parallel(100, 16, seed=0), 16)
    assert r.lhs <= F(100 * 100 * 16, 2) and r.satisfied
    r = bound_report(triangle, 1)
    # two lines cover a triangle, so existence is not judged
    assert r.lhs == 1 and r.hypothesis_met is False


def test_json_shape(grid3):
    out = [r.to_dict() for r in run_checks(grid3, ["beck", "payne-wood", "case-ii"])]
    assert json.loads(json.dumps(out)) == out
    assert set(out[0]) == {"name", "hypothesis_met", "lhs", "rhs", "satisfied", "witnesses"}
    assert out[0]["lhs"] == "20/1" and out[1]["rhs"] == "27/49"
    with pytest.raises(ValueError, match="unknown checker"):
        run_checks(grid3, ["nope"])


def test_lemma_3_3_auto_reports_missing_line():
    r = check_lemma_3_3_auto(gen_general_position(30, seed=0))
    assert r.hypothesis_met is False


@settings(max_examples=150, deadline=None)
@given(small_point_sets(min_size=3, max_size=18, span=4))
def test_theorems_hold_on_random_sets(ps):
    imap = build_incidence_map(ps)
    reports = [
        check_kelly_moser(ps, imap), check_beck_half(ps, imap), check_langer(ps, imap),
        check_payne_wood(ps, imap), check_dezeeuw_dichotomy(ps, imap),
        check_dezeeuw_rich(ps, 5, imap), check_dezeeuw_rich(ps, 7, imap),
        check_lemma_3_3_auto(ps, imap), case_ii_diagnostics(ps, imap).as_check(ps.n),
    ]
    for r in reports:
        assert r.satisfied is (True if r.hypothesis_met else None), r
