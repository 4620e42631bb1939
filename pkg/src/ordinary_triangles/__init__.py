"""Exact tau-ordinary lines and triangles of planar integer point sets."""

from .exact_geom import CanonicalLine, Point, PointSet, canonical_line, line_contains, make_point_set, orient
from .incidence import IncidenceMap, LineRecord, build_incidence_map, incidence_histogram, line_through, max_collinear
from .ordinary_graph import OrdinaryGraph, build_graph, degenerate_triple_count
from .triangles import Triangle, TriangleCount, count_brute, count_matmul, detect, min_tau, report_all

__all__ = [
    "CanonicalLine", "Point", "PointSet", "canonical_line", "line_contains", "make_point_set", "orient",
    "IncidenceMap", "LineRecord", "build_incidence_map", "incidence_histogram", "line_through", "max_collinear",
    "OrdinaryGraph", "build_graph", "degenerate_triple_count",
    "Triangle", "TriangleCount", "count_brute", "count_matmul", "detect", "min_tau", "report_all",
]
