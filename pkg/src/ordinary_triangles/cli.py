"""Command-line front end.

    ordtri gen --kind prop11 --n 10 --k 2 --c 2 --seed 1 > fig1.txt
    ordtri lines fig1.txt
    ordtri triangles fig1.txt --mode count --tau 2
    ordtri min-tau fig1.txt
    ordtri cover fig1.txt --k 3
    ordtri verify fig1.txt --check beck --check langer

Results go to stdout as JSON, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import List, Optional

from . import constructions
from .cover import coverable
from .incidence import build_incidence_map, incidence_histogram, max_collinear
from .pointfile import format_points, parse_points
from .triangles import count_matmul, detect, min_tau, report_all, resolve_threads
from .verify import CHECKERS, run_checks

KIND_ALIASES = {
    "prop11": "prop_1_1",
    "prop31": "prop_3_1",
    "three-parallel": "three_parallel",
    "general-position": "general_position",
    "bounded-collinear": "bounded_collinear",
}


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _load(path: str):
    if path == "-":
        return parse_points(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_points(fh.read())


def cmd_gen(args) -> None:
    kind = KIND_ALIASES.get(args.kind, args.kind)
    spec = constructions.ConstructionSpec(
        kind=kind, n=args.n, k=args.k, c=args.c, t=args.t, m=args.m, seed=args.seed, bbox=args.bbox
    )
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        points = spec.build()
    for w in caught:
        print(f"warning: {w.message}", file=sys.stderr)
    header = [f"kind={kind} n={spec.n} k={spec.k} c={spec.c} t={spec.t} m={spec.m} seed={spec.seed}"]
    sys.stdout.write(format_points(points, header))


def cmd_lines(args) -> None:
    points, scale = _load(args.file)
    imap = build_incidence_map(points)
    hist = {str(size): v for size, v in incidence_histogram(imap).items()}
    _emit({"histogram": hist, "max_collinear": max_collinear(imap), "lines": len(imap),
           "n": points.n, "scale": scale})


def cmd_triangles(args) -> None:
    points, scale = _load(args.file)
    imap = build_incidence_map(points)
    if args.mode == "count":
        _emit({**count_matmul(points, imap, args.tau, args.threads).to_dict(), "scale": scale})
    elif args.mode == "report":
        tris = report_all(points, imap, args.tau, args.threads)
        _emit({"tau": args.tau, "count": len(tris), "triangles": [list(t) for t in tris], "scale": scale})
    else:
        tri = detect(points, imap, args.tau)
        _emit({"tau": args.tau, "triangle": list(tri) if tri else "none", "scale": scale})


def cmd_min_tau(args) -> None:
    points, scale = _load(args.file)
    best = min_tau(points, build_incidence_map(points))
    _emit({"min_tau": best if best is not None else "none", "scale": scale})


def cmd_cover(args) -> None:
    points, scale = _load(args.file)
    lines = coverable(points, args.k)
    _emit({"k": args.k, "lines": [list(l) for l in lines] if lines is not None else "none", "scale": scale})


def cmd_verify(args) -> None:
    points, _ = _load(args.file)
    names = list(CHECKERS) if "all" in args.check else args.check
    reports = run_checks(points, names, k=args.k, t=args.t)
    _emit([r.to_dict() for r in reports])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ordtri", description="Exact tau-ordinary line and triangle tools")
    parser.add_argument("--threads", type=int, default=None,
                        help="worker threads (default: $OT_THREADS or CPU count); output does not depend on it")
    sub = parser.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a construction as a point file")
    g.add_argument("--kind", required=True, choices=sorted(set(KIND_ALIASES) | set(constructions.KINDS)))
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--k", type=int, default=2)
    g.add_argument("--c", type=int, default=2)
    g.add_argument("--t", type=int, default=0)
    g.add_argument("--m", type=int, default=0, help="max collinear for bounded-collinear")
    g.add_argument("--seed", type=int, required=True)
    g.add_argument("--bbox", type=int, default=None)
    g.set_defaults(func=cmd_gen)

    p = sub.add_parser("lines", help="incidence histogram and max collinear")
    p.add_argument("file")
    p.set_defaults(func=cmd_lines)

    p = sub.add_parser("triangles", help="report, detect or count tau-ordinary triangles")
    p.add_argument("file")
    p.add_argument("--mode", choices=("report", "detect", "count"), default="count")
    p.add_argument("--tau", type=int, required=True)
    p.set_defaults(func=cmd_triangles)

    p = sub.add_parser("min-tau", help="smallest tau with a tau-ordinary triangle")
    p.add_argument("file")
    p.set_defaults(func=cmd_min_tau)

    p = sub.add_parser("cover", help="cover the set with at most k lines")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_cover)

    p = sub.add_parser("verify", help="run lemma checkers")
    p.add_argument("file")
    p.add_argument("--check", action="append", required=True,
                   help=f"checker id, repeatable, or 'all': {', '.join(CHECKERS)}")
    p.add_argument("--k", type=int, default=5, help="k for dezeeuw-rich")
    p.add_argument("--t", type=int, default=0, help="t(n) for bound")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.threads = resolve_threads(args.threads)
        args.func(args)
    except (ValueError, RuntimeError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
