"""Command-line interface.

    polyproj enumerate --input P.ine [--dims 1,2] [--eps 0.5] [--format csv|json]
    polyproj oracle    --input P.ine [--dims 1,2]
    polyproj check     --input P.ine [--dims 1,2]
    polyproj bench     --input A.ine [--input B.ine ...] [--repeat 3]
    polyproj gen       {hypercube,cross,perm,random} [--dim N] [--order D] [--m M] [--seed S]
    polyproj plot      --input P.ine [--samples 720] [--format svg|csv] [--output out.svg]

Data goes to ``--output`` or stdout; timings and counts go to stderr.
Exit codes: 0 ok, 2 unreadable input, 3 unbounded or empty polytope,
4 vertex budget exceeded, 5 enumerator/oracle mismatch.
"""
from __future__ import annotations

import argparse
import json
import statistics
import sys
from pathlib import Path

import numpy as np

from . import formats, oracle, plotting
from .enumerator import EnumerationParams, ProjectedVertexList, enumerate_vertices
from .errors import (DimensionTooLarge, EmptyPolytope, ParseError, PolyprojError, ProjectionUnbounded,
                     TooManyBases, UnboundedOrEmpty, VertexBudgetExceeded)
from .polytope import (make_cross_polytope, make_hypercube, make_permutahedron,
                       make_random_bounded)
from .support import PlaneSpec, support_curve

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_UNBOUNDED = 3
EXIT_BUDGET = 4
EXIT_MISMATCH = 5

MATCH_TOL = 1e-6


class UsageError(Exception):
    pass


def _dims(text):
    try:
        d1, d2 = (int(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected D1,D2, got {text!r}") from None
    return d1, d2


def _common(parser):
    parser.add_argument("--input", action="append", metavar="PATH",
                        help=".ine file (repeatable for bench)")
    parser.add_argument("--dims", type=_dims, default=(1, 2), metavar="D1,D2",
                        help="1-based projection coordinates (default 1,2)")
    parser.add_argument("--eps", type=float, default=0.5, metavar="DEG",
                        help="angular tolerance in degrees (default 0.5)")
    parser.add_argument("--tol", type=float, default=1e-9, metavar="REAL",
                        help="2-D vertex equality tolerance (default 1e-9)")
    parser.add_argument("--output", metavar="PATH")
    parser.add_argument("--format", choices=("csv", "json", "svg"))
    parser.add_argument("--seed", type=int)
    parser.add_argument("--samples", type=int, default=720,
                        help="support-curve samples for plot (default 720)")
    parser.add_argument("--repeat", type=int, default=3, help="timed runs for bench (default 3)")


def build_parser():
    parser = argparse.ArgumentParser(prog="polyproj", description=(
        "Vertices of 2-D projections of H-polytopes by support-function sampling."))
    sub = parser.add_subparsers(dest="command", required=True)
    for name, text in [("enumerate", "enumerate the shadow's vertices"),
                       ("oracle", "brute-force shadow vertices (small inputs only)"),
                       ("check", "compare the enumerator against the oracle"),
                       ("bench", "time enumerations"),
                       ("plot", "draw the shadow and its support curve")]:
        _common(sub.add_parser(name, help=text))
    gen = sub.add_parser("gen", help="write a generated polytope as .ine")
    gen.add_argument("family", choices=("hypercube", "cross", "perm", "random"))
    gen.add_argument("--dim", type=int, default=2)
    gen.add_argument("--order", type=int, default=4)
    gen.add_argument("--m", type=int, default=6)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--half-width", type=float, default=1.0)
    gen.add_argument("--output", metavar="PATH")
    return parser


def _single_input(args):
    if not args.input:
        raise UsageError("--input is required")
    if len(args.input) > 1:
        raise UsageError(f"{args.command} takes a single --input")
    return args.input[0]


def _load(path):
    try:
        return formats.load_ine(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _plane(args, p):
    d1, d2 = args.dims
    try:
        return PlaneSpec(d1, d2, p.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _params(args):
    try:
        return EnumerationParams(epsilon_deg=args.eps, point_tol=args.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _emit(text, path):
    if path:
        Path(path).write_text(text)
    else:
        sys.stdout.write(text)


def _diag(msg):
    print(msg, file=sys.stderr)


def oracle_vertex_list(p, plane) -> ProjectedVertexList:
    """Oracle shadow in the enumerator's layout: CCW from the vertex supported at 0 degrees."""
    hull = oracle.oracle_projection_vertices(p, plane)
    starts = oracle.normal_cone_starts(hull)
    k = len(hull)
    first = 0
    for i in range(k):
        width = (starts[(i + 1) % k] - starts[i]) % 360.0
        if k == 1 or (-starts[i]) % 360.0 < width:
            first = i
            break
    order = [(first + j) % k for j in range(k)]
    thetas = [0.0] + [float(starts[i]) for i in order[1:]]
    return ProjectedVertexList(tuple(zip(thetas, hull[order])), plane)


def cmd_enumerate(args):
    p = _load(_single_input(args))
    plane = _plane(args, p)
    report = enumerate_vertices(p, plane, _params(args))
    _emit(formats.write_vertices(report, args.format or "csv"), args.output)
    _diag(f"vertices={len(report.result)} lp_calls={report.lp_calls} "
          f"binsearch_iters={report.binsearch_iters} wall_ms={report.wall_ms:.3f}")
    return EXIT_OK


def cmd_oracle(args):
    p = _load(_single_input(args))
    result = oracle_vertex_list(p, _plane(args, p))
    _emit(formats.write_vertices(result, args.format or "csv"), args.output)
    _diag(f"vertices={len(result)}")
    return EXIT_OK


def cmd_check(args):
    p = _load(_single_input(args))
    plane = _plane(args, p)
    report = enumerate_vertices(p, plane, _params(args))
    expected = oracle.oracle_projection_vertices(p, plane)
    got = report.result.points
    ok, dist = oracle.match_cyclic(got, expected, MATCH_TOL)
    _diag(f"enumerator={len(got)} oracle={len(expected)} max_vertex_distance={dist:.3g}")
    if ok:
        return EXIT_OK
    _diag("enumerator vertices:\n" + np.array2string(got, precision=12))
    _diag("oracle vertices:\n" + np.array2string(expected, precision=12))
    return EXIT_MISMATCH


def cmd_bench(args):
    if not args.input:
        raise UsageError("--input is required")
    if args.repeat < 1:
        raise UsageError("--repeat must be >= 1")
    params = _params(args)
    rows = []
    for path in args.input:
        p = _load(path)
        plane = _plane(args, p)
        enumerate_vertices(p, plane, params)  # warm-up, not timed
        runs = [enumerate_vertices(p, plane, params) for _ in range(args.repeat)]
        times = [r.wall_ms for r in runs]
        rows.append({
            "name": Path(path).stem,
            "m": p.m,
            "n": p.n,
            "V": len(runs[0].result),
            "lp_calls": runs[0].lp_calls,
            "wall_ms_mean": statistics.fmean(times),
            "wall_ms_stddev": statistics.stdev(times) if len(times) > 1 else 0.0,
        })
        _diag(f"{rows[-1]['name']}: V={rows[-1]['V']} lp_calls={rows[-1]['lp_calls']} "
              f"wall_ms={rows[-1]['wall_ms_mean']:.3f}")
    _emit(json.dumps(rows, indent=2) + "\n", args.output)
    if args.output:
        figure = Path(args.output).with_suffix(".png")
        plotting.render_bench(figure, rows)
        _diag(f"figure: {figure}")
    return EXIT_OK


def cmd_gen(args):
    family = args.family
    try:
        p, name = _generate(args)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    _emit(formats.write_ine(p, name), args.output)
    return EXIT_OK


def _generate(args):
    family = args.family
    if family == "hypercube":
        p, name = make_hypercube(args.dim, args.half_width), f"hypercube{args.dim}"
    elif family == "cross":
        p, name = make_cross_polytope(args.dim), f"cross{args.dim}"
    elif family == "perm":
        p, name = make_permutahedron(args.order), f"perm{args.order}"
    else:
        p, name = make_random_bounded(args.dim, args.m, args.seed), \
            f"random_n{args.dim}_m{args.m}_s{args.seed}"
    return p, name


def cmd_plot(args):
    p = _load(_single_input(args))
    plane = _plane(args, p)
    if args.samples < 1:
        raise UsageError("--samples must be >= 1")
    report = enumerate_vertices(p, plane, _params(args))
    points = report.result.points
    thetas, rhos = support_curve(p, plane, args.samples)
    fmt = args.format or "svg"
    if fmt == "json":
        raise UsageError("plot writes svg or csv")
    primary = plotting.polygon_svg(points) if fmt == "svg" else plotting.curve_csv(thetas, rhos)
    _emit(primary, args.output)
    if args.output:
        out = Path(args.output)
        if fmt == "svg":
            curve_path = out.with_suffix(".curve.csv")
            curve_path.write_text(plotting.curve_csv(thetas, rhos))
            _diag(f"curve: {curve_path}")
        figure = out.with_suffix(".png")
        plotting.render_figure(figure, points, thetas, rhos, report.result.thetas[1:],
                               args.dims, title=out.stem)
        _diag(f"figure: {figure}")
    _diag(f"vertices={len(points)} lp_calls={report.lp_calls} wall_ms={report.wall_ms:.3f}")
    return EXIT_OK


COMMANDS = {
    "enumerate": cmd_enumerate,
    "oracle": cmd_oracle,
    "check": cmd_check,
    "bench": cmd_bench,
    "gen": cmd_gen,
    "plot": cmd_plot,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (ParseError, UsageError) as exc:
        _diag(f"error: {exc}")
        return EXIT_INPUT
    except (ProjectionUnbounded, EmptyPolytope, UnboundedOrEmpty) as exc:
        _diag(f"error: {exc}")
        return EXIT_UNBOUNDED
    except VertexBudgetExceeded as exc:
        _diag(f"error: {exc}")
        return EXIT_BUDGET
    except (TooManyBases, DimensionTooLarge) as exc:
        _diag(f"error: {exc}")
        return EXIT_INPUT
    except PolyprojError as exc:
        _diag(f"error: {exc}")
        return 1


if __name__ == "__main__":
    sys.exit(main())
