"""Command-line interface.

Exit status is 0 on success, 1 on a domain error (reported on stderr with
its error name) and 2 on a usage error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import bench, pointio
from .geom import GeometryError, convex_hull, point_set, signed_area
from .hull import DEFAULT_CAP, AreaBudget, ach, ach_exact, ach_heuristic, certificate_failures
from .render import LOOPS, PALETTE, POINTS, POLYGON, Scene, render_svg
from .triangulate import alpha_region, best_containing_alpha, delaunay

log = logging.getLogger("alphahull")


class CertificateRejected(GeometryError):
    code = "CERTIFICATE_REJECTED"


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        pointio.write_text(out, text)
    else:
        sys.stdout.write(text)


def _alpha(s: str) -> float:
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if not 0.0 <= v <= 180.0:
        raise argparse.ArgumentTypeError(f"alpha must be in [0, 180] degrees, got {s}")
    return v


def _positive(s: str) -> float:
    try:
        v = float(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {s!r}") from None
    if not v > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {s}")
    return v


def _count(s: str) -> int:
    try:
        v = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError(f"must be at least 1, got {s}")
    return v


def _vertex_count(s: str):
    """``N`` or an inclusive range ``LO-HI``."""
    try:
        if "-" in s:
            lo, hi = (int(x) for x in s.split("-", 1))
        else:
            lo = hi = int(s)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected N or LO-HI, got {s!r}") from None
    if lo < 3 or hi < lo:
        raise argparse.ArgumentTypeError(f"vertex counts must satisfy 3 <= LO <= HI, got {s!r}")
    return lo if lo == hi else (lo, hi)


def _grid(s: str) -> List[float]:
    try:
        return [_alpha(x) for x in s.split(",") if x.strip()]
    except argparse.ArgumentTypeError as exc:
        raise argparse.ArgumentTypeError(f"bad grid {s!r}: {exc}") from None


def _seed(s: str) -> int:
    try:
        v = int(s, 0)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {s!r}") from None
    if not 0 <= v < 1 << 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------

def cmd_chull(args) -> int:
    hull = convex_hull(pointio.read_points(args.points))
    _emit(pointio.format_points(hull), args.out)
    return 0


def cmd_ashape(args) -> int:
    T = delaunay(pointio.read_points(args.points))
    if args.auto:
        targets = pointio.read_polygons(args.target)
        if len(targets) != 1:
            raise GeometryError(f"{args.target}: expected exactly one polygon")
        radius, shape = best_containing_alpha(T, targets[0])
    else:
        radius = args.radius
        shape = alpha_region(T, radius)
    loops = shape.loop_coords(T.points)
    header = [f"radius {radius!r}", f"area {shape.area!r}", f"connected {str(shape.connected).lower()}"]
    comments = [header] + [[] for _ in loops[1:]]
    text = pointio.format_polygons(loops, comments) if loops else pointio.format_points([], header)
    _emit(text, args.out)
    return 0


def cmd_ahull(args) -> int:
    pts = pointio.read_points(args.points)
    if args.method == "exact":
        res = ach_exact(pts, args.alpha, args.cap)
    elif args.method == "heuristic":
        res = ach_heuristic(pts, args.alpha)
    else:
        res = ach(pts, args.alpha, args.cap)
    print(f"alpha {res.alpha!r} area {res.area!r} method {res.method}", file=sys.stderr)
    _emit(pointio.format_points(res.polygon), args.out)
    return 0


def cmd_verify(args) -> int:
    pts = pointio.read_points(args.points)
    polys = pointio.read_polygons(args.polygon)
    if len(polys) != 1:
        raise GeometryError(f"{args.polygon}: expected exactly one polygon")
    reasons = certificate_failures(pts, polys[0], args.alpha, AreaBudget(args.area, args.tol))
    if reasons:
        raise CertificateRejected("; ".join(reasons))
    print("accepted")
    return 0


def cmd_gen(args) -> int:
    polys, comments = [], []
    for k, used, poly in bench.corpus(args.count, args.n, args.seed):
        polys.append(poly)
        comments.append([f"polygon {k} seed {used} area {signed_area(poly)!r}"])
    if args.out_dir:
        d = Path(args.out_dir)
        d.mkdir(parents=True, exist_ok=True)
        for k, (poly, c) in enumerate(zip(polys, comments)):
            pointio.write_text(d / f"polygon_{k:04d}.txt", pointio.format_points(poly, c))
    else:
        sys.stdout.write(pointio.format_polygons(polys, comments))
    return 0


def cmd_bench(args) -> int:
    report = bench.run_comparison(args.count, args.n, args.seed, args.grid, args.cap)
    out = Path(args.out)
    pointio.write_text(out, bench.report_csv(report))
    if args.plot:
        from .plotting import plot_report
        plot_report(report, out.with_suffix(".png"))
    avg = report.averages
    print(f"{len(report.rows)} polygons; mean error chull {avg['chull_err']:.6f} "
          f"ashape {avg['ashape_err']:.6f} ahull {avg['ahull_err']:.6f}; "
          f"ahull vs ashape < {report.count_better} = {report.count_equal} > {report.count_worse}",
          file=sys.stderr)
    return 0


def _layer_spec(s: str):
    parts = s.split(":")
    if len(parts) not in (2, 3) or parts[0] not in (POINTS, POLYGON, LOOPS) or not parts[1]:
        raise argparse.ArgumentTypeError(
            f"layer spec must be KIND:PATH[:COLOR] with KIND in points|polygon|loops, got {s!r}")
    return parts[0], parts[1], parts[2] if len(parts) == 3 else None


def cmd_render(args) -> int:
    scene = Scene()
    for k, (kind, path, color) in enumerate(args.layers):
        color = color or PALETTE[k % len(PALETTE)]
        label = Path(path).stem
        if kind == POINTS:
            scene.add_points(point_set(pointio.read_points(path)), stroke=color, label=label)
        elif kind == POLYGON:
            for poly in pointio.read_polygons(path):
                scene.add_polygon(poly, stroke=color, fill=color, fill_opacity=args.fill_opacity,
                                  label=label)
        else:
            scene.add_loops(pointio.read_polygons(path), stroke=color, fill=color,
                            fill_opacity=args.fill_opacity, label=label)
    Path(args.out).write_bytes(render_svg(scene))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alphahull", description="Alpha-concave hulls, alpha shapes and convex hulls.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("chull", help="convex hull of a point file")
    s.add_argument("points")
    s.add_argument("--out")
    s.set_defaults(func=cmd_chull)

    s = sub.add_parser("ashape", help="alpha-shape region boundary")
    s.add_argument("points")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--radius", type=_positive, help="disk radius (inf for the convex hull)")
    g.add_argument("--auto", action="store_true", help="smallest connected region covering --target")
    s.add_argument("--target", help="polygon file the region must cover (with --auto)")
    s.add_argument("--out")
    s.set_defaults(func=cmd_ashape)

    s = sub.add_parser("ahull", help="alpha-concave hull")
    s.add_argument("points")
    s.add_argument("--alpha", type=_alpha, required=True, help="degrees in [0, 180]")
    m = s.add_mutually_exclusive_group()
    m.add_argument("--exact", dest="method", action="store_const", const="exact")
    m.add_argument("--heuristic", dest="method", action="store_const", const="heuristic")
    s.add_argument("--cap", type=_count, default=DEFAULT_CAP, help="exact solver point limit")
    s.add_argument("--out")
    s.set_defaults(func=cmd_ahull, method="auto")

    s = sub.add_parser("verify", help="check an alpha-polygon certificate")
    s.add_argument("points")
    s.add_argument("polygon")
    s.add_argument("--alpha", type=_alpha, required=True)
    s.add_argument("--area", type=_positive, required=True, help="area budget")
    s.add_argument("--tol", type=float, default=1e-9)
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("gen", help="generate the scaled random polygon corpus")
    s.add_argument("--n", type=_vertex_count, required=True, help="vertex count N or range LO-HI")
    s.add_argument("--seed", type=_seed, required=True)
    s.add_argument("--count", type=_count, default=1)
    s.add_argument("--out-dir")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("bench", help="approximation-error comparison to CSV")
    s.add_argument("--count", type=_count, required=True)
    s.add_argument("--n", type=_vertex_count, required=True, help="vertex count N or range LO-HI")
    s.add_argument("--seed", type=_seed, required=True)
    s.add_argument("--grid", type=_grid, default=list(bench.DEFAULT_GRID), help="comma-separated alphas")
    s.add_argument("--cap", type=_count, default=DEFAULT_CAP)
    s.add_argument("--out", required=True)
    s.add_argument("--plot", action="store_true", help="also write a PNG figure next to the CSV")
    s.set_defaults(func=cmd_bench)

    s = sub.add_parser("render", help="draw point/polygon files as SVG")
    s.add_argument("--out", required=True)
    s.add_argument("--fill-opacity", type=float, default=0.1)
    s.add_argument("layers", nargs="+", type=_layer_spec, metavar="KIND:PATH[:COLOR]")
    s.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    if args.command == "ashape" and args.auto and not args.target:
        parser.error("ashape --auto requires --target")
    if args.command == "bench" and 0.0 not in args.grid:
        parser.error("--grid must include 0 so the convex hull is always a candidate")
    try:
        return args.func(args)
    except GeometryError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
