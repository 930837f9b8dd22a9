"""Approximation-error comparison of convex hull, alpha shape and alpha-concave hull.

Each corpus polygon is approximated three ways, all built on its vertex
set: the convex hull, the smallest connected alpha region that covers the
polygon, and the smallest covering alpha-concave hull over an alpha grid.
The error of an approximation is its area minus the polygon's own area.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, TextIO, Tuple, Union

from .geom import GeometryError, Point, convex_hull, polygon_contains_polygon, signed_area
from .hull import DEFAULT_CAP, HullResult, ach_exact_sweep, ach_heuristic, check_alpha
from .polygen import GenConfig, derive_seed, generate_polygon, scale_to_unit
from .triangulate import best_containing_alpha, delaunay

DEFAULT_GRID = tuple(float(a) for a in range(0, 181, 10))
AREA_TOLERANCE = 1e-9
EQUAL_TOLERANCE = 1e-9

CSV_HEADER = "id,polygon_area,chull_area,ashape_area,ahull_area,chull_err,ashape_err,ahull_err"
COLUMNS = CSV_HEADER.split(",")[1:]


class NegativeError(GeometryError):
    code = "NEGATIVE_ERROR"


def approx_error(approx_area: float, polygon_area: float, tol: float = AREA_TOLERANCE) -> float:
    if approx_area < polygon_area - tol:
        raise NegativeError(f"approximation area {approx_area!r} below polygon area {polygon_area!r}")
    return approx_area - polygon_area


@dataclass
class ErrorRow:
    id: int
    polygon_area: float
    chull_area: float
    ashape_area: float
    ahull_area: float
    chull_err: float
    ashape_err: float
    ahull_err: float
    # not written to CSV
    n: int = 0
    seed: int = 0
    ahull_alpha: float = 0.0
    ashape_radius: float = math.inf

    def values(self) -> List[float]:
        return [getattr(self, c) for c in COLUMNS]


@dataclass
class ComparisonReport:
    rows: List[ErrorRow]
    count_better: int = 0
    count_equal: int = 0
    count_worse: int = 0
    averages: Dict[str, float] = field(default_factory=dict)
    averages_first5: Dict[str, float] = field(default_factory=dict)


def select_ach_alpha(poly: Sequence[Point], grid: Sequence[float] = DEFAULT_GRID,
                     cap: int = DEFAULT_CAP) -> Tuple[float, HullResult]:
    """Smallest alpha-concave hull of the vertex set that still covers ``poly``.

    A hull of the vertices alone may cut across the polygon, so each grid
    value's hull is kept only if it covers every polygon edge.  Area ties go
    to the larger alpha.  Alpha 0 (the convex hull) always qualifies.
    """
    grid = sorted({check_alpha(a) for a in grid})
    poly = tuple(poly)
    if len(set(poly)) <= cap:
        hulls = ach_exact_sweep(poly, grid, cap)
    else:
        hulls = {a: ach_heuristic(poly, a) for a in grid}
    best = None
    for a in grid:
        h = hulls[a]
        if not polygon_contains_polygon(h.polygon, poly):
            continue
        if best is None or h.area <= best[1].area + AREA_TOLERANCE:
            best = (a, h)
    if best is None:
        raise GeometryError("no grid value produced a covering hull; the grid must include 0")
    return best


def _compare(a: float, b: float) -> int:
    if a < b - EQUAL_TOLERANCE:
        return -1
    if a > b + EQUAL_TOLERANCE:
        return 1
    return 0


def evaluate_polygon(poly: Sequence[Point], grid: Sequence[float] = DEFAULT_GRID,
                     cap: int = DEFAULT_CAP, row_id: int = 0) -> ErrorRow:
    poly = tuple(poly)
    parea = signed_area(poly)
    carea = signed_area(convex_hull(poly))
    radius, shape = best_containing_alpha(delaunay(poly), poly)
    alpha, hull = select_ach_alpha(poly, grid, cap)
    return ErrorRow(
        id=row_id,
        polygon_area=parea,
        chull_area=carea,
        ashape_area=shape.area,
        ahull_area=hull.area,
        chull_err=approx_error(carea, parea),
        ashape_err=approx_error(shape.area, parea),
        ahull_err=approx_error(hull.area, parea),
        n=len(poly),
        ahull_alpha=alpha,
        ashape_radius=radius,
    )


def _polygon_size(n: Union[int, Tuple[int, int]], seed: int) -> int:
    if isinstance(n, int):
        return n
    lo, hi = n
    return lo + seed % (hi - lo + 1)


def corpus(count: int, n: Union[int, Tuple[int, int]], seed: int):
    """Yield ``(id, seed_used, scaled polygon)`` for a deterministic batch."""
    for k in range(count):
        sk = derive_seed(seed, k)
        try:
            poly, used = generate_polygon(GenConfig(_polygon_size(n, sk), sk))
        except GeometryError as exc:
            raise type(exc)(f"polygon {k}: {exc.args[0] if exc.args else ''}") from exc
        yield k, used, scale_to_unit(poly)


def summarize(rows: List[ErrorRow]) -> ComparisonReport:
    report = ComparisonReport(rows=rows)
    for r in rows:
        c = _compare(r.ahull_area, r.ashape_area)
        if c < 0:
            report.count_better += 1
        elif c == 0:
            report.count_equal += 1
        else:
            report.count_worse += 1

    def avg(rs):
        return {c: math.fsum(getattr(r, c) for r in rs) / len(rs) for c in COLUMNS} if rs else {}

    report.averages = avg(rows)
    report.averages_first5 = avg(rows[:5])
    return report


def run_comparison(count: int, n: Union[int, Tuple[int, int]], seed: int,
                   grid: Sequence[float] = DEFAULT_GRID, cap: int = DEFAULT_CAP) -> ComparisonReport:
    if count < 1:
        raise ValueError("count must be at least 1")
    rows = []
    for k, used, poly in corpus(count, n, seed):
        row = evaluate_polygon(poly, grid, cap, row_id=k)
        row.seed = used
        rows.append(row)
    return summarize(rows)


# ---------------------------------------------------------------------------
# CSV
# ---------------------------------------------------------------------------

def _fmt(x: float) -> str:
    return repr(float(x))


def write_csv(report: ComparisonReport, out: TextIO) -> None:
    out.write(CSV_HEADER + "\n")
    for r in report.rows:
        out.write(",".join([str(r.id)] + [_fmt(v) for v in r.values()]) + "\n")
    out.write(f"# rows,{len(report.rows)}\n")
    out.write("# average_all," + ",".join(_fmt(report.averages[c]) for c in COLUMNS) + "\n")
    out.write("# average_first5," + ",".join(_fmt(report.averages_first5[c]) for c in COLUMNS) + "\n")
    out.write(f"# count_better,{report.count_better}\n")
    out.write(f"# count_equal,{report.count_equal}\n")
    out.write(f"# count_worse,{report.count_worse}\n")


def report_csv(report: ComparisonReport) -> str:
    buf = io.StringIO()
    write_csv(report, buf)
    return buf.getvalue()


def read_csv(text: str) -> Tuple[List[Dict[str, float]], Dict[str, List[str]]]:
    """Parse a report back into row dicts and the ``#`` summary fields."""
    lines = text.splitlines()
    if not lines or lines[0] != CSV_HEADER:
        raise ValueError("missing or wrong CSV header")
    rows, summary = [], {}
    for line in lines[1:]:
        if line.startswith("#"):
            key, *vals = line[1:].strip().split(",")
            summary[key] = vals
            continue
        fields = line.split(",")
        row = {"id": int(fields[0])}
        row.update({c: float(v) for c, v in zip(COLUMNS, fields[1:])})
        rows.append(row)
    return rows, summary
