"""Planar primitives and the polygon data model.

Points are plain ``(x, y)`` float tuples and polygons are tuples of points
in boundary order.  Every degeneracy decision (collinearity, boundary
contact, reflexness) is routed through :func:`orient_sign`, which filters
with a floating-point error bound and falls back to exact rational
arithmetic when the filter cannot certify the sign.
"""

from __future__ import annotations

import math
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

import numpy as np

Point = Tuple[float, float]
Polygon = Tuple[Point, ...]

DEDUP_TOLERANCE = 1e-12

_EPS = 2.0 ** -53
_CCW_ERRBOUND = (3.0 + 16.0 * _EPS) * _EPS
_ICC_ERRBOUND = (10.0 + 96.0 * _EPS) * _EPS


class GeometryError(ValueError):
    """Base class for domain errors; ``code`` is the contract error name."""

    code = "GEOMETRY_ERROR"

    def __str__(self):
        msg = super().__str__()
        return f"{self.code}: {msg}" if msg else self.code


class DegenerateInput(GeometryError):
    code = "DEGENERATE_INPUT"


class TooLarge(GeometryError):
    code = "TOO_LARGE"


class InvalidInput(GeometryError):
    code = "INVALID_INPUT"


class Orientation(IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


class Location(IntEnum):
    OUTSIDE = -1
    ON_BOUNDARY = 0
    INSIDE = 1


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

def _orient_exact(p, q, r) -> int:
    px, py = Fraction(p[0]), Fraction(p[1])
    det = (Fraction(q[0]) - px) * (Fraction(r[1]) - py) - (Fraction(q[1]) - py) * (Fraction(r[0]) - px)
    return (det > 0) - (det < 0)


def orient_sign(p: Point, q: Point, r: Point) -> int:
    """Sign of the doubled signed area of triangle ``pqr`` (+1 left turn)."""
    detleft = (p[0] - r[0]) * (q[1] - r[1])
    detright = (p[1] - r[1]) * (q[0] - r[0])
    det = detleft - detright
    # products without a common strict sign: the float subtraction is sign-exact
    if not ((detleft > 0 and detright > 0) or (detleft < 0 and detright < 0)):
        return (det > 0) - (det < 0)
    errbound = _CCW_ERRBOUND * (abs(detleft) + abs(detright))
    if det > errbound:
        return 1
    if -det > errbound:
        return -1
    return _orient_exact(p, q, r)


def orient(p: Point, q: Point, r: Point) -> Orientation:
    return Orientation(orient_sign(p, q, r))


def orient_many(ax, ay, bx, by, cx, cy) -> np.ndarray:
    """Vectorised :func:`orient_sign` over coordinate arrays."""
    detleft = (ax - cx) * (by - cy)
    detright = np.asarray((ay - cy) * (bx - cx))
    det = np.asarray(detleft - detright)
    errbound = _CCW_ERRBOUND * (np.abs(detleft) + np.abs(detright))
    out = np.zeros(det.shape, dtype=np.int8)
    out[det > errbound] = 1
    out[-det > errbound] = -1
    certain = ~(((detleft > 0) & (detright > 0)) | ((detleft < 0) & (detright < 0)))
    out[certain] = np.sign(det[certain])
    unsure = np.flatnonzero((np.abs(det) <= errbound) & ~certain)
    if unsure.size:
        flat = out.reshape(-1)
        arrs = [np.broadcast_to(a, det.shape).reshape(-1) for a in (ax, ay, bx, by, cx, cy)]
        for k in unsure:
            flat[k] = _orient_exact((arrs[0][k], arrs[1][k]), (arrs[2][k], arrs[3][k]),
                                    (arrs[4][k], arrs[5][k]))
    return out


def _incircle_exact(a, b, c, d) -> int:
    fd = (Fraction(d[0]), Fraction(d[1]))
    rows = []
    for p in (a, b, c):
        x = Fraction(p[0]) - fd[0]
        y = Fraction(p[1]) - fd[1]
        rows.append((x, y, x * x + y * y))
    (ax, ay, al), (bx, by, bl), (cx, cy, cl) = rows
    det = (al * (bx * cy - cx * by)
           + bl * (cx * ay - ax * cy)
           + cl * (ax * by - bx * ay))
    return (det > 0) - (det < 0)


def incircle_sign(a: Point, b: Point, c: Point, d: Point) -> int:
    """+1 if ``d`` lies inside the circle through CCW triangle ``abc``, 0 on it."""
    adx, ady = a[0] - d[0], a[1] - d[1]
    bdx, bdy = b[0] - d[0], b[1] - d[1]
    cdx, cdy = c[0] - d[0], c[1] - d[1]
    bdxcdy, cdxbdy = bdx * cdy, cdx * bdy
    cdxady, adxcdy = cdx * ady, adx * cdy
    adxbdy, bdxady = adx * bdy, bdx * ady
    alift = adx * adx + ady * ady
    blift = bdx * bdx + bdy * bdy
    clift = cdx * cdx + cdy * cdy
    det = (alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy)
           + clift * (adxbdy - bdxady))
    permanent = ((abs(bdxcdy) + abs(cdxbdy)) * alift
                 + (abs(cdxady) + abs(adxcdy)) * blift
                 + (abs(adxbdy) + abs(bdxady)) * clift)
    errbound = _ICC_ERRBOUND * permanent
    if det > errbound:
        return 1
    if -det > errbound:
        return -1
    return _incircle_exact(a, b, c, d)


def _on_closed_segment(a: Point, b: Point, c: Point) -> bool:
    """Assumes ``c`` is collinear with ``ab``."""
    return (min(a[0], b[0]) <= c[0] <= max(a[0], b[0])
            and min(a[1], b[1]) <= c[1] <= max(a[1], b[1]))


def on_segment(a: Point, b: Point, c: Point) -> bool:
    """True iff ``c`` lies on the closed segment ``ab``."""
    return orient_sign(a, b, c) == 0 and _on_closed_segment(a, b, c)


def segments_intersect(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Closed-segment intersection test (touching counts)."""
    d1 = orient_sign(q1, q2, p1)
    d2 = orient_sign(q1, q2, p2)
    d3 = orient_sign(p1, p2, q1)
    d4 = orient_sign(p1, p2, q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    return ((d1 == 0 and _on_closed_segment(q1, q2, p1))
            or (d2 == 0 and _on_closed_segment(q1, q2, p2))
            or (d3 == 0 and _on_closed_segment(p1, p2, q1))
            or (d4 == 0 and _on_closed_segment(p1, p2, q2)))


def segments_cross_properly(p1: Point, p2: Point, q1: Point, q2: Point) -> bool:
    """Interiors cross at a single point that is an endpoint of neither."""
    return (orient_sign(q1, q2, p1) * orient_sign(q1, q2, p2) < 0
            and orient_sign(p1, p2, q1) * orient_sign(p1, p2, q2) < 0)


def adjacent_overlap(a: Point, b: Point, c: Point) -> bool:
    """Edges ``ab`` and ``bc`` overlap beyond their shared endpoint ``b``."""
    if orient_sign(a, b, c) != 0:
        return False
    return (a[0] - b[0]) * (c[0] - b[0]) + (a[1] - b[1]) * (c[1] - b[1]) > 0


# ---------------------------------------------------------------------------
# Point sets
# ---------------------------------------------------------------------------

def point_set(points: Iterable[Sequence[float]], tol: float = DEDUP_TOLERANCE) -> Tuple[Point, ...]:
    """Validate and deduplicate points, keeping first occurrences in order."""
    pts = []
    for p in points:
        if len(p) != 2:
            raise InvalidInput(f"point must have two coordinates, got {p!r}")
        x, y = float(p[0]), float(p[1])
        if not (math.isfinite(x) and math.isfinite(y)):
            raise InvalidInput(f"non-finite coordinate in {p!r}")
        pts.append((x, y))
    if not pts:
        return ()
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    drop = set()
    for k, i in enumerate(order):
        for j in order[k + 1:]:
            if pts[j][0] - pts[i][0] > tol:
                break
            if abs(pts[j][1] - pts[i][1]) <= tol:
                drop.add(max(i, j))
    return tuple(p for i, p in enumerate(pts) if i not in drop)


def all_collinear(points: Sequence[Point]) -> bool:
    if len(points) < 3:
        return True
    a = points[0]
    b = next((p for p in points[1:] if p != a), None)
    if b is None:
        return True
    return all(orient_sign(a, b, c) == 0 for c in points)


# ---------------------------------------------------------------------------
# Polygons
# ---------------------------------------------------------------------------

def signed_area(poly: Sequence[Point]) -> float:
    """Half the shoelace sum; positive for counter-clockwise input.

    Coordinates are taken relative to the smallest vertex and the terms are
    summed exactly, so the value does not depend on the starting vertex and
    reversing the cycle negates it exactly.
    """
    n = len(poly)
    if n < 3:
        return 0.0
    ox, oy = min((float(p[0]), float(p[1])) for p in poly)
    rel = [(x - ox, y - oy) for x, y in poly]
    terms = [rel[i - 1][0] * rel[i][1] - rel[i][0] * rel[i - 1][1] for i in range(n)]
    return 0.5 * math.fsum(terms)


def ccw(poly: Sequence[Point]) -> Polygon:
    """Return the vertex cycle in counter-clockwise order."""
    poly = tuple(poly)
    return poly if signed_area(poly) >= 0 else poly[::-1]


def _as_array(poly: Sequence[Point]) -> np.ndarray:
    return np.asarray(poly, dtype=float).reshape(-1, 2)


def _segment_pairs_intersect(p1, p2, q1, q2) -> np.ndarray:
    """Vectorised closed-segment intersection over matching rows of (k, 2) arrays."""
    d1 = orient_many(q1[:, 0], q1[:, 1], q2[:, 0], q2[:, 1], p1[:, 0], p1[:, 1]).astype(int)
    d2 = orient_many(q1[:, 0], q1[:, 1], q2[:, 0], q2[:, 1], p2[:, 0], p2[:, 1]).astype(int)
    d3 = orient_many(p1[:, 0], p1[:, 1], p2[:, 0], p2[:, 1], q1[:, 0], q1[:, 1]).astype(int)
    d4 = orient_many(p1[:, 0], p1[:, 1], p2[:, 0], p2[:, 1], q2[:, 0], q2[:, 1]).astype(int)

    def within(a, b, c):
        return ((np.minimum(a[:, 0], b[:, 0]) <= c[:, 0]) & (c[:, 0] <= np.maximum(a[:, 0], b[:, 0]))
                & (np.minimum(a[:, 1], b[:, 1]) <= c[:, 1]) & (c[:, 1] <= np.maximum(a[:, 1], b[:, 1])))

    hit = (d1 * d2 < 0) & (d3 * d4 < 0)
    hit |= (d1 == 0) & within(q1, q2, p1)
    hit |= (d2 == 0) & within(q1, q2, p2)
    hit |= (d3 == 0) & within(p1, p2, q1)
    hit |= (d4 == 0) & within(p1, p2, q2)
    return hit


def is_simple(poly: Sequence[Point]) -> bool:
    """True iff the closed vertex cycle has no improper edge contacts.

    Non-adjacent edges must be disjoint and adjacent edges may share only
    their common endpoint.  Pairwise test, O(n^2) in the worst case; edge
    pairs with disjoint bounding boxes are discarded before any predicate.
    """
    n = len(poly)
    if n < 3:
        return False
    if len(set(poly)) != n:
        return False
    for i in range(n):
        if adjacent_overlap(poly[i - 1], poly[i], poly[(i + 1) % n]):
            return False
    if n <= 32:
        for i in range(n - 2):
            a, b = poly[i], poly[i + 1]
            for j in range(i + 2, n - 1 if i == 0 else n):
                if segments_intersect(a, b, poly[j], poly[(j + 1) % n]):
                    return False
        return True
    v = _as_array(poly)
    a, b = v, np.roll(v, -1, axis=0)
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    chunk = max(1, 4_000_000 // n)
    for start in range(0, n, chunk):
        rows = np.arange(start, min(n, start + chunk))
        overlap = ((lo[rows, None, 0] <= hi[None, :, 0]) & (lo[None, :, 0] <= hi[rows, None, 0])
                   & (lo[rows, None, 1] <= hi[None, :, 1]) & (lo[None, :, 1] <= hi[rows, None, 1]))
        ii, jj = np.nonzero(overlap)
        ii = ii + rows[0]
        gap = jj - ii
        keep = (gap >= 2) & ~((ii == 0) & (jj == n - 1))
        ii, jj = ii[keep], jj[keep]
        if ii.size and _segment_pairs_intersect(a[ii], b[ii], a[jj], b[jj]).any():
            return False
    return True


def interior_angle(poly: Sequence[Point], i: int) -> float:
    """Interior angle in degrees at vertex ``i`` of a CCW simple polygon."""
    n = len(poly)
    a, b, c = poly[(i - 1) % n], poly[i % n], poly[(i + 1) % n]
    s = orient_sign(a, b, c)
    if s == 0:
        return 180.0
    ux, uy = a[0] - b[0], a[1] - b[1]
    vx, vy = c[0] - b[0], c[1] - b[1]
    theta = math.degrees(math.atan2(abs(ux * vy - uy * vx), ux * vx + uy * vy))
    return theta if s > 0 else 360.0 - theta


def interior_angles(poly: Sequence[Point]) -> list:
    return [interior_angle(poly, i) for i in range(len(poly))]


def contains_point(poly: Sequence[Point], p: Point) -> Location:
    """Classify ``p`` against a simple polygon of either orientation."""
    n = len(poly)
    wn = 0
    for i in range(n):
        a, b = poly[i], poly[(i + 1) % n]
        if a[1] <= p[1]:
            if b[1] > p[1]:
                s = orient_sign(a, b, p)
                if s > 0:
                    wn += 1
                elif s == 0:
                    return Location.ON_BOUNDARY
            elif b[1] == p[1] and on_segment(a, b, p):
                return Location.ON_BOUNDARY
        elif b[1] <= p[1]:
            s = orient_sign(a, b, p)
            if s < 0:
                wn -= 1
            elif s == 0:
                return Location.ON_BOUNDARY
    return Location.INSIDE if wn else Location.OUTSIDE


def classify_points(poly: Sequence[Point], points: Sequence[Point]) -> np.ndarray:
    """Vectorised :func:`contains_point`; returns an int array of Location values."""
    v = _as_array(poly)
    pts = _as_array(points)
    m = len(pts)
    out = np.full(m, int(Location.OUTSIDE), dtype=np.int8)
    if m == 0:
        return out
    a, b = v, np.roll(v, -1, axis=0)
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    px, py = pts[:, 0], pts[:, 1]
    wn = np.zeros(m, dtype=np.int64)
    boundary = np.zeros(m, dtype=bool)
    chunk = max(1, 4_000_000 // max(1, len(v)))
    for start in range(0, m, chunk):
        sl = slice(start, min(m, start + chunk))
        x, y = px[sl, None], py[sl, None]
        inbox = (lo[None, :, 0] <= x) & (x <= hi[None, :, 0]) & (lo[None, :, 1] <= y) & (y <= hi[None, :, 1])
        up = (a[None, :, 1] <= y) & (b[None, :, 1] > y)
        down = (a[None, :, 1] > y) & (b[None, :, 1] <= y)
        pi, ei = np.nonzero(inbox | up | down)
        s = orient_many(a[ei, 0], a[ei, 1], b[ei, 0], b[ei, 1],
                        px[sl][pi], py[sl][pi]).astype(int)
        on = (s == 0) & inbox[pi, ei]
        boundary[start + pi[on]] = True
        contrib = np.where(up[pi, ei] & (s > 0), 1, 0) - np.where(down[pi, ei] & (s < 0), 1, 0)
        np.add.at(wn, start + pi, contrib)
    out[wn != 0] = int(Location.INSIDE)
    out[boundary] = int(Location.ON_BOUNDARY)
    return out


def _heads_inward(outer: Sequence[Point], index: dict, u: Point, v: Point) -> bool:
    """Does segment ``uv`` start into the closed region of CCW ``outer`` at ``u``?"""
    k = index.get(u)
    if k is not None:
        m = len(outer)
        prev, nxt = outer[k - 1], outer[(k + 1) % m]
        turn = orient_sign(prev, u, nxt)
        left_of_next = orient_sign(u, nxt, v)
        right_of_prev = orient_sign(u, prev, v)
        if turn > 0:
            return left_of_next >= 0 and right_of_prev <= 0
        if turn < 0:
            return not (right_of_prev > 0 and left_of_next < 0)
        return left_of_next >= 0
    m = len(outer)
    for i in range(m):
        a, b = outer[i], outer[(i + 1) % m]
        if on_segment(a, b, u):
            return orient_sign(a, b, v) >= 0
    return True


def polygon_contains_polygon(outer: Sequence[Point], inner: Sequence[Point]) -> bool:
    """True iff the region of ``outer`` covers the simple polygon ``inner``.

    Checks that no inner vertex is outside, that no outer edge properly
    crosses an inner edge, and that every inner edge leaves its endpoints
    towards the inside of ``outer``.  The last check rejects chords that run
    outside between two boundary points; together the checks are exact when
    no outer vertex lies in the relative interior of an inner edge, which
    holds whenever the outer vertices are drawn from the inner vertex set.
    """
    inner = tuple(inner)
    outer = ccw(outer)
    n, m = len(inner), len(outer)
    if (classify_points(outer, inner) == Location.OUTSIDE).any():
        return False
    for i in range(m):
        a, b = outer[i], outer[(i + 1) % m]
        for j in range(n):
            if segments_cross_properly(a, b, inner[j], inner[(j + 1) % n]):
                return False
    index = {p: k for k, p in enumerate(outer)}
    for j in range(n):
        u, v = inner[j], inner[(j + 1) % n]
        if not (_heads_inward(outer, index, u, v) and _heads_inward(outer, index, v, u)):
            return False
    return True


# ---------------------------------------------------------------------------
# Convex hull
# ---------------------------------------------------------------------------

def convex_hull_indices(points: Sequence[Point]) -> list:
    """Indices of the strictly convex hull vertices in CCW order.

    Monotone chain; collinear boundary points are excluded.  The cycle starts
    at the lexicographically smallest point.
    """
    if len(set(points)) < 3 or all_collinear(points):
        raise DegenerateInput("need at least 3 non-collinear distinct points")
    order = sorted(range(len(points)), key=lambda i: points[i])
    lower, upper = [], []
    for i in order:
        while len(lower) >= 2 and orient_sign(points[lower[-2]], points[lower[-1]], points[i]) <= 0:
            lower.pop()
        lower.append(i)
    for i in reversed(order):
        while len(upper) >= 2 and orient_sign(points[upper[-2]], points[upper[-1]], points[i]) <= 0:
            upper.pop()
        upper.append(i)
    return lower[:-1] + upper[:-1]


def convex_hull(points: Sequence[Point]) -> Polygon:
    pts = point_set(points)
    return tuple(pts[i] for i in convex_hull_indices(pts))


def rotate_to_min(cycle: Sequence) -> tuple:
    """Rotate a cycle so its smallest element comes first (no reflection)."""
    cycle = tuple(cycle)
    k = cycle.index(min(cycle))
    return cycle[k:] + cycle[:k]


def canonical_cycle(cycle: Sequence[int]) -> tuple:
    """Smallest element first, then the smaller of its two neighbours."""
    c = rotate_to_min(cycle)
    if len(c) > 2 and c[-1] < c[1]:
        c = (c[0],) + c[1:][::-1]
    return c
