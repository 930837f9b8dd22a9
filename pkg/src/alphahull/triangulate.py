"""Delaunay triangulation and alpha shapes parameterised by a disk radius.

The triangulation is built by a lexicographic sweep followed by Lawson edge
flips.  Co-circular quadrilaterals keep the diagonal that contains the
lexicographically smallest of the four points, which is the tie rule a
symbolic lifting perturbation would produce, so flipping always terminates.

Two alpha constructs live here.  :func:`alpha_edges` applies the empty-disk
edge criterion directly; :func:`alpha_region` keeps triangles whose
circumradius is at most ``r`` and is what areas and containment use.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Dict, List, Sequence, Tuple

from .geom import (
    DegenerateInput,
    Point,
    all_collinear,
    incircle_sign,
    orient_sign,
    point_set,
    polygon_contains_polygon,
    signed_area,
)

INFINITY = math.inf

Edge = Tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Triangulation:
    points: Tuple[Point, ...]
    triangles: Tuple[Tuple[int, int, int], ...]
    adjacency: Dict[Edge, Tuple[int, ...]] = field(repr=False)

    @property
    def edges(self) -> List[Edge]:
        return sorted(self.adjacency)

    def hull_edges(self) -> set:
        return {e for e, ts in self.adjacency.items() if len(ts) == 1}

    def circumradius(self, t: int) -> float:
        a, b, c = (self.points[i] for i in self.triangles[t])
        return circumradius(a, b, c)


@dataclass(frozen=True)
class AlphaShape:
    radius: float
    triangles: Tuple[int, ...]
    loops: Tuple[Tuple[int, ...], ...]
    connected: bool
    area: float

    def loop_coords(self, points: Sequence[Point]) -> List[Tuple[Point, ...]]:
        return [tuple(points[i] for i in loop) for loop in self.loops]


def circumradius(a: Point, b: Point, c: Point) -> float:
    la = math.dist(b, c)
    lb = math.dist(a, c)
    lc = math.dist(a, b)
    twice_area = abs((b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]))
    if twice_area == 0.0:
        return INFINITY
    return la * lb * lc / (2.0 * twice_area)


def circumcenter(a: Point, b: Point, c: Point) -> Point:
    bx, by = b[0] - a[0], b[1] - a[1]
    cx, cy = c[0] - a[0], c[1] - a[1]
    d = 2.0 * (bx * cy - by * cx)
    b2, c2 = bx * bx + by * by, cx * cx + cy * cy
    return (a[0] + (cy * b2 - by * c2) / d, a[1] + (bx * c2 - cx * b2) / d)


# ---------------------------------------------------------------------------
# Construction
# ---------------------------------------------------------------------------

def _sweep_triangulation(pts: Sequence[Point]) -> List[List[int]]:
    order = sorted(range(len(pts)), key=lambda i: pts[i])
    # leading collinear run
    k = 2
    while orient_sign(pts[order[0]], pts[order[1]], pts[order[k]]) == 0:
        k += 1
    apex = order[k]
    run = order[:k]
    tris = []
    if orient_sign(pts[run[0]], pts[run[-1]], pts[apex]) > 0:
        for u, v in zip(run, run[1:]):
            tris.append([u, v, apex])
        hull = run + [apex]
    else:
        for u, v in zip(run, run[1:]):
            tris.append([v, u, apex])
        hull = [apex] + run[::-1]
    # hull is CCW; insert the remaining points, each strictly outside
    for p in order[k + 1:]:
        m = len(hull)
        visible = [orient_sign(pts[hull[i]], pts[hull[(i + 1) % m]], pts[p]) < 0 for i in range(m)]
        start = next(i for i in range(m) if visible[i] and not visible[i - 1])
        i = start
        while visible[i % m]:
            u, v = hull[i % m], hull[(i + 1) % m]
            tris.append([v, u, p])
            i += 1
        end = i % m
        # vertices strictly between start+1 and end leave the hull
        if end > start:
            hull = hull[:start + 1] + [p] + hull[end:]
        else:
            hull = hull[end:start + 1] + [p]
    return tris


def _prefer_new_diagonal(pts, u, v, w1, w2) -> bool:
    """Should diagonal ``uv`` of quad (u, w2, v, w1) be flipped to ``w1w2``?"""
    s = incircle_sign(pts[u], pts[v], pts[w1], pts[w2])
    if s != 0:
        return s > 0
    return min(pts[w1], pts[w2]) < min(pts[u], pts[v])


def delaunay(points: Sequence[Sequence[float]]) -> Triangulation:
    """Delaunay triangulation of a point set (deduplicated first)."""
    pts = point_set(points)
    if len(pts) < 3 or all_collinear(pts):
        raise DegenerateInput("Delaunay needs at least 3 non-collinear points")
    tris = _sweep_triangulation(pts)
    owner: Dict[Edge, int] = {}
    for t, (a, b, c) in enumerate(tris):
        owner[(a, b)] = t
        owner[(b, c)] = t
        owner[(c, a)] = t

    def third(t, u, v):
        a, b, c = tris[t]
        for x, y, z in ((a, b, c), (b, c, a), (c, a, b)):
            if x == u and y == v:
                return z
        raise AssertionError("edge not in triangle")

    stack = [e for e in owner if e[0] < e[1] and (e[1], e[0]) in owner]
    while stack:
        u, v = stack.pop()
        if (u, v) not in owner or (v, u) not in owner:
            continue
        t1, t2 = owner[(u, v)], owner[(v, u)]
        w1, w2 = third(t1, u, v), third(t2, v, u)
        if not _prefer_new_diagonal(pts, u, v, w1, w2):
            continue
        for e in ((u, v), (v, u), (v, w1), (w1, u), (u, w2), (w2, v)):
            owner.pop(e, None)
        tris[t1] = [u, w2, w1]
        tris[t2] = [w2, v, w1]
        for t in (t1, t2):
            a, b, c = tris[t]
            owner[(a, b)] = t
            owner[(b, c)] = t
            owner[(c, a)] = t
        stack.extend([(u, w2), (w2, v), (v, w1), (w1, u)])

    canon = sorted(tuple(_rotate_min(t)) for t in tris)
    adjacency: Dict[Edge, list] = {}
    for ti, (a, b, c) in enumerate(canon):
        for u, v in ((a, b), (b, c), (c, a)):
            adjacency.setdefault(_edge(u, v), []).append(ti)
    return Triangulation(pts, tuple(canon), {e: tuple(ts) for e, ts in adjacency.items()})


def _rotate_min(t):
    k = t.index(min(t))
    return t[k:] + t[:k]


# ---------------------------------------------------------------------------
# Alpha edges (disk criterion)
# ---------------------------------------------------------------------------

def _third_vertex(tri, u, v):
    return next(w for w in tri if w != u and w != v)


def alpha_edges(T: Triangulation, r: float) -> set:
    """Edges ``(p, q)`` with an empty disk of radius ``r`` through both ends.

    A disk through ``p`` and ``q`` is empty exactly when its centre lies on
    the Voronoi edge dual to ``pq``: the bisector interval between the
    circumcentres of the incident triangles, or a ray for hull edges.
    """
    pts = T.points
    out = set()
    for (u, v), tris in T.adjacency.items():
        p, q = pts[u], pts[v]
        length = math.dist(p, q)
        if length > 2.0 * r:
            continue
        mx, my = (p[0] + q[0]) / 2.0, (p[1] + q[1]) / 2.0
        nx, ny = -(q[1] - p[1]) / length, (q[0] - p[0]) / length
        lo, hi = -INFINITY, INFINITY
        for t in tris:
            tri = T.triangles[t]
            w = _third_vertex(tri, u, v)
            cx, cy = circumcenter(p, q, pts[w])
            s = (cx - mx) * nx + (cy - my) * ny
            if orient_sign(p, q, pts[w]) > 0:
                hi = s
            else:
                lo = s
        t = INFINITY if math.isinf(r) else math.sqrt(max(0.0, r * r - (length / 2.0) ** 2))
        if lo <= t <= hi or lo <= -t <= hi:
            out.add((u, v))
    return out


# ---------------------------------------------------------------------------
# Alpha region (triangle filter)
# ---------------------------------------------------------------------------

def _boundary_loops(T: Triangulation, kept: Sequence[int]) -> List[Tuple[int, ...]]:
    pts = T.points
    directed = set()
    for t in kept:
        a, b, c = T.triangles[t]
        directed.update(((a, b), (b, c), (c, a)))
    boundary = sorted(e for e in directed if (e[1], e[0]) not in directed)
    outgoing: Dict[int, list] = {}
    for u, v in boundary:
        outgoing.setdefault(u, []).append(v)

    def cw_angle_from(v, u, w):
        # clockwise sweep from direction v->u to v->w, in (0, 2pi]
        a1 = math.atan2(pts[u][1] - pts[v][1], pts[u][0] - pts[v][0])
        a2 = math.atan2(pts[w][1] - pts[v][1], pts[w][0] - pts[v][0])
        d = (a1 - a2) % (2.0 * math.pi)
        return d if d > 0 else 2.0 * math.pi

    unused = set(boundary)
    loops = []
    for start in boundary:
        if start not in unused:
            continue
        loop = []
        u, v = start
        unused.discard(start)
        while True:
            loop.append(u)
            cands = [w for w in outgoing[v] if (v, w) in unused or (v, w) == start]
            w = min(cands, key=lambda w: cw_angle_from(v, u, w))
            if (v, w) == start:
                break
            unused.discard((v, w))
            u, v = v, w
        loops.append(tuple(loop))
    return loops


def _components(T: Triangulation, kept: Sequence[int]) -> int:
    kept_set = set(kept)
    parent = {t: t for t in kept}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for ts in T.adjacency.values():
        if len(ts) == 2 and ts[0] in kept_set and ts[1] in kept_set:
            ra, rb = find(ts[0]), find(ts[1])
            if ra != rb:
                parent[ra] = rb
    return len({find(t) for t in kept})


def alpha_region(T: Triangulation, r: float) -> AlphaShape:
    """Union of triangles with circumradius at most ``r``."""
    kept = tuple(t for t in range(len(T.triangles)) if T.circumradius(t) <= r)
    if not kept:
        return AlphaShape(r, (), (), False, 0.0)
    loops = _boundary_loops(T, kept)
    area = sum(signed_area([T.points[i] for i in loop]) for loop in loops)
    connected = len(loops) == 1 and _components(T, kept) == 1
    return AlphaShape(r, kept, tuple(loops), connected, area)


def candidate_radii(T: Triangulation) -> List[float]:
    return sorted({T.circumradius(t) for t in range(len(T.triangles))}) + [INFINITY]


def shape_contains_polygon(T: Triangulation, shape: AlphaShape, target: Sequence[Point]) -> bool:
    if not shape.connected:
        return False
    return polygon_contains_polygon(shape.loop_coords(T.points)[0], target)


def best_containing_alpha(T: Triangulation, target: Sequence[Point]) -> Tuple[float, AlphaShape]:
    """Minimum-area connected alpha region that contains ``target``.

    Scans every distinct circumradius plus infinity; the region only changes
    at those values, so the scan is exhaustive.  Area ties go to the larger
    radius.  The infinite radius gives the convex hull, which always
    qualifies.
    """
    best = None
    for r in candidate_radii(T):
        shape = alpha_region(T, r)
        if not shape_contains_polygon(T, shape, target):
            continue
        if best is None or shape.area <= best[1].area + 1e-9:
            if best is not None and shape.area >= best[1].area - 1e-9:
                best = (r, shape) if r >= best[0] else best
            else:
                best = (r, shape)
    assert best is not None, "convex hull region must contain the target"
    return best
