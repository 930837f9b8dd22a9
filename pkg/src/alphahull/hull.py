"""Alpha-concave hulls: minimum-area enclosing polygons with bounded reflex angles.

An alpha-polygon is a simple polygon whose interior angles are all at most
``180 + alpha`` degrees.  The alpha-concave hull of a point set is the
smallest-area alpha-polygon containing it, with vertices drawn from the set.
``alpha = 0`` gives the convex hull and ``alpha = 180`` lifts the angle
bound entirely, leaving minimum-area polygonalization.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

import numpy as np

from .geom import (
    DegenerateInput,
    InvalidInput,
    Location,
    Point,
    TooLarge,
    adjacent_overlap,
    all_collinear,
    canonical_cycle,
    ccw,
    classify_points,
    contains_point,
    convex_hull_indices,
    interior_angle,
    is_simple,
    on_segment,
    orient_many,
    orient_sign,
    point_set,
    segments_intersect,
    signed_area,
)

ANGLE_TOLERANCE = 1e-9
AREA_TIE_TOLERANCE = 1e-9
DEFAULT_CAP = 10

EXACT = "EXACT"
HEURISTIC = "HEURISTIC"


@dataclass(frozen=True)
class HullResult:
    polygon: Tuple[Point, ...]
    alpha: float
    area: float
    method: str
    indices: Tuple[int, ...] = ()


@dataclass(frozen=True)
class AreaBudget:
    A: float
    tolerance: float = 1e-9

    def __post_init__(self):
        if not self.A > 0 or self.tolerance < 0:
            raise InvalidInput(f"invalid area budget {self.A!r} (tolerance {self.tolerance!r})")


def check_alpha(alpha: float) -> float:
    alpha = float(alpha)
    if not 0.0 <= alpha <= 180.0:
        raise InvalidInput(f"alpha must lie in [0, 180] degrees, got {alpha!r}")
    return alpha


def turn_angle(a: Point, b: Point, c: Point) -> float:
    """Interior angle at ``b`` for a CCW boundary passing a -> b -> c."""
    return interior_angle((a, b, c), 1)


def is_alpha_polygon(poly: Sequence[Point], alpha: float) -> bool:
    limit = 180.0 + check_alpha(alpha) + ANGLE_TOLERANCE
    poly = ccw(poly)
    return all(interior_angle(poly, i) <= limit for i in range(len(poly)))


# ---------------------------------------------------------------------------
# Certificate verification
# ---------------------------------------------------------------------------

def certificate_failures(P: Iterable[Sequence[float]], poly: Sequence[Point], alpha: float,
                         budget: AreaBudget) -> List[str]:
    """Reasons the certificate is rejected; empty when it is accepted.

    Polygons given clockwise are read as the same region.  Simplicity and
    containment are the O(n^2) steps; everything else is linear.
    """
    pts = point_set(P)
    poly = tuple((float(x), float(y)) for x, y in poly)
    if len(poly) < 3:
        return ["polygon has fewer than 3 vertices"]
    reasons = []
    members = set(pts)
    if any(v not in members for v in poly):
        reasons.append("polygon vertex not in point set")
    if not is_simple(poly):
        return reasons + ["polygon is not simple"]
    poly = ccw(poly)
    if signed_area(poly) <= 0:
        return reasons + ["polygon has zero area"]
    if not is_alpha_polygon(poly, alpha):
        reasons.append(f"interior angle exceeds {180.0 + alpha} degrees")
    if (classify_points(poly, pts) == Location.OUTSIDE).any():
        reasons.append("point outside polygon")
    area = signed_area(poly)
    if area > budget.A + budget.tolerance:
        reasons.append(f"area {area!r} exceeds budget {budget.A!r}")
    return reasons


def verify_certificate(P, poly, alpha, budget: AreaBudget) -> bool:
    return not certificate_failures(P, poly, alpha, budget)


# ---------------------------------------------------------------------------
# Exact solver
# ---------------------------------------------------------------------------

def _prepare(P, cap):
    pts = point_set(P)
    if len(pts) < 3 or all_collinear(pts):
        raise DegenerateInput("need at least 3 non-collinear distinct points")
    if cap is not None and len(pts) > cap:
        raise TooLarge(f"{len(pts)} points exceeds exact-solver cap {cap}")
    return pts


def _enumerate(pts: Sequence[Point], alpha_max: float) -> List[Tuple[float, float, tuple]]:
    """All enclosing alpha_max-polygons on ``pts`` as (area, max angle, cycle).

    Any simple polygon through the hull vertices visits them in hull order,
    so a candidate is the hull cycle with every hull edge optionally replaced
    by a chain of interior points (a pocket).  The search extends one path
    from the first hull vertex, pruning on edge contacts, the angle bound,
    and completed pockets that would leave an unused point outside.
    """
    hull = convex_hull_indices(pts)
    m = len(hull)
    is_hull = set(hull)
    interior = [i for i in range(len(pts)) if i not in is_hull]
    limit = 180.0 + alpha_max + ANGLE_TOLERANCE
    angle_cache: Dict[tuple, float] = {}

    def angle(a, b, c):
        key = (a, b, c)
        val = angle_cache.get(key)
        if val is None:
            val = angle_cache[key] = turn_angle(pts[a], pts[b], pts[c])
        return val

    def edge_ok(path, nxt, closing):
        cur = path[-1]
        L = len(path)
        if L >= 2 and adjacent_overlap(pts[path[-2]], pts[cur], pts[nxt]):
            return False
        first = 1 if closing else 0
        if closing and adjacent_overlap(pts[cur], pts[nxt], pts[path[1]]):
            return False
        p1, p2 = pts[cur], pts[nxt]
        for k in range(first, L - 2):
            if segments_intersect(p1, p2, pts[path[k]], pts[path[k + 1]]):
                return False
        return True

    def pocket_ok(chain, used):
        poly = [pts[i] for i in chain]
        for q in interior:
            if q in used:
                continue
            loc = contains_point(poly, pts[q])
            if loc == Location.INSIDE:
                return False
            if loc == Location.ON_BOUNDARY and not any(
                    on_segment(poly[k], poly[k + 1], pts[q]) for k in range(len(poly) - 1)):
                return False
        return True

    results = []
    path = [hull[0]]
    used = set()

    def dfs(j, pocket_start, max_angle):
        cur = path[-1]
        target = hull[j % m]
        closing = j == m
        for nxt in [target] + [i for i in interior if i not in used]:
            a = max_angle
            if len(path) >= 2:
                ang = angle(path[-2], cur, nxt)
                if ang > limit:
                    continue
                a = max(a, ang)
            if not edge_ok(path, nxt, closing and nxt == target):
                continue
            if nxt == target:
                chain = path[pocket_start:] + [nxt]
                if len(chain) > 2 and not pocket_ok(chain, used):
                    continue
                if closing:
                    ang0 = angle(cur, hull[0], path[1])
                    if ang0 > limit:
                        continue
                    poly = [pts[i] for i in path]
                    results.append((signed_area(poly), max(a, ang0), tuple(path)))
                    continue
                path.append(nxt)
                dfs(j + 1, len(path) - 1, a)
                path.pop()
            else:
                path.append(nxt)
                used.add(nxt)
                dfs(j, pocket_start, a)
                used.discard(nxt)
                path.pop()

    dfs(1, 0, 0.0)
    return results


def _select(results, alpha):
    limit = 180.0 + alpha + ANGLE_TOLERANCE
    feasible = [r for r in results if r[1] <= limit]
    amin = min(r[0] for r in feasible)
    return min((r for r in feasible if r[0] <= amin + AREA_TIE_TOLERANCE),
               key=lambda r: (len(r[2]), canonical_cycle(r[2])))


def _result(pts, cycle, alpha, method) -> HullResult:
    cycle = tuple(cycle)
    k = cycle.index(min(cycle))
    cycle = cycle[k:] + cycle[:k]
    poly = tuple(pts[i] for i in cycle)
    if signed_area(poly) < 0:
        cycle = (cycle[0],) + cycle[1:][::-1]
        poly = tuple(pts[i] for i in cycle)
    return HullResult(poly, alpha, signed_area(poly), method, cycle)


def ach_exact(P, alpha: float, cap: Optional[int] = DEFAULT_CAP) -> HullResult:
    """Globally minimum-area enclosing alpha-polygon by pruned enumeration.

    Area ties (within 1e-9) prefer fewer vertices, then the lexicographically
    smallest canonical index cycle.
    """
    alpha = check_alpha(alpha)
    pts = _prepare(P, cap)
    _, _, cycle = _select(_enumerate(pts, alpha), alpha)
    return _result(pts, cycle, alpha, EXACT)


def ach_exact_sweep(P, alphas: Sequence[float], cap: Optional[int] = DEFAULT_CAP) -> Dict[float, HullResult]:
    """:func:`ach_exact` for several alphas from a single enumeration."""
    alphas = [check_alpha(a) for a in alphas]
    pts = _prepare(P, cap)
    results = _enumerate(pts, max(alphas))
    return {a: _result(pts, _select(results, a)[2], a, EXACT) for a in alphas}


def min_area_polygonalization(P, cap: Optional[int] = DEFAULT_CAP) -> Tuple[Point, ...]:
    """Minimum-area simple polygon using every point as a vertex.

    Plain enumeration of circular orders with the first point fixed and
    mirror images skipped; (n-1)!/2 orders, hence the cap.
    """
    pts = _prepare(P, cap)
    n = len(pts)
    found = []
    for rest in itertools.permutations(range(1, n)):
        if n > 3 and rest[0] > rest[-1]:
            continue
        cycle = (0,) + rest
        poly = [pts[i] for i in cycle]
        if is_simple(poly):
            found.append((abs(signed_area(poly)), 0.0, cycle))
    _, _, cycle = _select(found, 180.0)
    return ccw(tuple(pts[i] for i in canonical_cycle(cycle)))


# ---------------------------------------------------------------------------
# Edge-digging heuristic
# ---------------------------------------------------------------------------

class _Digger:
    """Per-edge dig candidates judged on the removed triangle alone.

    Clearance is tested against every point of P, so a candidate list stays
    valid as the pool shrinks and is computed once per boundary edge.
    """

    def __init__(self, pts: Sequence[Point], limit: float):
        self.pts = pts
        arr = np.asarray(pts, dtype=float)
        self.xs, self.ys = arr[:, 0], arr[:, 1]
        self.limit = limit
        self._cache: Dict[Tuple[int, int], List[Tuple[float, int]]] = {}

    def candidates(self, a: int, b: int, pool: Sequence[int]) -> List[Tuple[float, int]]:
        key = (a, b)
        if key not in self._cache:
            self._cache[key] = self._compute(a, b, pool)
        return self._cache[key]

    def _compute(self, a, b, pool):
        pts, xs, ys = self.pts, self.xs, self.ys
        pa, pb = pts[a], pts[b]
        s_ab = orient_many(pa[0], pa[1], pb[0], pb[1], xs, ys)
        on_ab = ((s_ab == 0) & (xs >= min(pa[0], pb[0])) & (xs <= max(pa[0], pb[0]))
                 & (ys >= min(pa[1], pb[1])) & (ys <= max(pa[1], pb[1])))
        on_ab[[a, b]] = False
        if on_ab.any():
            # digging ab would leave that point outside
            return []
        pool = np.asarray(pool, dtype=int)
        cand = pool[s_ab[pool] > 0]
        cand = np.array([p for p in cand if turn_angle(pa, pts[p], pb) <= self.limit], dtype=int)
        if cand.size == 0:
            return []
        inner = np.flatnonzero(s_ab > 0)
        px, py = xs[cand][:, None], ys[cand][:, None]
        qx, qy = xs[inner][None, :], ys[inner][None, :]
        s_bp = orient_many(pb[0], pb[1], px, py, qx, qy)
        s_pa = orient_many(px, py, pa[0], pa[1], qx, qy)
        clear = ~((s_bp > 0) & (s_pa > 0)).any(axis=1)
        out = []
        for p in cand[clear]:
            pp = pts[p]
            area = 0.5 * abs((pb[0] - pa[0]) * (pp[1] - pa[1]) - (pb[1] - pa[1]) * (pp[0] - pa[0]))
            out.append((area, int(p)))
        return out


def _dig_is_simple(pts, boundary, e, p) -> bool:
    m = len(boundary)
    a, b = boundary[e], boundary[(e + 1) % m]
    prev_a, next_b = boundary[e - 1], boundary[(e + 2) % m]
    if adjacent_overlap(pts[prev_a], pts[a], pts[p]) or adjacent_overlap(pts[p], pts[b], pts[next_b]):
        return False
    pa, pb, pp = pts[a], pts[b], pts[p]
    for k in range(m):
        if k == e:
            continue
        x, y = boundary[k], boundary[(k + 1) % m]
        q1, q2 = pts[x], pts[y]
        if y != a and segments_intersect(pa, pp, q1, q2):
            return False
        if x != b and segments_intersect(pp, pb, q1, q2):
            return False
    return True


def ach_heuristic(P, alpha: float) -> HullResult:
    """Greedy edge digging from the convex hull.

    Each round applies the largest-area legal dig: replace boundary edge
    (a, b) by (a, p), (p, b) for an unused point p when the removed triangle
    holds no other point, the new edges touch the boundary only at a and b,
    and the angles at a, p and b stay within ``180 + alpha``.  Ties go to the
    smaller point index, then the smaller edge index.
    """
    alpha = check_alpha(alpha)
    pts = _prepare(P, None)
    limit = 180.0 + alpha + ANGLE_TOLERANCE
    boundary = convex_hull_indices(pts)
    hull_set = set(boundary)
    pool = [i for i in range(len(pts)) if i not in hull_set]
    in_pool = set(pool)
    digger = _Digger(pts, limit)

    while in_pool:
        m = len(boundary)
        cands = []
        for e in range(m):
            a, b = boundary[e], boundary[(e + 1) % m]
            cands.extend((-area, p, e) for area, p in digger.candidates(a, b, pool) if p in in_pool)
        cands.sort()
        chosen = None
        for _, p, e in cands:
            a, b = boundary[e], boundary[(e + 1) % m]
            prev_a, next_b = boundary[e - 1], boundary[(e + 2) % m]
            if (turn_angle(pts[prev_a], pts[a], pts[p]) > limit
                    or turn_angle(pts[p], pts[b], pts[next_b]) > limit):
                continue
            if not _dig_is_simple(pts, boundary, e, p):
                continue
            chosen = (p, e)
            break
        if chosen is None:
            break
        p, e = chosen
        boundary.insert(e + 1, p)
        in_pool.discard(p)
        pool = [q for q in pool if q != p]
    poly = tuple(pts[i] for i in boundary)
    return HullResult(poly, alpha, signed_area(poly), HEURISTIC, tuple(boundary))


def ach(P, alpha: float, cap: int = DEFAULT_CAP) -> HullResult:
    """Exact solver up to ``cap`` points, heuristic beyond."""
    pts = point_set(P)
    if len(pts) <= cap:
        return ach_exact(pts, alpha, cap)
    return ach_heuristic(pts, alpha)
