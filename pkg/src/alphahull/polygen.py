"""Reproducible random simple polygons.

Vertices come from a splitmix64 stream, so a ``(n, seed)`` pair names the
same polygon on every platform.  A random vertex cycle is untangled with
2-opt moves: reversing the chain between two crossing edges strictly
shortens the perimeter, so repair terminates for points in general position.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple

from .geom import GeometryError, Point, ccw, is_simple, segments_intersect

log = logging.getLogger(__name__)

MASK64 = (1 << 64) - 1


class GenerationFailed(GeometryError):
    code = "GENERATION_FAILED"


class SplitMix64:
    """splitmix64 (Steele, Lea & Flood); 64-bit state, one add per step."""

    def __init__(self, seed: int):
        self.state = seed & MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
        return z ^ (z >> 31)

    def random(self) -> float:
        """Uniform double in [0, 1) from the top 53 bits."""
        return (self.next_u64() >> 11) * (1.0 / (1 << 53))

    def below(self, k: int) -> int:
        """Uniform integer in [0, k) by rejection."""
        if k <= 0:
            raise ValueError("k must be positive")
        limit = (1 << 64) - ((1 << 64) % k)
        while True:
            x = self.next_u64()
            if x < limit:
                return x % k


def derive_seed(seed: int, index: int) -> int:
    """Per-item seed for batch member ``index``; independent of batch order."""
    return SplitMix64((seed ^ index) & MASK64).next_u64()


@dataclass(frozen=True)
class GenConfig:
    n: int
    seed: int
    max_2opt_rounds: Optional[int] = None

    def __post_init__(self):
        if self.n < 3:
            raise ValueError(f"n must be at least 3, got {self.n}")

    @property
    def rounds(self) -> int:
        return self.max_2opt_rounds if self.max_2opt_rounds is not None else 10 * self.n * self.n


def _first_crossing(poly: Sequence[Point]) -> Optional[Tuple[int, int]]:
    n = len(poly)
    for i in range(n - 2):
        a, b = poly[i], poly[i + 1]
        for j in range(i + 2, n - 1 if i == 0 else n):
            if segments_intersect(a, b, poly[j], poly[(j + 1) % n]):
                return i, j
    return None


def _try_generate(cfg: GenConfig, seed: int) -> Optional[Tuple[Point, ...]]:
    rng = SplitMix64(seed)
    pts: List[Point] = []
    seen = set()
    while len(pts) < cfg.n:
        p = (rng.random(), rng.random())
        if p not in seen:
            seen.add(p)
            pts.append(p)
    for i in range(cfg.n - 1, 0, -1):
        j = rng.below(i + 1)
        pts[i], pts[j] = pts[j], pts[i]
    for _ in range(cfg.rounds):
        hit = _first_crossing(pts)
        if hit is None:
            break
        i, j = hit
        pts[i + 1:j + 1] = pts[i + 1:j + 1][::-1]
    if not is_simple(pts):
        return None
    return ccw(pts)


def random_simple_polygon(cfg: GenConfig) -> Tuple[Point, ...]:
    """Random simple CCW polygon; raises :class:`GenerationFailed` if 2-opt stalls."""
    poly = _try_generate(cfg, cfg.seed)
    if poly is None:
        raise GenerationFailed(f"no simple polygon for n={cfg.n} seed={cfg.seed} "
                               f"within {cfg.rounds} 2-opt rounds")
    return poly


def generate_polygon(cfg: GenConfig, max_reseeds: int = 100) -> Tuple[Tuple[Point, ...], int]:
    """Like :func:`random_simple_polygon` but reseeds with seed+1 on failure.

    Returns the polygon and the seed that produced it.
    """
    seed = cfg.seed
    for _ in range(max_reseeds + 1):
        poly = _try_generate(cfg, seed)
        if poly is not None:
            if seed != cfg.seed:
                log.warning("seed %d failed 2-opt repair; used seed %d", cfg.seed, seed)
            return poly, seed
        seed = (seed + 1) & MASK64
    raise GenerationFailed(f"n={cfg.n} seed={cfg.seed}: {max_reseeds} reseeds exhausted")


def scale_to_unit(poly: Sequence[Point]) -> Tuple[Point, ...]:
    """Move the bounding box corner to the origin and make its longer side 1."""
    xs = [p[0] for p in poly]
    ys = [p[1] for p in poly]
    x0, y0 = min(xs), min(ys)
    side = max(max(xs) - x0, max(ys) - y0)
    if side <= 0:
        raise GeometryError("polygon has an empty bounding box")
    return tuple(((x - x0) / side, (y - y0) / side) for x, y in poly)
