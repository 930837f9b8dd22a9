import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from alphahull.geom import (
    DegenerateInput,
    InvalidInput,
    TooLarge,
    canonical_cycle,
    convex_hull,
    is_simple,
    rotate_to_min,
    signed_area,
)
from alphahull.hull import (
    EXACT,
    HEURISTIC,
    AreaBudget,
    ach,
    ach_exact,
    ach_exact_sweep,
    ach_heuristic,
    certificate_failures,
    is_alpha_polygon,
    min_area_polygonalization,
    verify_certificate,
)
from conftest import DENT, SQUARE5, UNIT_SQUARE, random_points


def same_cycle(a, b):
    return rotate_to_min(tuple(a)) == rotate_to_min(tuple(b))


# -- alpha-polygon predicate ------------------------------------------------

def test_is_alpha_polygon_examples():
    assert is_alpha_polygon(UNIT_SQUARE, 0)
    assert not is_alpha_polygon(DENT, 10)
    assert is_alpha_polygon(DENT, 90)
    assert not is_alpha_polygon(DENT, 89.9)
    # clockwise input reads as the same region
    assert is_alpha_polygon(DENT[::-1], 90)


def test_alpha_out_of_range():
    with pytest.raises(InvalidInput):
        is_alpha_polygon(UNIT_SQUARE, 181)
    with pytest.raises(InvalidInput):
        ach_exact(SQUARE5, -1)


# -- certificates -----------------------------------------------------------

def test_certificate_examples():
    assert verify_certificate(UNIT_SQUARE, UNIT_SQUARE, 0, AreaBudget(1.0))
    assert verify_certificate(SQUARE5, DENT, 90, AreaBudget(0.75))
    assert not verify_certificate(SQUARE5, DENT, 45, AreaBudget(0.75))


def test_certificate_rejections():
    assert "polygon vertex not in point set" in certificate_failures(
        UNIT_SQUARE, [(0, 0), (1, 0), (1, 1), (0, 1.5)], 0, AreaBudget(2))
    assert "polygon is not simple" in certificate_failures(
        UNIT_SQUARE, [(0, 0), (1, 1), (1, 0), (0, 1)], 180, AreaBudget(2))
    assert "point outside polygon" in certificate_failures(
        SQUARE5 + [(2.0, 2.0)], UNIT_SQUARE, 180, AreaBudget(5))
    assert any("exceeds budget" in r for r in certificate_failures(
        SQUARE5, UNIT_SQUARE, 0, AreaBudget(0.9)))
    # budget tolerance
    assert verify_certificate(SQUARE5, UNIT_SQUARE, 0, AreaBudget(1.0 - 5e-10))
    with pytest.raises(InvalidInput):
        AreaBudget(0.0)


# -- exact solver -----------------------------------------------------------

def test_exact_square_and_center():
    # both values first confirmed by the exhaustive enumeration oracle
    assert oracles.brute_alpha_hull_area(SQUARE5, 89.9) == 1.0
    assert oracles.brute_alpha_hull_area(SQUARE5, 90) == 0.75
    assert ach_exact(SQUARE5, 89.9).area == 1.0
    res = ach_exact(SQUARE5, 90)
    assert res.area == 0.75 and res.method == EXACT
    assert max(oracles.vector_angle(res.polygon[i - 1], res.polygon[i], res.polygon[(i + 1) % 5])
               for i in range(5)) == 270.0


def test_exact_zero_alpha_is_convex_hull():
    for seed in range(10):
        pts = random_points(seed, 4 + seed % 5)
        assert same_cycle(ach_exact(pts, 0).polygon, convex_hull(pts))


def test_exact_zero_alpha_with_collinear_points():
    pts = [(0, 0), (1, 0), (2, 0), (2, 2), (0, 2), (1, 1)]
    assert same_cycle(ach_exact(pts, 0).polygon, convex_hull(pts))


@pytest.mark.parametrize("seed", range(8))
@pytest.mark.parametrize("alpha", [0, 45, 90, 135, 180])
def test_exact_matches_enumeration_oracle(seed, alpha):
    pts = random_points(100 + seed, 5 + seed % 3)
    res = ach_exact(pts, alpha)
    assert res.area == pytest.approx(oracles.brute_alpha_hull_area(pts, alpha), abs=1e-9)
    assert verify_certificate(pts, res.polygon, alpha, AreaBudget(res.area))


def test_exact_errors():
    with pytest.raises(TooLarge):
        ach_exact(random_points(1, 11), 90)
    with pytest.raises(DegenerateInput):
        ach_exact([(0, 0), (1, 1), (2, 2)], 90)
    assert ach_exact(random_points(1, 11), 90, cap=11).method == EXACT


def test_exact_tie_break_is_deterministic():
    # the square with its center has four equal-area dents at alpha = 90
    res = ach_exact(SQUARE5, 90)
    assert res.indices == canonical_cycle(res.indices)
    # candidates (0,1,2,3,4) (0,1,2,4,3) (0,1,4,2,3) (0,3,2,1,4): the first wins
    assert res.indices == (0, 1, 2, 3, 4)


@settings(max_examples=15, deadline=None)
@given(st.integers(0, 10**6), st.integers(4, 8))
def test_exact_monotone_in_alpha(seed, n):
    pts = random_points(seed, n)
    sweep = ach_exact_sweep(pts, [0, 30, 60, 90, 120, 150, 180])
    areas = [sweep[a].area for a in sorted(sweep)]
    assert all(b <= a + 1e-9 for a, b in zip(areas, areas[1:]))
    for a in (0, 90, 180):
        assert sweep[a] == ach_exact(pts, a)


# -- heuristic --------------------------------------------------------------

def test_heuristic_zero_alpha_is_hull():
    pts = random_points(21, 30)
    res = ach_heuristic(pts, 0)
    assert same_cycle(res.polygon, convex_hull(pts)) and res.method == HEURISTIC


def test_heuristic_square_and_center():
    res = ach_heuristic(SQUARE5, 90)
    assert res.area == 0.75 and len(res.polygon) == 5


def test_heuristic_forty_points_seed_9():
    pts = random_points(9, 40)
    res = ach_heuristic(pts, 120)
    assert verify_certificate(pts, res.polygon, 120, AreaBudget(res.area))
    assert res.area <= signed_area(convex_hull(pts))
    assert res.area < signed_area(convex_hull(pts))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(4, 40), st.sampled_from([0, 20, 60, 100, 140, 180]))
def test_heuristic_sound(seed, n, alpha):
    pts = random_points(seed, n)
    res = ach_heuristic(pts, alpha)
    assert verify_certificate(pts, res.polygon, alpha, AreaBudget(res.area))
    assert res.area <= signed_area(convex_hull(pts)) + 1e-12
    if n <= 8:
        assert ach_exact(pts, alpha).area <= res.area + 1e-9


def test_heuristic_on_grid_points():
    # collinear and co-circular configurations everywhere
    pts = [(float(x), float(y)) for x in range(6) for y in range(4)]
    for alpha in (30, 90, 180):
        res = ach_heuristic(pts, alpha)
        assert verify_certificate(pts, res.polygon, alpha, AreaBudget(res.area))


def test_ach_dispatch():
    assert ach(random_points(3, 8), 60).method == EXACT
    assert ach(random_points(3, 12), 60).method == HEURISTIC


# -- min-area polygonalization ---------------------------------------------

def test_min_area_polygonalization_examples():
    tri = [(0, 0), (1, 0), (0, 1)]
    assert same_cycle(min_area_polygonalization(tri), tri)
    quad = [(0, 0), (1, 1), (1, 0), (0, 1)]
    assert same_cycle(min_area_polygonalization(quad), UNIT_SQUARE)
    assert signed_area(min_area_polygonalization(SQUARE5)) == 0.75
    assert oracles.brute_min_area_polygonalization(SQUARE5) == 0.75


@pytest.mark.parametrize("seed", range(6))
def test_min_area_polygonalization_matches_oracle(seed):
    pts = random_points(200 + seed, 5 + seed % 3)
    poly = min_area_polygonalization(pts)
    assert len(poly) == len(pts) and is_simple(poly) and signed_area(poly) > 0
    assert signed_area(poly) == pytest.approx(oracles.brute_min_area_polygonalization(pts), abs=1e-12)
    assert ach_exact(pts, 180).area == pytest.approx(signed_area(poly), abs=1e-9)
