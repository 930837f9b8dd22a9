import math

import pytest

import oracles
from alphahull.bench import (
    COLUMNS,
    CSV_HEADER,
    DEFAULT_GRID,
    NegativeError,
    approx_error,
    corpus,
    evaluate_polygon,
    read_csv,
    report_csv,
    run_comparison,
    select_ach_alpha,
)
from alphahull.geom import convex_hull, polygon_contains_polygon, rotate_to_min, signed_area
from alphahull.hull import ach_exact
from alphahull.polygen import GenConfig, random_simple_polygon
from conftest import DENT

# (polygon, convex hull, alpha shape, alpha-concave hull) areas and the
# three published errors, five sample rows
SAMPLE_ROWS = [
    ((0.146599413, 0.284458498, 0.584730356, 0.284458498), (0.137859085, 0.438130943, 0.137859085)),
    ((0.156271926, 0.487516049, 0.487516049, 0.32824526), (0.331244123, 0.331244123, 0.171973334)),
    ((0.285070702, 0.435827316, 0.365505776, 0.365505776), (0.150756615, 0.080435074, 0.080435074)),
    ((0.13411634, 0.314397968, 0.288138401, 0.293174548), (0.180281628, 0.154022061, 0.159058208)),
    ((0.337602248, 0.600940344, 0.535038758, 0.546185385), (0.263338096, 0.197436509, 0.208583137)),
]


def test_approx_error_examples():
    assert approx_error(0.284458498, 0.146599413) == pytest.approx(0.137859085, abs=1e-8)
    assert approx_error(0.435827316, 0.285070702) == pytest.approx(0.150756615, abs=1e-8)
    assert approx_error(0.3, 0.3) == 0.0
    with pytest.raises(NegativeError):
        approx_error(0.1, 0.2)
    # within tolerance of the polygon area is not an error
    assert approx_error(0.2 - 5e-10, 0.2) == pytest.approx(-5e-10)


@pytest.mark.parametrize("areas,errors", SAMPLE_ROWS)
def test_sample_row_error_arithmetic(areas, errors):
    poly, *approx = areas
    for a, e in zip(approx, errors):
        assert approx_error(a, poly) == pytest.approx(e, abs=1e-8)


def test_grid_zero_is_convex_hull():
    poly = random_simple_polygon(GenConfig(9, 5))
    alpha, hull = select_ach_alpha(poly, [0])
    assert alpha == 0 and rotate_to_min(hull.polygon) == rotate_to_min(convex_hull(poly))


def test_star_pentagon_on_square_and_center():
    alpha, hull = select_ach_alpha(DENT)
    assert oracles.polygon_covers(hull.polygon, DENT)
    # oracle: smallest covering exact hull over the grid, ties to larger alpha
    covering = [(ach_exact(DENT, a).area, -a) for a in DEFAULT_GRID
                if oracles.polygon_covers(ach_exact(DENT, a).polygon, DENT)]
    area, neg_alpha = min(covering)
    assert hull.area == area and alpha == -neg_alpha


@pytest.mark.parametrize("seed", [3, 8, 13])
def test_selected_hull_covers_polygon(seed):
    poly = random_simple_polygon(GenConfig(9, seed))
    alpha, hull = select_ach_alpha(poly)
    assert oracles.polygon_covers(hull.polygon, poly)
    assert signed_area(poly) - 1e-12 <= hull.area <= signed_area(convex_hull(poly)) + 1e-12


def test_large_polygon_uses_heuristic_and_still_covers():
    poly = random_simple_polygon(GenConfig(25, 4))
    alpha, hull = select_ach_alpha(poly)
    assert hull.method == "HEURISTIC"
    assert polygon_contains_polygon(hull.polygon, poly)
    assert oracles.polygon_covers(hull.polygon, poly)


def test_triangle_run_has_zero_errors():
    report = run_comparison(1, 3, 0)
    (row,) = report.rows
    assert row.chull_err == row.ashape_err == row.ahull_err == 0.0
    assert report.count_equal == 1


def test_row_invariants_and_averages():
    report = run_comparison(12, (5, 14), 77)
    assert report.count_better + report.count_equal + report.count_worse == 12
    for r in report.rows:
        for c in ("chull", "ashape", "ahull"):
            assert getattr(r, c + "_area") >= r.polygon_area - 1e-9
            assert getattr(r, c + "_err") == getattr(r, c + "_area") - r.polygon_area
        assert r.ahull_err <= r.chull_err + 1e-9
        assert r.ashape_area <= r.chull_area + 1e-9
    for c in COLUMNS:
        assert report.averages[c] == pytest.approx(
            sum(getattr(r, c) for r in report.rows) / 12, abs=1e-12)
        assert report.averages_first5[c] == pytest.approx(
            sum(getattr(r, c) for r in report.rows[:5]) / 5, abs=1e-12)


def test_corpus_sizes_and_scaling():
    polys = list(corpus(20, (4, 9), 5))
    assert [k for k, _, _ in polys] == list(range(20))
    assert {len(p) for _, _, p in polys} <= set(range(4, 10))
    for _, _, p in polys:
        assert min(x for x, _ in p) == 0.0 and min(y for _, y in p) == 0.0
        assert max(max(x for x, _ in p), max(y for _, y in p)) == pytest.approx(1.0, abs=1e-15)
    # order independence: member k does not depend on the batch size
    assert list(corpus(3, (4, 9), 5)) == polys[:3]


def test_csv_round_trip():
    report = run_comparison(4, 7, 9)
    text = report_csv(report)
    lines = text.splitlines()
    assert lines[0] == CSV_HEADER
    rows, summary = read_csv(text)
    assert len(rows) == 4
    for parsed, r in zip(rows, report.rows):
        assert parsed["id"] == r.id
        assert [parsed[c] for c in COLUMNS] == r.values()
    assert int(summary["rows"][0]) == 4
    assert sum(int(summary[k][0]) for k in ("count_better", "count_equal", "count_worse")) == 4
    assert [float(v) for v in summary["average_all"]] == [report.averages[c] for c in COLUMNS]
    assert report_csv(run_comparison(4, 7, 9)) == text


def test_evaluate_polygon_records_parameters():
    poly = random_simple_polygon(GenConfig(8, 2))
    row = evaluate_polygon(poly, row_id=7)
    assert row.id == 7 and row.n == 8
    assert row.ahull_alpha in DEFAULT_GRID
    assert row.ashape_radius > 0 or math.isinf(row.ashape_radius)
