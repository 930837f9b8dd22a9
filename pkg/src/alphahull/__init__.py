"""Alpha-concave hulls, convex hulls and alpha shapes in the plane."""

from .geom import (
    DegenerateInput,
    GeometryError,
    InvalidInput,
    Location,
    Orientation,
    TooLarge,
    contains_point,
    convex_hull,
    interior_angle,
    is_simple,
    orient,
    point_set,
    signed_area,
)
from .hull import (
    AreaBudget,
    HullResult,
    ach,
    ach_exact,
    ach_heuristic,
    is_alpha_polygon,
    min_area_polygonalization,
    verify_certificate,
)
from .triangulate import INFINITY, alpha_edges, alpha_region, best_containing_alpha, delaunay

__version__ = "0.1.0"
