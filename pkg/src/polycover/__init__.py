"""polycover: convex covers and hidden sets for simple polygons.

Exact-arithmetic solvers for polygon subclasses (convex fans, monotone
mountains, rocking chairs, star-shaped, weakly visible, orthogonal,
funnels, pseudotriangles), a window-partition pipeline for general simple
polygons and polygons with holes, and a brute-force oracle that verifies
every emitted certificate.
"""

from .geom import (
    Point,
    Segment,
    SimplePolygon,
    PolygonWithHoles,
    ConvexPiece,
    orientation,
    segment_intersect,
    point_in_polygon,
    is_convex,
    edge_extension,
    LEFT,
    RIGHT,
    COLLINEAR,
    INTERIOR,
    BOUNDARY,
    EXTERIOR,
)

__all__ = [
    "Point",
    "Segment",
    "SimplePolygon",
    "PolygonWithHoles",
    "ConvexPiece",
    "orientation",
    "segment_intersect",
    "point_in_polygon",
    "is_convex",
    "edge_extension",
    "LEFT",
    "RIGHT",
    "COLLINEAR",
    "INTERIOR",
    "BOUNDARY",
    "EXTERIOR",
]

__version__ = "0.1.0"
