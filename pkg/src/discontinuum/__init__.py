"""Constructive piecewise-affine geometry lab with runtime certification.

Builds nested bad-set refinements of a Lipschitz function on the plane:
each stage carves a snake of convexifying gadgets through a thin strip,
keeps the function piecewise affine and locally convex off the shrinking
bad set, and certifies every claimed property numerically.
"""

from .tolerances import (
    TAU_GEOM,
    TAU_AREA,
    TAU_VAL,
    TAU_CONV,
    TAU_EXT,
    MARGINAL_FACTOR,
    SNAP,
    TRIANGLE_BUDGET,
)
from .errors import (
    DiscontinuumError,
    ParameterError,
    DegeneracyError,
    IntegrityError,
    GlueError,
    ConstructionError,
    StageError,
)
from .geom import (
    Side,
    Line,
    Strip,
    ConvexPolygon,
    PolygonComplex,
    Similarity,
    TrapezoidFrame,
    strip_of,
    convex_hull,
    line_intersection,
    polygon_distance,
    complex_intersect,
    complex_subtract,
    components,
    fit_trapezoid,
)
from .pafn import Mesh, PAFunction

__version__ = "0.1.0"

__all__ = [
    "TAU_GEOM",
    "TAU_AREA",
    "TAU_VAL",
    "TAU_CONV",
    "TAU_EXT",
    "MARGINAL_FACTOR",
    "SNAP",
    "TRIANGLE_BUDGET",
    "DiscontinuumError",
    "ParameterError",
    "DegeneracyError",
    "IntegrityError",
    "GlueError",
    "ConstructionError",
    "StageError",
    "Side",
    "Line",
    "Strip",
    "ConvexPolygon",
    "PolygonComplex",
    "Similarity",
    "TrapezoidFrame",
    "strip_of",
    "convex_hull",
    "line_intersection",
    "polygon_distance",
    "complex_intersect",
    "complex_subtract",
    "components",
    "fit_trapezoid",
    "Mesh",
    "PAFunction",
    "__version__",
]
