"""Spaces, points, functions and decompositions."""

from .functions import (
    Decomposition,
    FunctionTable,
    PinSet,
    Scalar,
    evaluate,
    format_scalar,
    to_scalar,
)
from .instance import Instance
from .space import (
    Axis,
    Coordinate,
    Point,
    PointSet,
    Space,
    common_coordinate_kinds,
    deficiency,
    incidence_vector,
    projection,
)

__all__ = [
    "Axis",
    "Coordinate",
    "Decomposition",
    "FunctionTable",
    "Instance",
    "PinSet",
    "Point",
    "PointSet",
    "Scalar",
    "Space",
    "common_coordinate_kinds",
    "deficiency",
    "evaluate",
    "format_scalar",
    "incidence_vector",
    "projection",
    "to_scalar",
]
