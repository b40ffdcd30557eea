"""Good Set Analyzer - decide when every function on a finite set of n-tuples is a sum of univariate functions."""

__version__ = "0.1.0.0"

from .analysis.goodness import is_full, is_good, theorem4_split
from .analysis.structure import boundary, geodesic, related_components
from .measures.finite_measure import FiniteMeasure, is_simplicial
from .models.functions import FunctionTable, PinSet
from .models.instance import Instance
from .models.space import Point, PointSet, Space
from .parsers import load_instance
from .solvers import get_solver

__all__ = [
    "FiniteMeasure",
    "FunctionTable",
    "Instance",
    "PinSet",
    "Point",
    "PointSet",
    "Space",
    "boundary",
    "geodesic",
    "get_solver",
    "is_full",
    "is_good",
    "is_simplicial",
    "load_instance",
    "related_components",
    "theorem4_split",
]
