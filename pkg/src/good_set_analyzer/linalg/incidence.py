"""The point-by-coordinate incidence matrix of a point set."""

import logging
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence

from ..errors import PreconditionError
from ..models.space import Coordinate, Point, PointSet, incidence_vector

logger = logging.getLogger(__name__)


class IncidenceSystem:
    """
    One row per point (its incidence vector), one column per coordinate.

    The columns default to ∪ᵢΠᵢS in canonical order; a caller may pass an explicit
    column list (for example all coordinates of the space).
    """

    def __init__(self, points: PointSet, columns: Optional[Sequence[Coordinate]] = None):
        self.points = points
        self.columns: List[Coordinate] = list(columns) if columns is not None else points.coordinates()
        self.column_index: Dict[Coordinate, int] = {c: j for j, c in enumerate(self.columns)}
        if len(self.column_index) != len(self.columns):
            raise PreconditionError("Duplicate columns in incidence system")
        for p in points:
            for c in p.coordinates():
                if c not in self.column_index:
                    raise PreconditionError(f"Point {p} uses coordinate {c} absent from the columns")

    @property
    def n_rows(self) -> int:
        return len(self.points)

    @property
    def n_cols(self) -> int:
        return len(self.columns)

    def row(self, p: Point) -> List[Fraction]:
        return self.dense(incidence_vector(p))

    def rows(self) -> List[List[Fraction]]:
        return [self.row(p) for p in self.points]

    def sparse_rows(self) -> List[Dict[Coordinate, int]]:
        return [incidence_vector(p) for p in self.points]

    def dense(self, vector: Mapping[Coordinate, object]) -> List[Fraction]:
        """Dense form of a sparse vector indexed by this system's columns."""
        dense = [Fraction(0)] * self.n_cols
        for c, v in vector.items():
            if c not in self.column_index:
                raise PreconditionError(f"Coordinate {c} is not a column of the system")
            dense[self.column_index[c]] = Fraction(v)  # type: ignore[arg-type]
        return dense

    def unit_row(self, c: Coordinate) -> List[Fraction]:
        return self.dense({c: 1})
