"""The square 0/1 system of a geodesic after removing the pinned coordinates."""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from ..analysis.structure import Geodesic
from ..errors import CertificateError
from ..linalg import rational
from ..models.space import Coordinate, Point

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GeodesicMatrix:
    """
    Rows are the geodesic's points (base first, then canonical order); columns are its
    coordinates minus the base's first n − 1 coordinates. A full geodesic has exactly as
    many such columns as points, and the matrix is invertible.
    """

    points: Tuple[Point, ...]
    columns: Tuple[Coordinate, ...]
    entries: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_geodesic(cls, g: Geodesic, base: Point) -> "GeodesicMatrix":
        if base not in g.points:
            raise CertificateError(f"Base point {base} is not on the geodesic")
        pinned = {base.coordinate(i) for i in range(len(base) - 1)}
        ordered = (base,) + tuple(p for p in g.points.canonical() if p != base)
        columns = tuple(c for c in g.points.coordinates() if c not in pinned)
        if len(columns) != len(ordered):
            raise CertificateError(
                f"Geodesic matrix is {len(ordered)}x{len(columns)}, expected square"
            )
        entries = tuple(
            tuple(int(c in set(p.coordinates())) for c in columns) for p in ordered
        )
        return cls(ordered, columns, entries)

    @property
    def size(self) -> int:
        return len(self.points)

    def rows(self) -> List[List[Fraction]]:
        return [[Fraction(v) for v in row] for row in self.entries]

    def inverse(self) -> List[List[Fraction]]:
        try:
            return rational.inverse(self.rows())
        except ValueError as e:
            raise CertificateError(f"Geodesic matrix of size {self.size} is singular") from e

    def solve(self, rhs: Sequence[Fraction]) -> Dict[Coordinate, Fraction]:
        """g = M⁻¹·rhs, checked by multiplying back."""
        g = rational.mat_vec(self.inverse(), rhs)
        if rational.mat_vec(self.rows(), g) != list(rhs):
            raise CertificateError("Geodesic solve does not reproduce its right-hand side")
        return dict(zip(self.columns, g))
