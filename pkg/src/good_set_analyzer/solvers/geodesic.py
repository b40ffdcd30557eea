"""Solve point by point along geodesics from a base point."""

from fractions import Fraction
from typing import Dict, List, Optional

from ..analysis.goodness import require_good
from ..analysis.structure import geodesic
from ..errors import CertificateError, PreconditionError
from ..linalg.exact import SolveVerdict
from ..models.functions import Decomposition, FunctionTable, PinSet, format_scalar
from ..models.space import Coordinate, Point, PointSet
from .base_solver import BaseSolver, SolveReport
from .geodesic_matrix import GeodesicMatrix


def base_pins(base: Point) -> List[Coordinate]:
    """The first n − 1 coordinates of ``base``."""
    return [base.coordinate(i) for i in range(len(base) - 1)]


class GeodesicSolver(BaseSolver):
    """
    For every y in S, solve the geodesic system between the base and y and read off the
    values at y's coordinates. Requires every point to be related to the base.
    """

    def __init__(self, base: Optional[Point] = None, max_points: Optional[int] = None):
        super().__init__(max_points)
        self.base = base

    @property
    def method_name(self) -> str:
        return "geodesic"

    def solve(self, s: PointSet, f: FunctionTable, pins: Optional[PinSet] = None) -> SolveReport:
        self.validate_function(s, f)
        require_good(s, "the geodesic method")
        base = self.base if self.base is not None else s.canonical()[0]
        if base not in s:
            raise PreconditionError(f"Base point {base} is not in the set")
        pin_values = self.resolve_pins(pins, base_pins(base))

        values: Dict[Coordinate, Fraction] = dict(pin_values)
        longest = 0
        for y in s:
            g = geodesic(s, base, y, self.max_points)
            if g is None:
                raise PreconditionError(
                    f"Point {y} is not related to the base {base}; "
                    "use the componentwise or boundary method"
                )
            matrix = GeodesicMatrix.from_geodesic(g, base)
            rhs = [
                f[p] - sum((pin_values[c] for c in p.coordinates() if c in pin_values), Fraction(0))
                for p in matrix.points
            ]
            solution = matrix.solve(rhs)
            for c in y.coordinates():
                value = pin_values[c] if c in pin_values else solution[c]
                if c in values and values[c] != value:
                    raise CertificateError(
                        f"Geodesic solves disagree at {c}: "
                        f"{format_scalar(values[c])} vs {format_scalar(value)}"
                    )
                values[c] = value
            longest = max(longest, g.length)
            self.logger.debug(f"Solved along geodesic {base} -> {y} of length {g.length}")

        decomposition = Decomposition({c: values[c] for c in s.coordinates()})
        return self.make_report(
            s, f, SolveVerdict.UNIQUE, pin_values, decomposition, max_geodesic_length=longest
        )


def solve_via_geodesics(
    s: PointSet,
    f: FunctionTable,
    base: Optional[Point] = None,
    pins: Optional[PinSet] = None,
    max_points: Optional[int] = None,
) -> SolveReport:
    """Geodesic solve; the base defaults to the lexicographically least point."""
    return GeodesicSolver(base, max_points).solve(s, f, pins)
