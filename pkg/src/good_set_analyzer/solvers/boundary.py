"""Solve with prescribed values on a boundary of the set."""

from typing import Optional

from ..analysis.goodness import associated_full_set, boundary_comb, require_good
from ..analysis.structure import boundary, is_boundary
from ..errors import CertificateError, PreconditionError
from ..linalg.exact import SolveVerdict, solve_pinned
from ..linalg.incidence import IncidenceSystem
from ..models.functions import FunctionTable, PinSet
from ..models.space import PointSet
from .base_solver import BaseSolver, SolveReport


class BoundarySolver(BaseSolver):
    """
    Unique solution for any f once values are prescribed on a boundary B.

    When B meets every axis, f is extended to F(S,B) = S ∪ R by f(r) = Σᵢ U(rᵢ) on the
    comb R (all of whose coordinates lie in B), solved on the full set F with the comb
    base pinned, and restricted to S. With zero boundary data the extension is zero on R.
    Otherwise the pinned system on S is solved directly.
    """

    def __init__(self, max_points: Optional[int] = None, verify: bool = True):
        super().__init__(max_points)
        self.verify = verify

    @property
    def method_name(self) -> str:
        return "boundary"

    def solve(self, s: PointSet, f: FunctionTable, pins: Optional[PinSet] = None) -> SolveReport:
        self.validate_function(s, f)
        require_good(s, "the boundary method")
        if pins is None or len(pins) == 0:
            construction = boundary(s, verify=self.verify, max_points=self.max_points)
            pins = PinSet.zeros(construction.boundary)
            self.logger.info("No boundary values given; pinning the computed boundary to 0")
        pins.validate_against(s)
        if len(pins) != s.deficiency() or not is_boundary(s, list(pins)):
            raise PreconditionError(
                "The pinned coordinates do not form a boundary of the set: "
                + ", ".join(s.space.describe(c) for c in pins)
            )

        if all(any(c.axis == i for c in pins) for i in range(s.n)):
            base, comb = boundary_comb(s.space, pins)
            full = associated_full_set(s, pins)
            extension = {r: sum((pins[c] for c in r.coordinates()), 0) for r in comb}
            extended = f.extend(full, extension)
            base_values = PinSet({base.coordinate(i): pins[base.coordinate(i)] for i in range(s.n - 1)})
            result = solve_pinned(IncidenceSystem(full), extended, base_values)
            self.logger.debug(f"Solved on F(S,B) with {len(comb)} comb points")
        else:
            result = solve_pinned(IncidenceSystem(s), f, pins)

        if result.verdict is not SolveVerdict.UNIQUE or result.decomposition is None:
            raise CertificateError(f"Boundary solve returned {result.verdict.value}")
        decomposition = result.decomposition.restrict(s.coordinates())
        return self.make_report(s, f, SolveVerdict.UNIQUE, pins, decomposition)


def solve_with_boundary(
    s: PointSet,
    f: FunctionTable,
    boundary_values: Optional[PinSet] = None,
    max_points: Optional[int] = None,
) -> SolveReport:
    """Boundary solve; without values the computed boundary is pinned to 0."""
    return BoundarySolver(max_points).solve(s, f, boundary_values)
