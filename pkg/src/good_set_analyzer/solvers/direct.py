"""Direct pinned elimination on the whole incidence system."""

from typing import Optional

from ..linalg.exact import solve_pinned
from ..linalg.incidence import IncidenceSystem
from ..models.functions import FunctionTable, PinSet
from ..models.space import PointSet
from .base_solver import BaseSolver, SolveReport


class DirectSolver(BaseSolver):
    """Solve by one exact elimination with the pins as extra unit equations."""

    @property
    def method_name(self) -> str:
        return "direct"

    def solve(self, s: PointSet, f: FunctionTable, pins: Optional[PinSet] = None) -> SolveReport:
        self.validate_function(s, f)
        pins = pins or PinSet()
        pins.validate_against(s)
        result = solve_pinned(IncidenceSystem(s), f, pins)
        return self.make_report(
            s,
            f,
            result.verdict,
            pins,
            decomposition=result.decomposition,
            kernel=result.kernel,
            witness=result.witness,
        )


def solve_direct(s: PointSet, f: FunctionTable, pins: Optional[PinSet] = None) -> SolveReport:
    """Unique when ``s`` is full and the pins are n − 1 coordinates of distinct kinds."""
    return DirectSolver().solve(s, f, pins)
