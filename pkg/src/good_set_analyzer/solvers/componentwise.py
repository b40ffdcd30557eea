"""Geodesic solves run independently on components that share no coordinate."""

import itertools
from typing import List, Optional, Sequence

from ..analysis.structure import cross_section, related_components
from ..errors import PreconditionError
from ..linalg.exact import SolveVerdict
from ..models.functions import Decomposition, FunctionTable, PinSet
from ..models.space import Point, PointSet
from .base_solver import BaseSolver, SolveReport
from .geodesic import GeodesicSolver, base_pins


class ComponentwiseSolver(BaseSolver):
    """One geodesic solve per related component, then the union of the results."""

    def __init__(self, bases: Optional[Sequence[Point]] = None, max_points: Optional[int] = None):
        super().__init__(max_points)
        self.bases = list(bases) if bases is not None else None

    @property
    def method_name(self) -> str:
        return "componentwise"

    def solve(self, s: PointSet, f: FunctionTable, pins: Optional[PinSet] = None) -> SolveReport:
        self.validate_function(s, f)
        partition = related_components(s, max_points=self.max_points)
        for (j, a), (k, b) in itertools.combinations(enumerate(partition.components), 2):
            shared = set(a.coordinates()) & set(b.coordinates())
            if shared:
                raise PreconditionError(
                    f"Components {j} and {k} share the coordinate {min(shared, key=s.space.coordinate_key)}; "
                    "use the boundary method"
                )

        bases: List[Point] = self.bases if self.bases is not None else list(cross_section(partition))
        if len(bases) != len(partition):
            raise PreconditionError(
                f"Got {len(bases)} base points for {len(partition)} components"
            )
        for k, base in enumerate(bases):
            if base not in partition.components[k]:
                raise PreconditionError(f"Base point {base} is not in component {k}")

        allowed = [c for base in bases for c in base_pins(base)]
        pin_values = self.resolve_pins(pins, allowed)

        decomposition = Decomposition({})
        longest = 0
        for component, base in zip(partition.components, bases):
            component_pins = PinSet({c: pin_values[c] for c in base_pins(base)})
            sub = GeodesicSolver(base, self.max_points).solve(
                component, f.restrict(component), component_pins
            )
            assert sub.decomposition is not None
            decomposition = decomposition.merged(sub.decomposition)
            longest = max(longest, sub.max_geodesic_length or 0)

        decomposition = decomposition.restrict(s.coordinates())
        return self.make_report(
            s, f, SolveVerdict.UNIQUE, pin_values, decomposition, max_geodesic_length=longest
        )


def solve_componentwise(
    s: PointSet,
    f: FunctionTable,
    bases: Optional[Sequence[Point]] = None,
    pins: Optional[PinSet] = None,
    max_points: Optional[int] = None,
) -> SolveReport:
    """Componentwise solve; bases default to the cross-section of the components."""
    return ComponentwiseSolver(bases, max_points).solve(s, f, pins)
