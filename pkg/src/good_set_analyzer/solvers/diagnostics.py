"""Gauge freedom and finite-scale boundedness diagnostics."""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional

from ..analysis.goodness import require_good
from ..analysis.structure import geodesic, related_components
from ..errors import CertificateError, PreconditionError
from ..linalg.exact import KernelBasis, SolveVerdict, column_kernel, solve_pinned
from ..linalg.incidence import IncidenceSystem
from ..models.functions import FunctionTable, PinSet
from ..models.space import Point, PointSet
from .geodesic import base_pins

logger = logging.getLogger(__name__)


def gauge_freedom(s: PointSet, pins: Optional[PinSet] = None) -> KernelBasis:
    """
    The homogeneous solutions vanishing at the pins.

    Two solutions of the same equation under the same pins differ by an element of this
    space. When the pins cover only some axes of a full set, its vectors are constants on
    the remaining axes summing to zero.
    """
    s.require_nonempty("gauge_freedom")
    pins = pins or PinSet()
    pins.validate_against(s)
    return column_kernel(IncidenceSystem(s), pins)


@dataclass(frozen=True)
class BoundDiagnostics:
    """Geodesic lengths from a base point and the worst indicator solution."""

    base: Point
    geodesic_lengths: Dict[Point, int]
    max_abs_value: Fraction
    worst_point: Point

    @property
    def max_geodesic_length(self) -> int:
        return max(self.geodesic_lengths.values())

    @property
    def mean_geodesic_length(self) -> Fraction:
        return Fraction(sum(self.geodesic_lengths.values()), len(self.geodesic_lengths))

    def length_distribution(self) -> Dict[int, int]:
        return dict(sorted(Counter(self.geodesic_lengths.values()).items()))


def bound_diagnostics(
    s: PointSet, base: Optional[Point] = None, max_points: Optional[int] = None
) -> BoundDiagnostics:
    """
    Geodesic lengths from ``base`` and max |uᵢ| over indicator right-hand sides.

    Args:
        s: Good set forming a single related component
        base: Base point (default: the lexicographically least point); its first n − 1
            coordinates are pinned to 0 for every indicator solve
        max_points: Refuse larger sets

    Returns:
        BoundDiagnostics
    """
    s.require_nonempty("bound_diagnostics")
    require_good(s, "bound_diagnostics")
    partition = related_components(s, max_points=max_points)
    if len(partition) != 1:
        raise PreconditionError(
            f"Set has {len(partition)} related components; diagnostics are per component"
        )
    base = base if base is not None else s.canonical()[0]
    if base not in s:
        raise PreconditionError(f"Base point {base} is not in the set")

    lengths: Dict[Point, int] = {}
    for y in s:
        g = geodesic(s, base, y, max_points)
        if g is None:
            raise CertificateError(f"{y} lies in the single component but has no geodesic")
        lengths[y] = g.length

    system = IncidenceSystem(s)
    pins = PinSet.zeros(base_pins(base))
    worst_value = Fraction(-1)
    worst_point = base
    for p in s:
        result = solve_pinned(system, FunctionTable.indicator(s, p), pins)
        if result.verdict is not SolveVerdict.UNIQUE or result.decomposition is None:
            raise CertificateError(f"Indicator of {p} has no unique solution on a full set")
        value = result.decomposition.max_abs()
        if value > worst_value:
            worst_value, worst_point = value, p

    diagnostics = BoundDiagnostics(base, lengths, worst_value, worst_point)
    logger.info(
        f"Max geodesic length {diagnostics.max_geodesic_length}, "
        f"max |value| {worst_value} at {worst_point}"
    )
    return diagnostics
