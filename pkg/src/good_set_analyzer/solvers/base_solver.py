"""Base solver class for the decomposition equation u₁(x₁)+⋯+uₙ(xₙ) = f(x)."""

import logging
from abc import ABC, abstractmethod
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional

from ..errors import CertificateError, PreconditionError
from ..linalg.exact import KernelBasis, RowCombination, SolveVerdict
from ..models.functions import Decomposition, FunctionTable, PinSet, format_scalar
from ..models.space import Coordinate, PointSet

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SolveReport:
    """Outcome of one solve, with the diagnostics the method could collect."""

    method: str
    verdict: SolveVerdict
    pins: PinSet
    decomposition: Optional[Decomposition] = None
    kernel: Optional[KernelBasis] = None
    witness: Optional[RowCombination] = None
    max_geodesic_length: Optional[int] = None

    @property
    def max_abs_value(self) -> Optional[Fraction]:
        if self.decomposition is None:
            return None
        return self.decomposition.max_abs()


class BaseSolver(ABC):
    """Abstract base class for the solution methods."""

    def __init__(self, max_points: Optional[int] = None):
        """
        Initialize the solver.

        Args:
            max_points: Largest set on which geodesic or component searches are attempted
        """
        self.max_points = max_points
        self.logger = logger

    @property
    @abstractmethod
    def method_name(self) -> str:
        """Return the method tag used in reports."""
        pass

    @abstractmethod
    def solve(self, s: PointSet, f: FunctionTable, pins: Optional[PinSet] = None) -> SolveReport:
        """
        Solve Σᵢ uᵢ(xᵢ) = f(x) for x in ``s``.

        Args:
            s: Point set
            f: Right-hand side, total on ``s``
            pins: Prescribed values of the uᵢ

        Returns:
            SolveReport
        """
        pass

    def validate_function(self, s: PointSet, f: FunctionTable) -> None:
        s.require_nonempty(f"{self.method_name} solve")
        if f.domain != s:
            raise PreconditionError("The right-hand side is not defined on exactly the given set")

    def resolve_pins(self, pins: Optional[PinSet], allowed: Iterable[Coordinate]) -> PinSet:
        """
        Pins restricted to ``allowed`` coordinates, absent ones defaulting to 0.

        Raises:
            PreconditionError: when a pin sits outside ``allowed``
        """
        allowed = list(allowed)
        given = pins or PinSet()
        stray = [c for c in given if c not in allowed]
        if stray:
            raise PreconditionError(
                f"The {self.method_name} method pins only "
                + ", ".join(map(str, allowed))
                + "; got "
                + ", ".join(map(str, stray))
            )
        return PinSet({c: given[c] if c in given else 0 for c in allowed})

    def make_report(
        self,
        s: PointSet,
        f: FunctionTable,
        verdict: SolveVerdict,
        pins: PinSet,
        decomposition: Optional[Decomposition] = None,
        kernel: Optional[KernelBasis] = None,
        witness: Optional[RowCombination] = None,
        max_geodesic_length: Optional[int] = None,
    ) -> SolveReport:
        """Re-check a solution against f and the pins, then package it."""
        if decomposition is not None:
            for p in s:
                value = decomposition.evaluate(p)
                if value != f[p]:
                    raise CertificateError(
                        f"{self.method_name}: decomposition gives {format_scalar(value)} at {p}, "
                        f"expected {format_scalar(f[p])}"
                    )
            for c, v in pins.items():
                if c in decomposition and decomposition[c] != v:
                    raise CertificateError(f"{self.method_name}: pin at {c} not honored")
        report = SolveReport(
            method=self.method_name,
            verdict=verdict,
            pins=pins,
            decomposition=decomposition,
            kernel=kernel,
            witness=witness,
            max_geodesic_length=max_geodesic_length,
        )
        self.logger.info(f"{self.method_name} solve on {len(s)} points: {verdict.value}")
        return report
