"""Solution methods for the decomposition equation."""

from typing import Any

from .base_solver import BaseSolver, SolveReport
from .boundary import BoundarySolver, solve_with_boundary
from .componentwise import ComponentwiseSolver, solve_componentwise
from .diagnostics import BoundDiagnostics, bound_diagnostics, gauge_freedom
from .direct import DirectSolver, solve_direct
from .geodesic import GeodesicSolver, base_pins, solve_via_geodesics
from .geodesic_matrix import GeodesicMatrix

SOLVE_METHODS = ("direct", "geodesic", "componentwise", "boundary")


def get_solver(method: str, **options: Any) -> BaseSolver:
    """Get the solver for a method tag."""
    if method == "direct":
        return DirectSolver(**options)
    elif method == "geodesic":
        return GeodesicSolver(**options)
    elif method == "componentwise":
        return ComponentwiseSolver(**options)
    elif method == "boundary":
        return BoundarySolver(**options)
    else:
        raise ValueError(f"Unsupported solve method: {method}. Supported: {', '.join(SOLVE_METHODS)}")


__all__ = [
    "BaseSolver",
    "BoundDiagnostics",
    "BoundarySolver",
    "ComponentwiseSolver",
    "DirectSolver",
    "GeodesicMatrix",
    "GeodesicSolver",
    "SOLVE_METHODS",
    "SolveReport",
    "base_pins",
    "bound_diagnostics",
    "gauge_freedom",
    "get_solver",
    "solve_componentwise",
    "solve_direct",
    "solve_via_geodesics",
    "solve_with_boundary",
]
