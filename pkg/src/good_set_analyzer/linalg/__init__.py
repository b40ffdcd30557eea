"""Exact rational linear algebra over the incidence system."""

from .echelon import EchelonBasis
from .exact import (
    CircuitVector,
    KernelBasis,
    RowCombination,
    SolveResult,
    SolveVerdict,
    column_kernel,
    extract_circuit,
    in_span,
    is_independent,
    rank,
    solve_pinned,
    verify_circuit,
)
from .incidence import IncidenceSystem

__all__ = [
    "CircuitVector",
    "EchelonBasis",
    "IncidenceSystem",
    "KernelBasis",
    "RowCombination",
    "SolveResult",
    "SolveVerdict",
    "column_kernel",
    "extract_circuit",
    "in_span",
    "is_independent",
    "rank",
    "solve_pinned",
    "verify_circuit",
]
