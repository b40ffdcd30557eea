"""Exact rank, kernels, pinned solves, span membership and circuit extraction."""

import enum
import logging
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from ..errors import CertificateError, PreconditionError
from ..models.functions import Decomposition, FunctionTable, PinSet
from ..models.space import Coordinate, Point, incidence_vector
from . import rational
from .echelon import EchelonBasis
from .incidence import IncidenceSystem

logger = logging.getLogger(__name__)


class SolveVerdict(enum.Enum):
    UNIQUE = "unique"
    UNDERDETERMINED = "underdetermined"
    INCONSISTENT = "inconsistent"


@dataclass(frozen=True)
class KernelBasis:
    """A basis of a null space; each vector is indexed by ``columns``."""

    columns: Tuple[Coordinate, ...]
    vectors: Tuple[Tuple[Fraction, ...], ...]

    @property
    def dimension(self) -> int:
        return len(self.vectors)

    def is_trivial(self) -> bool:
        return not self.vectors

    def as_decompositions(self) -> List[Decomposition]:
        return [Decomposition(dict(zip(self.columns, vector))) for vector in self.vectors]


@dataclass(frozen=True)
class RowCombination:
    """Integer combination of equations whose left sides cancel but right sides do not."""

    point_coefficients: Dict[Point, int]
    pin_coefficients: Dict[Coordinate, int]
    residual: Fraction


@dataclass(frozen=True)
class SolveResult:
    verdict: SolveVerdict
    decomposition: Optional[Decomposition] = None
    kernel: Optional[KernelBasis] = None
    witness: Optional[RowCombination] = None


@dataclass(frozen=True)
class CircuitVector:
    """A minimal dependent set of points with its normalized integer dependency."""

    support: Tuple[Point, ...]
    coefficients: Tuple[int, ...]

    def items(self) -> List[Tuple[Point, int]]:
        return list(zip(self.support, self.coefficients))

    def formal_sum(self) -> Dict[Coordinate, int]:
        """Coordinatewise sum Σ nᵢ·xᵢ, with zero entries dropped."""
        totals: Dict[Coordinate, int] = defaultdict(int)
        for p, n in self.items():
            for c in p.coordinates():
                totals[c] += n
        return {c: v for c, v in totals.items() if v}


def rank(m: IncidenceSystem) -> int:
    """Rank of the incidence matrix over the rationals."""
    return rational.matrix_rank(m.rows(), m.n_cols)


def _pinned_rows(m: IncidenceSystem, pins: PinSet) -> List[List[Fraction]]:
    for c in pins:
        if c not in m.column_index:
            raise PreconditionError(f"Pin on {c} which is not a column of the system")
    return m.rows() + [m.unit_row(c) for c in pins]


def column_kernel(m: IncidenceSystem, pins: Optional[PinSet] = None) -> KernelBasis:
    """
    Basis of the homogeneous solutions that vanish on the pinned columns.

    Args:
        m: Incidence system
        pins: Pinned coordinates (their values are ignored; the kernel pins them to 0)

    Returns:
        KernelBasis over ``m.columns``
    """
    rows = _pinned_rows(m, pins or PinSet())
    vectors = rational.nullspace(rows, m.n_cols)
    return KernelBasis(tuple(m.columns), tuple(tuple(v) for v in vectors))


def solve_pinned(
    m: IncidenceSystem, rhs: FunctionTable, pins: Optional[PinSet] = None
) -> SolveResult:
    """
    Solve Σᵢ uᵢ(xᵢ) = rhs(x) on every row subject to the pins.

    Pins are extra unit equations. Free variables of an underdetermined system are set
    to 0 so the returned decomposition is deterministic.

    Args:
        m: Incidence system whose rows are the domain of ``rhs``
        rhs: Right-hand side
        pins: Prescribed coordinate values

    Returns:
        SolveResult with verdict Unique, Underdetermined (with kernel) or Inconsistent
        (with a witness row combination)
    """
    pins = pins or PinSet()
    rows = _pinned_rows(m, pins)
    pinned = list(pins)
    b = [rhs[p] for p in m.points] + [pins[c] for c in pinned]
    ncols = m.n_cols
    augmented = [row + [value] for row, value in zip(rows, b)]
    reduced, pivots = rational.rref(augmented, ncols + 1)

    if ncols in pivots:
        witness = _inconsistency_witness(m, rows, b, pinned)
        logger.debug(f"Inconsistent system, residual {witness.residual}")
        return SolveResult(SolveVerdict.INCONSISTENT, witness=witness)

    values = [Fraction(0)] * ncols
    for r, pivot in enumerate(pivots):
        values[pivot] = reduced[r][ncols]
    decomposition = Decomposition(dict(zip(m.columns, values)))

    if len(pivots) == ncols:
        return SolveResult(SolveVerdict.UNIQUE, decomposition=decomposition)
    kernel = column_kernel(m, pins)
    logger.debug(f"Underdetermined system, kernel dimension {kernel.dimension}")
    return SolveResult(SolveVerdict.UNDERDETERMINED, decomposition=decomposition, kernel=kernel)


def _inconsistency_witness(
    m: IncidenceSystem,
    rows: List[List[Fraction]],
    b: List[Fraction],
    pinned: List[Coordinate],
) -> RowCombination:
    left_kernel = rational.nullspace(rational.transpose(rows, m.n_cols), len(rows))
    for y in left_kernel:
        residual = sum((yi * bi for yi, bi in zip(y, b)), Fraction(0))
        if residual:
            coefficients = rational.integer_normalize(y)
            first = next(i for i, v in enumerate(y) if v)
            scale = Fraction(coefficients[first]) / y[first]
            n_points = m.n_rows
            return RowCombination(
                point_coefficients={
                    p: coefficients[i] for i, p in enumerate(m.points) if coefficients[i]
                },
                pin_coefficients={
                    c: coefficients[n_points + k]
                    for k, c in enumerate(pinned)
                    if coefficients[n_points + k]
                },
                residual=residual * scale,
            )
    raise CertificateError("Inconsistent system without a separating row combination")


def in_span(m: IncidenceSystem, v: Union[Mapping[Coordinate, object], Sequence[object]]) -> bool:
    """True iff ``v`` is a rational combination of the rows of ``m``."""
    if isinstance(v, Mapping):
        vector = dict(v)
        for c in vector:
            if c not in m.column_index:
                raise PreconditionError(f"Coordinate {c} is not a column of the system")
    else:
        if len(v) != m.n_cols:
            raise PreconditionError(
                f"Vector has {len(v)} entries, system has {m.n_cols} columns"
            )
        vector = {c: x for c, x in zip(m.columns, v) if x}
    return EchelonBasis(m.sparse_rows()).contains(vector)  # type: ignore[arg-type]


def is_independent(points: Sequence[Point]) -> bool:
    """True iff the incidence vectors of ``points`` are linearly independent."""
    used = dict.fromkeys(c for p in points for c in incidence_vector(p))
    columns = {c: k for k, c in enumerate(used)}
    rows = []
    for p in points:
        row = [Fraction(0)] * len(columns)
        for c in incidence_vector(p):
            row[columns[c]] = Fraction(1)
        rows.append(row)
    # Repeated points give equal rows, so they count as dependent
    return rational.matrix_rank(rows, len(columns)) == len(rows)


def extract_circuit(points: Sequence[Point]) -> CircuitVector:
    """
    Extract a loop from a dependent list of points.

    Points are tried for deletion in the given order; a point is dropped when the
    remainder stays dependent. The surviving support has a one-dimensional row kernel,
    scaled to coprime integers with a positive first coefficient.

    Args:
        points: Points whose incidence vectors are linearly dependent

    Returns:
        The CircuitVector
    """
    support = list(dict.fromkeys(points))
    if len(support) != len(points):
        raise PreconditionError("extract_circuit received duplicate points")
    if is_independent(support):
        raise PreconditionError("Points are linearly independent; no loop exists")

    for p in list(support):
        trial = [q for q in support if q != p]
        if trial and not is_independent(trial):
            support = trial

    kernel = _row_kernel(support)
    if len(kernel) != 1:
        raise CertificateError(f"Circuit support has a {len(kernel)}-dimensional dependency space")
    coefficients = rational.integer_normalize(kernel[0])
    circuit = CircuitVector(tuple(support), tuple(coefficients))
    logger.debug(f"Extracted loop of size {len(support)}: {coefficients}")
    return circuit


def _row_kernel(points: Sequence[Point]) -> List[List[Fraction]]:
    coordinates = list(dict.fromkeys(c for p in points for c in p.coordinates()))
    owned = [set(p.coordinates()) for p in points]
    rows = [[Fraction(int(c in own)) for own in owned] for c in coordinates]
    return rational.nullspace(rows, len(points))


def verify_circuit(circuit: CircuitVector) -> None:
    """Raise CertificateError unless the circuit's sum vanishes and its support is minimal."""
    if len(circuit.support) != len(circuit.coefficients) or not circuit.support:
        raise CertificateError("Loop support and coefficients differ in length")
    if any(n == 0 for n in circuit.coefficients):
        raise CertificateError("Loop has a zero coefficient")
    residue = circuit.formal_sum()
    if residue:
        raise CertificateError(f"Loop sum does not vanish at {sorted(map(str, residue))}")
    for p in circuit.support:
        rest = [q for q in circuit.support if q != p]
        if rest and not is_independent(rest):
            raise CertificateError(f"Loop is not minimal: dropping {p} leaves a dependency")
