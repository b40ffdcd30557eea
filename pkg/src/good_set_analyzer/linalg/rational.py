"""Thin exact-arithmetic layer over sympy's DomainMatrix on QQ.

Only this module touches sympy domain elements; callers exchange ``Fraction`` lists.
"""

import math
from fractions import Fraction
from typing import List, Sequence, Tuple

from sympy.polys.domains import QQ
from sympy.polys.matrices import DomainMatrix

Matrix = List[List[Fraction]]


def _to_qq(value: Fraction):  # type: ignore[no-untyped-def]
    return QQ(value.numerator, value.denominator)


def _from_qq(value) -> Fraction:  # type: ignore[no-untyped-def]
    return Fraction(int(value.numerator), int(value.denominator))


def _domain_matrix(rows: Sequence[Sequence[Fraction]], ncols: int) -> DomainMatrix:
    return DomainMatrix(
        [[_to_qq(Fraction(v)) for v in row] for row in rows], (len(rows), ncols), QQ
    )


def rref(rows: Sequence[Sequence[Fraction]], ncols: int) -> Tuple[Matrix, Tuple[int, ...]]:
    """
    Reduced row echelon form over the rationals.

    Args:
        rows: Dense rows, each of length ``ncols``
        ncols: Number of columns

    Returns:
        The reduced rows (same count as the input) and the tuple of pivot columns
    """
    if not rows or ncols == 0:
        return [list(map(Fraction, row)) for row in rows], ()
    reduced, pivots = _domain_matrix(rows, ncols).rref()
    return [[_from_qq(v) for v in row] for row in reduced.to_list()], tuple(pivots)


def matrix_rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Basis of {x : rows·x = 0}, one vector per free column in column order."""
    reduced, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis: Matrix = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        vector = [Fraction(0)] * ncols
        vector[free] = Fraction(1)
        for r, pivot in enumerate(pivots):
            vector[pivot] = -reduced[r][free]
        basis.append(vector)
    return basis


def transpose(rows: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    return [[Fraction(rows[r][c]) for r in range(len(rows))] for c in range(ncols)]


def inverse(rows: Sequence[Sequence[Fraction]]) -> Matrix:
    """Exact inverse of a square nonsingular matrix."""
    size = len(rows)
    if any(len(row) != size for row in rows):
        raise ValueError("inverse requires a square matrix")
    if matrix_rank(rows, size) != size:
        raise ValueError("matrix is singular")
    inv = _domain_matrix(rows, size).inv()
    return [[_from_qq(v) for v in row] for row in inv.to_list()]


def mat_vec(rows: Sequence[Sequence[Fraction]], vector: Sequence[Fraction]) -> List[Fraction]:
    return [sum((a * b for a, b in zip(row, vector)), Fraction(0)) for row in rows]


def integer_normalize(vector: Sequence[Fraction]) -> List[int]:
    """Scale a nonzero rational vector to coprime integers with first nonzero entry positive."""
    denominators = 1
    for v in vector:
        denominators = denominators * v.denominator // math.gcd(denominators, v.denominator)
    integers = [int(v * denominators) for v in vector]
    common = 0
    for v in integers:
        common = math.gcd(common, abs(v))
    if common == 0:
        raise ValueError("cannot normalize the zero vector")
    integers = [v // common for v in integers]
    first = next(v for v in integers if v != 0)
    if first < 0:
        integers = [-v for v in integers]
    return integers
