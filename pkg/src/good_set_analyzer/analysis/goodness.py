"""Goodness, fullness and the constructions that extend good sets.

A finite set is good exactly when the incidence vectors of its points are linearly
independent; a dependency among them, made minimal, is a loop. A good set is full when
it is maximal inside the product of its own projections, equivalently when its
deficiency Σᵢ|ΠᵢS| − |S| equals n − 1.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple

from ..errors import CertificateError, PreconditionError
from ..linalg.echelon import EchelonBasis
from ..linalg.exact import CircuitVector, column_kernel, extract_circuit, verify_circuit
from ..linalg.incidence import IncidenceSystem
from ..models.functions import Decomposition, PinSet
from ..models.space import Coordinate, Point, PointSet, Space, incidence_vector

logger = logging.getLogger(__name__)

Loop = CircuitVector


@dataclass(frozen=True)
class GoodnessVerdict:
    """Outcome of a goodness test; a loop certifies a negative answer."""

    good: bool
    loop: Optional[Loop] = None


def _basis_of(points: Iterable[Point]) -> EchelonBasis[Coordinate]:
    return EchelonBasis(incidence_vector(p) for p in points)


def is_good(s: PointSet) -> GoodnessVerdict:
    """
    Decide whether every function on ``s`` is a sum of univariate functions.

    Points are inserted into an echelon basis in order; the first point that fails to
    raise the rank closes a dependent prefix, from which the loop is extracted.

    Args:
        s: Nonempty point set

    Returns:
        GoodnessVerdict, with a verified loop when ``s`` is not good
    """
    s.require_nonempty("is_good")
    basis: EchelonBasis[Coordinate] = EchelonBasis()
    for position, p in enumerate(s):
        if not basis.add(incidence_vector(p)):
            loop = extract_circuit(s.points[: position + 1])
            verify_circuit(loop)
            logger.debug(f"Set of {len(s)} points is not good; loop of size {len(loop.support)}")
            return GoodnessVerdict(False, loop)
    return GoodnessVerdict(True)


def require_good(s: PointSet, operation: str) -> None:
    verdict = is_good(s)
    if not verdict.good:
        assert verdict.loop is not None
        raise PreconditionError(
            f"{operation} requires a good set; loop found on "
            + ", ".join(str(p) for p in verdict.loop.support)
        )


def addable_points(s: PointSet) -> List[Point]:
    """Points of Π₁S×⋯×ΠₙS outside ``s`` that keep ``s`` good when added alone."""
    require_good(s, "addable_points")
    basis = _basis_of(s)
    return [
        q for q in s.product_of_projections() if q not in s and not basis.contains(incidence_vector(q))
    ]


def is_full(s: PointSet, method: str = "deficiency") -> bool:
    """
    Decide whether ``s`` is a maximal good set in the product of its projections.

    Args:
        s: Nonempty point set
        method: ``"deficiency"`` (good and deficiency n − 1) or ``"span"`` (good and
            every candidate's incidence vector already in the row span)

    Returns:
        True iff ``s`` is full
    """
    s.require_nonempty("is_full")
    if not is_good(s).good:
        return False
    if method == "deficiency":
        return s.deficiency() == s.n - 1
    if method == "span":
        basis = _basis_of(s)
        return all(
            basis.contains(incidence_vector(q)) for q in s.product_of_projections() if q not in s
        )
    raise ValueError(f"Unknown fullness method: {method}")


def extend_to_maximal(s: PointSet) -> PointSet:
    """Greedily add points of the whole space, in lexicographic order, while goodness holds."""
    s.require_nonempty("extend_to_maximal")
    require_good(s, "extend_to_maximal")
    basis = _basis_of(s)
    added = [q for q in s.space.product() if q not in s and basis.add(incidence_vector(q))]
    logger.info(f"Maximal extension added {len(added)} points")
    return s.with_points(added)


def full_closure(s: PointSet) -> PointSet:
    """
    The lexicographic greedy full superset of ``s`` with the same projections.

    Args:
        s: Nonempty good set

    Returns:
        A full set F ⊇ S with ΠᵢF = ΠᵢS
    """
    s.require_nonempty("full_closure")
    require_good(s, "full_closure")
    target = s.n - 1
    excess = s.deficiency() - target
    basis = _basis_of(s)
    added: List[Point] = []
    # Lexicographic order over the projections makes the closure deterministic
    for q in s.product_of_projections():
        if excess == 0:
            break
        if q not in s and basis.add(incidence_vector(q)):
            added.append(q)
            excess -= 1
    closure = s.with_points(added)
    if closure.deficiency() != target:
        raise CertificateError(f"Full closure ended with deficiency {closure.deficiency()}")
    return closure


def theorem4_split(s: PointSet) -> PointSet:
    """
    A full F ⊇ S with the same projections such that F∖S is full as well.

    Starts from S plus its first addable point x⁰. While F is not full, a nontrivial
    homogeneous solution U on F vanishing at x⁰'s first n − 1 coordinates is taken; the
    first coordinate aⱼ (axis-major) where U is nonzero replaces the j-th coordinate of
    x⁰ to give the next point. Every step lowers the deficiency by exactly one.

    Args:
        s: Good set that is not full

    Returns:
        The set F
    """
    s.require_nonempty("theorem4_split")
    require_good(s, "theorem4_split")
    n = s.n
    if s.deficiency() == n - 1:
        raise PreconditionError("theorem4_split requires a set that is not full")

    candidates = addable_points(s)
    if not candidates:
        raise CertificateError("Set with deficiency above n-1 has no addable point")
    # x0 is kept fixed; its first n - 1 coordinates anchor every kernel we take
    x0 = candidates[0]
    f = s.with_points([x0])
    pins = PinSet.zeros(x0.coordinate(i) for i in range(n - 1))

    while f.deficiency() != n - 1:
        kernel = column_kernel(IncidenceSystem(f), pins)
        if kernel.is_trivial():
            raise CertificateError("Non-full good set has a trivial pinned kernel")
        u = kernel.as_decompositions()[0]
        # Swapping one coordinate of x0 for a column where u is nonzero breaks u
        nxt = _first_nonzero_replacement(f, x0, u)
        if nxt in f:
            raise CertificateError(f"Replacement point {nxt} already in the set")
        f = f.with_points([nxt])
        logger.debug(f"Split step added {nxt}, deficiency now {f.deficiency()}")

    # Re-check the contract before handing F back
    rest = f.difference(s)
    if not (is_full(f) and is_full(rest)):
        raise CertificateError("Split produced a set that is not full")
    if f.projections() != s.projections():
        raise CertificateError("Split changed the projections")
    if len(rest) != s.deficiency() - (n - 1):
        raise CertificateError("Split added an unexpected number of points")
    return f


def _first_nonzero_replacement(f: PointSet, x0: Point, u: Decomposition) -> Point:
    for j in range(f.n):
        for c in f.projection(j):
            if u[c] != 0:
                return x0.replace(j, c.value)
    raise CertificateError("Kernel vector vanishes everywhere")


def boundary_comb(space: Space, boundary: Iterable[Coordinate]) -> Tuple[Point, PointSet]:
    """
    The comb through the least boundary value of each axis.

    Args:
        space: Ambient space
        boundary: Boundary coordinates meeting every axis

    Returns:
        The comb's base point (b₁,…,bₙ) and the comb
        ∪ᵢ {b₁}×⋯×Bᵢ×⋯×{bₙ}
    """
    per_axis: List[List[Coordinate]] = [[] for _ in range(space.n)]
    for c in boundary:
        per_axis[c.axis].append(c)
    missing = [space.axes[i].name for i, coords in enumerate(per_axis) if not coords]
    if missing:
        raise PreconditionError(
            "The boundary must meet every axis to build F(S,B); missing: " + ", ".join(missing)
        )
    for coords in per_axis:
        coords.sort(key=space.coordinate_key)
    base = Point(tuple(coords[0].value for coords in per_axis))
    teeth = [base.replace(i, c.value) for i, coords in enumerate(per_axis) for c in coords]
    return base, PointSet(space, dict.fromkeys(teeth))


def associated_full_set(s: PointSet, boundary: Iterable[Coordinate]) -> PointSet:
    """
    F(S,B) = S ∪ R where R is the comb of the boundary.

    Args:
        s: Good set
        boundary: A boundary of ``s`` meeting every axis

    Returns:
        The full set F(S,B)
    """
    s.require_nonempty("associated_full_set")
    require_good(s, "associated_full_set")
    boundary = list(boundary)
    present = set(s.coordinates())
    outside = [c for c in boundary if c not in present]
    if outside:
        raise PreconditionError(
            "Boundary coordinates outside the projections: "
            + ", ".join(s.space.describe(c) for c in outside)
        )
    _, comb = boundary_comb(s.space, boundary)
    clash = [p for p in comb if p in s]
    if clash:
        raise CertificateError(f"Comb point {clash[0]} already lies in S; B is not a boundary")
    f = s.union(comb)
    if not is_full(comb):
        raise CertificateError("The comb of the boundary is not full")
    if not is_full(f):
        raise CertificateError("F(S,B) is not full; B is not a boundary of S")
    if f.projections() != s.projections():
        raise CertificateError("F(S,B) changed the projections")
    return f
