"""Finite probability measures, their marginals and simplicial certification.

A measure is simplicial when it is an extreme point of the set of probability measures
sharing its one-dimensional marginals. For finite supports this happens exactly when the
support is good: a loop on the support gives a signed measure with zero marginals, and
on a good support no such nonzero signed measure exists.
"""

import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, List, Mapping, Optional, Tuple

from ..analysis.goodness import Loop, is_good
from ..errors import CertificateError, PreconditionError
from ..models.functions import ScalarLike, format_scalar, to_scalar
from ..models.space import Coordinate, Point, PointSet

logger = logging.getLogger(__name__)

MarginalVector = Tuple[Dict[Coordinate, Fraction], ...]


class FiniteMeasure:
    """Positive rational weights on the points of a support, summing to 1."""

    def __init__(self, support: PointSet, weights: Mapping[Point, ScalarLike]):
        support.require_nonempty("FiniteMeasure")
        missing = [p for p in support if p not in weights]
        extra = [p for p in weights if p not in support]
        if missing or extra:
            raise PreconditionError(
                "Measure weights must be given exactly on the support"
                + (f"; missing {', '.join(map(str, missing))}" if missing else "")
                + (f"; outside {', '.join(map(str, extra))}" if extra else "")
            )
        values = {p: to_scalar(weights[p]) for p in support}
        nonpositive = [p for p, w in values.items() if w <= 0]
        if nonpositive:
            raise PreconditionError(
                f"Measure weights must be positive on the support; not at {', '.join(map(str, nonpositive))}"
            )
        total = sum(values.values(), Fraction(0))
        if total != 1:
            raise PreconditionError(f"Measure has total mass {format_scalar(total)}, expected 1")
        self.support = support
        self._weights = values

    @classmethod
    def uniform(cls, support: PointSet) -> "FiniteMeasure":
        weight = Fraction(1, len(support))
        return cls(support, {p: weight for p in support})

    @classmethod
    def point_mass(cls, support: PointSet) -> "FiniteMeasure":
        if len(support) != 1:
            raise PreconditionError("A point mass needs a one-point support")
        return cls(support, {support[0]: 1})

    @classmethod
    def from_signed(cls, space_points: PointSet, masses: Mapping[Point, Fraction]) -> "FiniteMeasure":
        """The measure with the given nonnegative masses, dropping zero atoms from the support."""
        negative = [p for p, m in masses.items() if m < 0]
        if negative:
            raise PreconditionError(f"Negative mass at {', '.join(map(str, negative))}")
        support = PointSet(space_points.space, (p for p in space_points if masses.get(p, 0)))
        return cls(support, {p: masses[p] for p in support})

    def __getitem__(self, p: Point) -> Fraction:
        return self._weights.get(p, Fraction(0))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FiniteMeasure):
            return NotImplemented
        return self.support == other.support and self._weights == other._weights

    def items(self) -> List[Tuple[Point, Fraction]]:
        return [(p, self._weights[p]) for p in self.support]

    def perturbed(self, nu: Loop, eps: Fraction) -> "FiniteMeasure":
        """μ + ε·ν for a signed measure ν given by loop coefficients on support points."""
        masses = dict(self._weights)
        for p, n in nu.items():
            if p not in self.support:
                raise PreconditionError(f"Perturbation point {p} is outside the support")
            masses[p] = masses[p] + eps * n
        return FiniteMeasure.from_signed(self.support, masses)


def marginals(m: FiniteMeasure) -> MarginalVector:
    """Mass of each coordinate value, one map per axis, in canonical coordinate order."""
    support = m.support
    result = []
    for i in range(support.n):
        masses = {c: Fraction(0) for c in support.projection(i)}
        for p, w in m.items():
            masses[p.coordinate(i)] += w
        result.append(masses)
    return tuple(result)


@dataclass(frozen=True)
class SimplicialVerdict:
    """
    Whether a measure is extreme among measures with its marginals.

    When it is not, ``perturbation`` holds loop coefficients ν on support points and
    ``eps`` > 0 is such that μ ± εν are both probability measures with μ's marginals.
    """

    simplicial: bool
    perturbation: Optional[Loop] = None
    eps: Optional[Fraction] = None

    def perturbed_pair(self, m: FiniteMeasure) -> Tuple[FiniteMeasure, FiniteMeasure]:
        if self.perturbation is None or self.eps is None:
            raise PreconditionError("A simplicial verdict carries no perturbation")
        return m.perturbed(self.perturbation, self.eps), m.perturbed(self.perturbation, -self.eps)


def is_simplicial(m: FiniteMeasure) -> SimplicialVerdict:
    """
    Decide extremality of ``m`` among measures with the same marginals.

    Args:
        m: Finite probability measure

    Returns:
        SimplicialVerdict; a non-simplicial verdict carries a verified perturbation
    """
    verdict = is_good(m.support)
    if verdict.good:
        return SimplicialVerdict(True)
    loop = verdict.loop
    assert loop is not None
    eps = min(m[p] / abs(n) for p, n in loop.items())
    result = SimplicialVerdict(False, loop, eps)
    _verify_perturbation(m, result)
    logger.debug(f"Measure is not simplicial; loop of size {len(loop.support)}, eps {eps}")
    return result


def _verify_perturbation(m: FiniteMeasure, verdict: SimplicialVerdict) -> None:
    plus, minus = verdict.perturbed_pair(m)
    reference = marginals(m)
    for other in (plus, minus):
        if _nonzero(marginals(other)) != _nonzero(reference):
            raise CertificateError("Perturbed measure changes the marginals")


def _nonzero(vector: MarginalVector) -> Tuple[Dict[Coordinate, Fraction], ...]:
    return tuple({c: v for c, v in axis.items() if v} for axis in vector)


def is_mu_set(s: PointSet) -> bool:
    """True iff every probability measure supported on ``s`` is simplicial."""
    return is_mu_set_with_witness(s)[0]


def is_mu_set_with_witness(s: PointSet) -> Tuple[bool, Optional[FiniteMeasure]]:
    """
    Marginal-uniqueness test with a counterexample.

    Returns:
        (True, None) when ``s`` is an MU-set, otherwise (False, μ) for the uniform measure
        on ``s``, which is then not simplicial
    """
    s.require_nonempty("is_mu_set")
    uniform = FiniteMeasure.uniform(s)
    verdict = is_simplicial(uniform)
    if verdict.simplicial:
        return True, None
    return False, uniform
