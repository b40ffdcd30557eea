"""Finite measures and marginal uniqueness."""

from .finite_measure import (
    FiniteMeasure,
    MarginalVector,
    SimplicialVerdict,
    is_mu_set,
    is_mu_set_with_witness,
    is_simplicial,
    marginals,
)

__all__ = [
    "FiniteMeasure",
    "MarginalVector",
    "SimplicialVerdict",
    "is_mu_set",
    "is_mu_set_with_witness",
    "is_simplicial",
    "marginals",
]
