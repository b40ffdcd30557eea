"""Goodness, fullness and component structure of point sets."""

from .goodness import (
    GoodnessVerdict,
    Loop,
    addable_points,
    associated_full_set,
    boundary_comb,
    extend_to_maximal,
    full_closure,
    is_full,
    is_good,
    require_good,
    theorem4_split,
)
from .structure import (
    BoundaryConstruction,
    ComponentPartition,
    EiClasses,
    Geodesic,
    boundary,
    cross_section,
    ei_classes,
    full_component,
    geodesic,
    is_boundary,
    linked_components,
    related,
    related_components,
    split_boundary,
    verify_boundary,
    verify_partition,
)

__all__ = [
    "BoundaryConstruction",
    "ComponentPartition",
    "EiClasses",
    "Geodesic",
    "GoodnessVerdict",
    "Loop",
    "addable_points",
    "associated_full_set",
    "boundary",
    "boundary_comb",
    "cross_section",
    "ei_classes",
    "extend_to_maximal",
    "full_closure",
    "full_component",
    "geodesic",
    "is_boundary",
    "is_full",
    "is_good",
    "linked_components",
    "related",
    "related_components",
    "require_good",
    "split_boundary",
    "theorem4_split",
    "verify_boundary",
    "verify_partition",
]
