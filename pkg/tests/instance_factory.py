"""Seeded generators of random spaces, point sets, functions and decompositions."""

import itertools
import random
from fractions import Fraction
from typing import Any, List, Optional, Sequence

from good_set_analyzer.analysis.goodness import full_closure
from good_set_analyzer.linalg.echelon import EchelonBasis
from good_set_analyzer.models.functions import Decomposition, FunctionTable
from good_set_analyzer.models.space import Coordinate, PointSet, Space, incidence_vector


def point_set(values: Sequence[Sequence[object]], tuples: Sequence[Sequence[object]]) -> PointSet:
    """Shorthand for a point set over a freshly built space."""
    return PointSet.from_tuples(Space.from_values(values), tuples)


def random_space(rng: random.Random, n: int, max_values: int, min_values: int = 1) -> Space:
    return Space.from_values(
        [list(range(rng.randint(min_values, max_values))) for _ in range(n)]
    )


def random_point_set(
    rng: random.Random,
    n_choices: Sequence[int] = (2, 3, 4),
    max_points: int = 8,
    max_values: int = 4,
) -> PointSet:
    """Uniformly chosen points of a random space; usually not good."""
    space = random_space(rng, rng.choice(n_choices), max_values)
    universe = list(space.product())
    size = rng.randint(1, min(max_points, len(universe)))
    return PointSet(space, rng.sample(universe, size))


def random_good_set(
    rng: random.Random,
    n_choices: Sequence[int] = (2, 3),
    max_points: int = 8,
    max_values: int = 3,
    min_points: int = 1,
) -> PointSet:
    """Points drawn in random order and kept while their incidence vectors stay independent."""
    space = random_space(rng, rng.choice(n_choices), max_values, min_values=2)
    universe = list(space.product())
    rng.shuffle(universe)
    target = rng.randint(min_points, max_points)
    basis: EchelonBasis[Coordinate] = EchelonBasis()
    chosen = []
    for p in universe:
        if len(chosen) == target:
            break
        if basis.add(incidence_vector(p)):
            chosen.append(p)
    return PointSet(space, chosen)


def random_non_full_good_set(rng: random.Random, **options: Any) -> PointSet:
    while True:
        s = random_good_set(rng, **options)
        if s.deficiency() > s.n - 1:
            return s


def random_full_set(rng: random.Random, **options: Any) -> PointSet:
    return full_closure(random_good_set(rng, **options))


def random_rational(rng: random.Random) -> Fraction:
    return Fraction(rng.randint(-9, 9), rng.randint(1, 5))


def random_decomposition(rng: random.Random, coordinates: Sequence[Coordinate]) -> Decomposition:
    return Decomposition({c: random_rational(rng) for c in coordinates})


def random_function(rng: random.Random, s: PointSet) -> FunctionTable:
    return FunctionTable(s, {p: random_rational(rng) for p in s})


def full_subsets(s: PointSet, size: Optional[int] = None) -> List[PointSet]:
    """
    Every full subset of a good set, by brute force over its subsets.

    Subsets of a good set are good, so fullness reduces to the deficiency count.
    """
    sizes = [size] if size is not None else range(1, len(s) + 1)
    found = []
    for k in sizes:
        for combo in itertools.combinations(s.points, k):
            subset = PointSet(s.space, combo)
            if subset.deficiency() == s.n - 1:
                found.append(subset)
    return found
