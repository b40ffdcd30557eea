"""Relatedness, geodesics, full components, E_i classes and boundary sets.

Two points of a good set are related when some full subset contains both; the smallest
such subset is their geodesic, and it is unique. Related points form the full
components, which in turn generate the per-axis E_i classes used to pick a boundary.
"""

import itertools
import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx
from networkx.utils import UnionFind

from ..errors import CertificateError, PreconditionError
from ..linalg import rational
from ..linalg.exact import column_kernel
from ..linalg.incidence import IncidenceSystem
from ..models.functions import PinSet
from ..models.space import Coordinate, Point, PointSet, common_coordinate_kinds
from .goodness import is_full, require_good, theorem4_split

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Geodesic:
    """The smallest full subset containing two related points."""

    source: Point
    target: Point
    points: PointSet

    @property
    def length(self) -> int:
        return len(self.points)


@dataclass(frozen=True)
class ComponentPartition:
    """
    The related (equivalently full) components of a good set.

    Components are ordered by their lexicographically least point; each component keeps
    the order of the partitioned set.
    """

    points: PointSet
    components: Tuple[PointSet, ...]
    assignment: Dict[Point, int]

    def __len__(self) -> int:
        return len(self.components)

    def __iter__(self) -> Iterator[PointSet]:
        return iter(self.components)

    def component_of(self, p: Point) -> int:
        try:
            return self.assignment[p]
        except KeyError:
            raise PreconditionError(f"Point {p} is not in the partitioned set") from None


@dataclass(frozen=True)
class EiClasses:
    """For each axis, the partition of ΠᵢS into E_i classes, each in canonical order."""

    classes: Tuple[Tuple[Tuple[Coordinate, ...], ...], ...]

    def axis_classes(self, axis: int) -> Tuple[Tuple[Coordinate, ...], ...]:
        return self.classes[axis]

    def class_of(self, c: Coordinate) -> int:
        for k, members in enumerate(self.classes[c.axis]):
            if c in members:
                return k
        raise PreconditionError(f"Coordinate {c} is not in any E_{c.axis + 1} class")

    def count(self) -> int:
        return sum(len(axis) for axis in self.classes)

    def generators(self) -> List[Tuple[int, int]]:
        """(axis, class index) pairs, axis-major then class order."""
        return [(i, k) for i, axis in enumerate(self.classes) for k in range(len(axis))]


@dataclass(frozen=True)
class BoundaryConstruction:
    """Everything produced on the way from a good set to one of its boundaries."""

    partition: ComponentPartition
    cross_section: Tuple[Point, ...]
    ei: EiClasses
    generators: Tuple[Tuple[int, int], ...]
    relations: Tuple[Tuple[int, ...], ...]
    pivots: Tuple[int, ...]
    basis: Tuple[int, ...]
    boundary: Tuple[Coordinate, ...]

    def boundary_by_axis(self) -> List[List[Coordinate]]:
        per_axis: List[List[Coordinate]] = [[] for _ in self.ei.classes]
        for c in self.boundary:
            per_axis[c.axis].append(c)
        return per_axis

    def meets_every_axis(self) -> bool:
        return all(self.boundary_by_axis())


def _require_member(s: PointSet, p: Point) -> None:
    if p not in s:
        raise PreconditionError(f"Point {p} is not in the set")


def _require_size(s: PointSet, max_points: Optional[int]) -> None:
    if max_points is not None and len(s) > max_points:
        raise PreconditionError(
            f"Set of {len(s)} points exceeds the search limit of {max_points} points"
        )


def _coordinate_links(s: PointSet) -> UnionFind:
    """Union-find over the points of ``s``, merging points that share a coordinate."""
    links = UnionFind(s.points)
    holders: Dict[Coordinate, Point] = {}
    for p in s:
        for c in p.coordinates():
            if c in holders:
                links.union(holders[c], p)
            else:
                holders[c] = p
    return links


def _full_subsets_of_size(
    seed: Sequence[Point], others: Sequence[Point], size: int, n: int
) -> Iterator[Tuple[Point, ...]]:
    """
    Yield every full subset of ``seed ∪ others`` of the given size that contains ``seed``.

    The inputs are subsets of a good set, so every candidate is good and only the
    deficiency budget needs checking: one added point lowers the deficiency by at most 1.
    """
    target = n - 1
    chosen = list(seed)
    counts: Counter = Counter(c for p in seed for c in p.coordinates())

    def extend(start: int) -> Iterator[Tuple[Point, ...]]:
        slack = size - len(chosen)
        excess = len(counts) - len(chosen) - target
        if excess > slack:
            return
        if slack == 0:
            if excess == 0:
                yield tuple(chosen)
            return
        for idx in range(start, len(others) - slack + 1):
            p = others[idx]
            chosen.append(p)
            counts.update(p.coordinates())
            yield from extend(idx + 1)
            chosen.pop()
            for c in p.coordinates():
                counts[c] -= 1
                if not counts[c]:
                    del counts[c]

    yield from extend(0)


def geodesic(
    s: PointSet, x: Point, y: Point, max_points: Optional[int] = None
) -> Optional[Geodesic]:
    """
    Find the unique smallest full subset of ``s`` containing ``x`` and ``y``.

    Iterative deepening on the cardinality; at the first cardinality with a hit every
    full subset of that size is enumerated and uniqueness is asserted.

    Args:
        s: Good set
        x: First endpoint
        y: Second endpoint
        max_points: Refuse sets larger than this

    Returns:
        The Geodesic, or None when the points are not related
    """
    s.require_nonempty("geodesic")
    _require_member(s, x)
    _require_member(s, y)
    _require_size(s, max_points)
    require_good(s, "geodesic")
    if x == y:
        return Geodesic(x, y, s.subset([x]))

    # A full set (n >= 2) cannot split into two parts sharing no coordinate, so every
    # full subset containing x lies in the group of points linked to x
    links = _coordinate_links(s)
    if links[x] != links[y]:
        logger.debug(f"{x} and {y} share no chain of coordinates")
        return None
    others = [p for p in s.canonical() if p != x and p != y and links[p] == links[x]]

    seed = [x, y]
    # Deepen on the cardinality; the first size with a hit gives the geodesic
    for size in range(2, len(others) + 3):
        found = list(_full_subsets_of_size(seed, others, size, s.n))
        if not found:
            continue
        if len(found) != 1:
            raise CertificateError(
                f"{len(found)} distinct full subsets of size {size} contain {x} and {y}"
            )
        logger.debug(f"Geodesic {x} -> {y} has length {size}")
        return Geodesic(x, y, s.subset(found[0]))
    logger.debug(f"No full subset contains both {x} and {y}")
    return None


def related(s: PointSet, x: Point, y: Point, max_points: Optional[int] = None) -> bool:
    """True iff some full subset of ``s`` contains both points."""
    return geodesic(s, x, y, max_points) is not None


def related_components(
    s: PointSet, verify: bool = True, max_points: Optional[int] = None
) -> ComponentPartition:
    """
    Partition a good set into its related components.

    Pairs already joined by an earlier geodesic are skipped; every point of a found
    geodesic is merged, since the geodesic itself is a full subset containing each pair.

    Args:
        s: Good set
        verify: Check that every class is full and that distinct classes share at most
            n − 2 kinds of coordinates
        max_points: Refuse sets larger than this

    Returns:
        ComponentPartition
    """
    s.require_nonempty("related_components")
    _require_size(s, max_points)
    require_good(s, "related_components")

    if s.deficiency() == s.n - 1:
        classes = [list(s)]
    else:
        ordered = s.canonical().points
        links = _coordinate_links(s)
        uf = UnionFind(ordered)
        searches = 0
        for x, y in itertools.combinations(ordered, 2):
            # Already joined, or never related since no chain of coordinates links them
            if uf[x] == uf[y] or links[x] != links[y]:
                continue
            searches += 1
            found = geodesic(s, x, y)
            if found is not None:
                uf.union(*found.points)
        logger.debug(f"Component search ran {searches} geodesic searches on {len(s)} points")
        classes = [list(group) for group in uf.to_sets()]

    key = s.space.point_key
    classes.sort(key=lambda group: min(key(p) for p in group))
    components = tuple(s.subset(group) for group in classes)
    assignment = {p: k for k, component in enumerate(components) for p in component}
    partition = ComponentPartition(s, components, assignment)
    if verify:
        verify_partition(partition)
    logger.info(f"Found {len(partition)} related components in {len(s)} points")
    return partition


def verify_partition(partition: ComponentPartition) -> None:
    """
    Raise CertificateError unless every class is full and distinct classes overlap little.

    A full class contains every pair of its points, so a closure step can never merge
    points that are not related.
    """
    n = partition.points.n
    for k, component in enumerate(partition.components):
        if not is_full(component):
            raise CertificateError(f"Related component {k} is not a full set")
    for a, b in itertools.combinations(partition.components, 2):
        shared = common_coordinate_kinds(a, b)
        if shared > n - 2:
            raise CertificateError(
                f"Two full components share {shared} kinds of coordinates (at most {n - 2} allowed)"
            )


def full_component(s: PointSet, x: Point, partition: Optional[ComponentPartition] = None) -> PointSet:
    """The largest full subset of ``s`` containing ``x``."""
    _require_member(s, x)
    partition = partition or related_components(s)
    return partition.components[partition.component_of(x)]


def cross_section(partition: ComponentPartition) -> Tuple[Point, ...]:
    """The lexicographically least point of each component."""
    key = partition.points.space.point_key
    return tuple(min(component, key=key) for component in partition.components)


def ei_classes(s: PointSet, partition: Optional[ComponentPartition] = None) -> EiClasses:
    """
    Per-axis classes of values joined by chains of components overlapping on that axis.

    Args:
        s: Good set
        partition: Precomputed components of ``s``

    Returns:
        EiClasses, classes ordered by their least value
    """
    partition = partition or related_components(s)
    per_axis = []
    for i in range(s.n):
        values = s.projection(i)
        uf = UnionFind(values)
        for component in partition:
            uf.union(*component.projection(i))
        groups = [tuple(sorted(group, key=s.space.coordinate_key)) for group in uf.to_sets()]
        groups.sort(key=lambda group: s.space.coordinate_key(group[0]))
        per_axis.append(tuple(groups))
    return EiClasses(tuple(per_axis))


def is_boundary(s: PointSet, coordinates: Sequence[Coordinate]) -> bool:
    """
    True iff prescribing values at ``coordinates`` makes every decomposition on ``s`` unique.

    For a good set that holds exactly when the pinned homogeneous system has only the
    trivial solution.
    """
    require_good(s, "is_boundary")
    present = set(s.coordinates())
    if any(c not in present for c in coordinates):
        return False
    kernel = column_kernel(IncidenceSystem(s), PinSet.zeros(coordinates))
    return kernel.is_trivial()


def boundary(
    s: PointSet,
    verify: bool = True,
    partition: Optional[ComponentPartition] = None,
    max_points: Optional[int] = None,
) -> BoundaryConstruction:
    """
    Build a minimal boundary of a good set from its components and E_i classes.

    The generators are the E_i classes. Each component contributes the relation "the
    sum of its n incident classes is 0". After exact elimination in canonical column
    order the free columns form a basis, and the least coordinate of each basis class is
    taken into B.

    Args:
        s: Good set
        verify: Check that B pins the homogeneous system to zero, that |B| equals the
            deficiency, and that B meets each E_i class at most once
        partition: Precomputed components
        max_points: Refuse sets larger than this

    Returns:
        BoundaryConstruction
    """
    s.require_nonempty("boundary")
    require_good(s, "boundary")
    partition = partition or related_components(s, verify=verify, max_points=max_points)
    ei = ei_classes(s, partition)
    generators = ei.generators()
    column = {g: j for j, g in enumerate(generators)}

    relations: List[Tuple[int, ...]] = []
    for component in partition:
        row = [0] * len(generators)
        for i in range(s.n):
            row[column[(i, ei.class_of(component.projection(i)[0]))]] = 1
        relations.append(tuple(row))

    _, pivots = rational.rref([[Fraction(v) for v in row] for row in relations], len(generators))
    pivot_set = set(pivots)
    basis = tuple(j for j in range(len(generators)) if j not in pivot_set)
    chosen = tuple(ei.classes[generators[j][0]][generators[j][1]][0] for j in basis)

    construction = BoundaryConstruction(
        partition=partition,
        cross_section=cross_section(partition),
        ei=ei,
        generators=tuple(generators),
        relations=tuple(relations),
        pivots=tuple(pivots),
        basis=basis,
        boundary=chosen,
    )
    logger.info(
        f"Boundary of size {len(chosen)} from {len(generators)} classes and {len(relations)} relations"
    )
    if verify:
        verify_boundary(s, construction)
    return construction


def verify_boundary(s: PointSet, construction: BoundaryConstruction) -> None:
    """Raise CertificateError unless the construction's B is a minimal boundary of ``s``."""
    b = construction.boundary
    for i, axis in enumerate(construction.ei.classes):
        for members in axis:
            hits = [c for c in b if c in members]
            if len(hits) > 1:
                raise CertificateError(
                    f"Boundary meets an E_{i + 1} class in {len(hits)} points"
                )
    if len(b) != s.deficiency():
        raise CertificateError(
            f"Boundary has {len(b)} coordinates, deficiency is {s.deficiency()}"
        )
    if not is_boundary(s, b):
        raise CertificateError("Pinning the boundary leaves a nontrivial homogeneous solution")


def split_boundary(s: PointSet) -> Tuple[Coordinate, ...]:
    """
    The boundary ∪ᵢΠᵢ(F∖S) read off the split F of a good, non-full set.

    It meets every axis, so F(S,B) can always be formed from it.
    """
    f = theorem4_split(s)
    rest = f.difference(s)
    return tuple(rest.coordinates())


def linked_components(s: PointSet) -> List[PointSet]:
    """
    Components of a two-axis set seen as a bipartite multigraph with one edge per point.

    Components are ordered like related_components orders them.
    """
    if s.n != 2:
        raise PreconditionError(f"linked_components needs n = 2, got n = {s.n}")
    s.require_nonempty("linked_components")
    graph = nx.MultiGraph()
    for p in s:
        graph.add_edge(p.coordinate(0), p.coordinate(1), point=p)
    groups = []
    for nodes in nx.connected_components(graph):
        edges = graph.subgraph(nodes).edges(data="point")
        groups.append([point for _, _, point in edges])
    key = s.space.point_key
    groups.sort(key=lambda group: min(key(p) for p in group))
    return [s.subset(group) for group in groups]
