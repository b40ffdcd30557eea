"""Spaces, coordinates, points and point sets.

A :class:`Space` is the product Ω = X₁×⋯×Xₙ of finitely many axes. Axis values are
string labels namespaced by their axis index, so two axes never share an element even
when they reuse a label. Everything in this module is immutable after construction.
"""

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from ..errors import PreconditionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Axis:
    """One factor of the product space: a name and its ordered value labels."""

    name: str
    values: Tuple[str, ...]


@dataclass(frozen=True)
class Coordinate:
    """A value label together with the index of the axis it belongs to."""

    axis: int
    value: str

    def __str__(self) -> str:
        return f"ax{self.axis + 1}:{self.value}"


@dataclass(frozen=True)
class Point:
    """An n-tuple of value labels, one per axis."""

    coords: Tuple[str, ...]

    def __iter__(self) -> Iterator[str]:
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, i: int) -> str:
        return self.coords[i]

    def __str__(self) -> str:
        return "(" + ",".join(self.coords) + ")"

    def coordinate(self, i: int) -> Coordinate:
        return Coordinate(i, self.coords[i])

    def coordinates(self) -> Tuple[Coordinate, ...]:
        return tuple(Coordinate(i, v) for i, v in enumerate(self.coords))

    def replace(self, axis: int, value: str) -> "Point":
        """Return the point with its ``axis``-th coordinate replaced by ``value``."""
        coords = list(self.coords)
        coords[axis] = value
        return Point(tuple(coords))


@dataclass(frozen=True)
class Space:
    """The Cartesian product of n ≥ 2 finite, nonempty axes."""

    axes: Tuple[Axis, ...]
    _index: Dict[Tuple[int, str], int] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        if len(self.axes) < 2:
            raise PreconditionError(f"A space needs at least 2 axes, got {len(self.axes)}")
        names = [axis.name for axis in self.axes]
        if len(set(names)) != len(names):
            raise PreconditionError(f"Axis names must be unique: {names}")
        index: Dict[Tuple[int, str], int] = {}
        for i, axis in enumerate(self.axes):
            if not axis.values:
                raise PreconditionError(f"Axis '{axis.name}' has no values")
            for position, label in enumerate(axis.values):
                if (i, label) in index:
                    raise PreconditionError(
                        f"Duplicate value '{label}' on axis '{axis.name}'"
                    )
                index[(i, label)] = position
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_values(
        cls, values: Sequence[Sequence[object]], names: Optional[Sequence[str]] = None
    ) -> "Space":
        """
        Build a space from per-axis value lists.

        Args:
            values: One sequence of labels per axis; labels are converted with ``str``.
            names: Optional axis names (default ``x1, x2, ...``).

        Returns:
            The space.
        """
        if names is None:
            names = [f"x{i + 1}" for i in range(len(values))]
        if len(names) != len(values):
            raise PreconditionError("Number of axis names and value lists differ")
        return cls(
            tuple(
                Axis(str(name), tuple(str(v) for v in axis_values))
                for name, axis_values in zip(names, values)
            )
        )

    @property
    def n(self) -> int:
        return len(self.axes)

    def axis_index(self, name: str) -> int:
        for i, axis in enumerate(self.axes):
            if axis.name == name:
                return i
        raise PreconditionError(f"Unknown axis '{name}'")

    def value_index(self, axis: int, label: str) -> int:
        try:
            return self._index[(axis, label)]
        except KeyError:
            raise PreconditionError(
                f"Value '{label}' is not on axis {self._axis_name(axis)}"
            ) from None

    def contains(self, coordinate: Coordinate) -> bool:
        return (coordinate.axis, coordinate.value) in self._index

    def coordinate(self, axis: int, label: object) -> Coordinate:
        coordinate = Coordinate(axis, str(label))
        self.value_index(axis, coordinate.value)
        return coordinate

    def point(self, *labels: object) -> Point:
        """Build and validate a point from its labels."""
        p = Point(tuple(str(label) for label in labels))
        self.validate_point(p)
        return p

    def validate_point(self, p: Point) -> None:
        if len(p) != self.n:
            raise PreconditionError(f"Point {p} has arity {len(p)}, space has {self.n} axes")
        for i, label in enumerate(p):
            if (i, label) not in self._index:
                raise PreconditionError(
                    f"Point {p}: '{label}' is not a value of axis {self._axis_name(i)}"
                )

    def coordinate_key(self, coordinate: Coordinate) -> Tuple[int, int]:
        return coordinate.axis, self._index[(coordinate.axis, coordinate.value)]

    def point_key(self, p: Point) -> Tuple[int, ...]:
        return tuple(self._index[(i, label)] for i, label in enumerate(p))

    def coordinates(self) -> List[Coordinate]:
        """All coordinates of the space, axis-major in declaration order."""
        return [Coordinate(i, v) for i, axis in enumerate(self.axes) for v in axis.values]

    def product(self) -> Iterator[Point]:
        """Enumerate Ω lexicographically."""
        for labels in itertools.product(*(axis.values for axis in self.axes)):
            yield Point(labels)

    def describe(self, coordinate: Coordinate) -> str:
        return f"{self.axes[coordinate.axis].name}:{coordinate.value}"

    def _axis_name(self, axis: int) -> str:
        if 0 <= axis < self.n:
            return f"'{self.axes[axis].name}'"
        return f"#{axis}"


class PointSet:
    """A finite set of distinct points of a space, kept in insertion order."""

    def __init__(self, space: Space, points: Iterable[Point] = ()):
        self.space = space
        ordered: List[Point] = []
        positions: Dict[Point, int] = {}
        for p in points:
            space.validate_point(p)
            if p in positions:
                raise PreconditionError(f"Duplicate point {p}")
            positions[p] = len(ordered)
            ordered.append(p)
        self._points = tuple(ordered)
        self._positions = positions

    @classmethod
    def from_tuples(cls, space: Space, tuples: Iterable[Sequence[object]]) -> "PointSet":
        return cls(space, (space.point(*t) for t in tuples))

    @property
    def points(self) -> Tuple[Point, ...]:
        return self._points

    @property
    def n(self) -> int:
        return self.space.n

    def __iter__(self) -> Iterator[Point]:
        return iter(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __getitem__(self, index: int) -> Point:
        return self._points[index]

    def __contains__(self, p: object) -> bool:
        return p in self._positions

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PointSet):
            return NotImplemented
        return self.space == other.space and set(self._points) == set(other._points)

    def __hash__(self) -> int:
        return hash(frozenset(self._points))

    def __repr__(self) -> str:
        return "PointSet{" + ", ".join(str(p) for p in self._points) + "}"

    def index_of(self, p: Point) -> int:
        try:
            return self._positions[p]
        except KeyError:
            raise PreconditionError(f"Point {p} is not in the set") from None

    def is_empty(self) -> bool:
        return not self._points

    def require_nonempty(self, operation: str) -> None:
        if not self._points:
            raise PreconditionError(f"{operation} requires a nonempty point set")

    def projection(self, i: int) -> Tuple[Coordinate, ...]:
        """The distinct i-th coordinates of the points, in axis declaration order."""
        if not 0 <= i < self.n:
            raise PreconditionError(f"Axis index {i} out of range for n={self.n}")
        values = {p[i] for p in self._points}
        return tuple(
            sorted(
                (Coordinate(i, v) for v in values),
                key=self.space.coordinate_key,
            )
        )

    def projections(self) -> List[Tuple[Coordinate, ...]]:
        return [self.projection(i) for i in range(self.n)]

    def coordinates(self) -> List[Coordinate]:
        """The union of all projections, axis-major in canonical order."""
        return [c for i in range(self.n) for c in self.projection(i)]

    def coordinate_count(self) -> int:
        return sum(len({p[i] for p in self._points}) for i in range(self.n))

    def deficiency(self) -> int:
        """Σᵢ|ΠᵢS| − |S|."""
        self.require_nonempty("deficiency")
        return self.coordinate_count() - len(self._points)

    def canonical(self) -> "PointSet":
        """The same set in lexicographic order of axis-major value indices."""
        return PointSet(self.space, sorted(self._points, key=self.space.point_key))

    def product_of_projections(self) -> Iterator[Point]:
        """Enumerate Π₁S×⋯×ΠₙS lexicographically."""
        value_lists = [[c.value for c in self.projection(i)] for i in range(self.n)]
        for labels in itertools.product(*value_lists):
            yield Point(labels)

    def with_points(self, points: Iterable[Point]) -> "PointSet":
        return PointSet(self.space, list(self._points) + [p for p in points if p not in self])

    def union(self, other: "PointSet") -> "PointSet":
        return self.with_points(other)

    def difference(self, other: Iterable[Point]) -> "PointSet":
        removed = set(other)
        return PointSet(self.space, (p for p in self._points if p not in removed))

    def intersection(self, other: "PointSet") -> "PointSet":
        return PointSet(self.space, (p for p in self._points if p in other))

    def subset(self, points: Iterable[Point]) -> "PointSet":
        """A subset in this set's order; every given point must belong to the set."""
        chosen = set(points)
        for p in chosen:
            self.index_of(p)
        return PointSet(self.space, (p for p in self._points if p in chosen))

    def is_subset_of(self, other: "PointSet") -> bool:
        return all(p in other for p in self._points)


def projection(s: PointSet, i: int) -> Tuple[Coordinate, ...]:
    """Πᵢ S as a tuple of coordinates in canonical order."""
    return s.projection(i)


def incidence_vector(p: Point) -> Dict[Coordinate, int]:
    """The 0/1 evaluation functional of ``p``: one entry per axis."""
    return {c: 1 for c in p.coordinates()}


def deficiency(s: PointSet) -> int:
    return s.deficiency()


def common_coordinate_kinds(a: PointSet, b: PointSet) -> int:
    """Number of axes i with ΠᵢA ∩ ΠᵢB nonempty."""
    return sum(1 for i in range(a.n) if {p[i] for p in a} & {p[i] for p in b})
