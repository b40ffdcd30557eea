"""Exact scalar values, functions on point sets, decompositions and pins."""

import logging
import re
from fractions import Fraction
from typing import Callable, Dict, Iterable, Iterator, Mapping, Optional, Tuple, Union

from ..errors import InstanceParseError, PreconditionError
from .space import Coordinate, Point, PointSet

logger = logging.getLogger(__name__)

Scalar = Fraction
ScalarLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"^\s*[+-]?\d+(\s*/\s*\d+)?\s*$")


def to_scalar(value: object) -> Fraction:
    """
    Convert an integer, Fraction or ``"p/q"`` string to an exact scalar.

    Floats (and strings holding decimals) are rejected so no rounding can creep in.

    Args:
        value: Value to convert

    Returns:
        The exact rational value
    """
    if isinstance(value, bool):
        raise InstanceParseError(f"Boolean {value!r} is not a rational")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        if not _RATIONAL_RE.match(value):
            raise InstanceParseError(f"'{value}' is not an integer or 'p/q' rational")
        try:
            return Fraction(value.replace(" ", ""))
        except ZeroDivisionError:
            raise InstanceParseError(f"'{value}' has a zero denominator") from None
    raise InstanceParseError(f"{value!r} ({type(value).__name__}) is not a rational")


def format_scalar(value: Fraction) -> str:
    """Canonical text form: ``"p"`` for integers, ``"p/q"`` in lowest terms otherwise."""
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


class FunctionTable:
    """A total function from a point set to exact scalars."""

    def __init__(self, domain: PointSet, values: Mapping[Point, ScalarLike]):
        missing = [p for p in domain if p not in values]
        if missing:
            raise PreconditionError(
                f"Function is not defined at {', '.join(str(p) for p in missing)}"
            )
        extra = [p for p in values if p not in domain]
        if extra:
            raise PreconditionError(
                f"Function has values outside its domain: {', '.join(str(p) for p in extra)}"
            )
        self.domain = domain
        self._values: Dict[Point, Fraction] = {p: to_scalar(values[p]) for p in domain}

    @classmethod
    def zero(cls, domain: PointSet) -> "FunctionTable":
        return cls(domain, {p: Fraction(0) for p in domain})

    @classmethod
    def indicator(cls, domain: PointSet, point: Point) -> "FunctionTable":
        domain.index_of(point)
        return cls(domain, {p: Fraction(int(p == point)) for p in domain})

    @classmethod
    def from_callable(
        cls, domain: PointSet, func: Callable[[Point], ScalarLike]
    ) -> "FunctionTable":
        return cls(domain, {p: func(p) for p in domain})

    @classmethod
    def from_decomposition(cls, domain: PointSet, d: "Decomposition") -> "FunctionTable":
        """The function x ↦ Σᵢ uᵢ(xᵢ) on ``domain``."""
        return cls(domain, {p: d.evaluate(p) for p in domain})

    def __getitem__(self, p: Point) -> Fraction:
        return self._values[p]

    def __iter__(self) -> Iterator[Point]:
        return iter(self.domain)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FunctionTable):
            return NotImplemented
        return self.domain == other.domain and self._values == other._values

    def items(self) -> Iterator[Tuple[Point, Fraction]]:
        for p in self.domain:
            yield p, self._values[p]

    def restrict(self, domain: PointSet) -> "FunctionTable":
        return FunctionTable(domain, {p: self._values[p] for p in domain})

    def extend(self, domain: PointSet, values: Mapping[Point, ScalarLike]) -> "FunctionTable":
        """Extend to a larger domain, taking new values from ``values``."""
        merged: Dict[Point, ScalarLike] = dict(self._values)
        for p in domain:
            if p not in merged:
                merged[p] = values[p]
        return FunctionTable(domain, merged)

    def combine(self, alpha: ScalarLike, other: "FunctionTable", beta: ScalarLike) -> "FunctionTable":
        """α·self + β·other on a common domain."""
        a, b = to_scalar(alpha), to_scalar(beta)
        return FunctionTable(
            self.domain, {p: a * self._values[p] + b * other[p] for p in self.domain}
        )


class Decomposition:
    """Per-axis functions uᵢ, stored as one map from coordinates to scalars."""

    def __init__(self, values: Mapping[Coordinate, ScalarLike]):
        self._values: Dict[Coordinate, Fraction] = {c: to_scalar(v) for c, v in values.items()}

    @classmethod
    def zero(cls, coordinates: Iterable[Coordinate]) -> "Decomposition":
        return cls({c: Fraction(0) for c in coordinates})

    def __getitem__(self, c: Coordinate) -> Fraction:
        return self._values[c]

    def __contains__(self, c: object) -> bool:
        return c in self._values

    def __len__(self) -> int:
        return len(self._values)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Decomposition):
            return NotImplemented
        return self._values == other._values

    def __repr__(self) -> str:
        body = ", ".join(f"{c}={format_scalar(v)}" for c, v in self._values.items())
        return f"Decomposition({body})"

    def items(self) -> Iterator[Tuple[Coordinate, Fraction]]:
        return iter(self._values.items())

    def coordinates(self) -> Tuple[Coordinate, ...]:
        return tuple(self._values)

    def value(self, axis: int, label: str) -> Fraction:
        return self[Coordinate(axis, label)]

    def axis_values(self, axis: int) -> Dict[str, Fraction]:
        return {c.value: v for c, v in self._values.items() if c.axis == axis}

    def covers(self, coordinates: Iterable[Coordinate]) -> bool:
        return all(c in self._values for c in coordinates)

    def restrict(self, coordinates: Iterable[Coordinate]) -> "Decomposition":
        return Decomposition({c: self._values[c] for c in coordinates})

    def merged(self, other: "Decomposition") -> "Decomposition":
        """Union of two decompositions; shared coordinates must agree exactly."""
        values = dict(self._values)
        for c, v in other.items():
            if c in values and values[c] != v:
                raise PreconditionError(
                    f"Decompositions disagree at {c}: {format_scalar(values[c])} vs {format_scalar(v)}"
                )
            values[c] = v
        return Decomposition(values)

    def combine(self, alpha: ScalarLike, other: "Decomposition", beta: ScalarLike) -> "Decomposition":
        """α·self + β·other on the union of both domains (absent entries count as 0)."""
        a, b = to_scalar(alpha), to_scalar(beta)
        keys = list(self._values) + [c for c in other.coordinates() if c not in self._values]
        return Decomposition(
            {
                c: a * self._values.get(c, Fraction(0))
                + b * (other[c] if c in other else Fraction(0))
                for c in keys
            }
        )

    def max_abs(self) -> Fraction:
        return max((abs(v) for v in self._values.values()), default=Fraction(0))

    def evaluate(self, p: Point) -> Fraction:
        total = Fraction(0)
        for c in p.coordinates():
            if c not in self._values:
                raise PreconditionError(f"Decomposition has no value for {c} (point {p})")
            total += self._values[c]
        return total


def evaluate(d: Decomposition, p: Point) -> Fraction:
    """Σᵢ uᵢ(pᵢ)."""
    return d.evaluate(p)


class PinSet(Mapping[Coordinate, Fraction]):
    """Prescribed values of the uᵢ at selected coordinates."""

    def __init__(self, values: Optional[Mapping[Coordinate, ScalarLike]] = None):
        self._values: Dict[Coordinate, Fraction] = {
            c: to_scalar(v) for c, v in (values or {}).items()
        }

    @classmethod
    def zeros(cls, coordinates: Iterable[Coordinate]) -> "PinSet":
        return cls({c: 0 for c in coordinates})

    def __getitem__(self, c: Coordinate) -> Fraction:
        return self._values[c]

    def __iter__(self) -> Iterator[Coordinate]:
        return iter(self._values)

    def __len__(self) -> int:
        return len(self._values)

    def __repr__(self) -> str:
        body = ", ".join(f"{c}={format_scalar(v)}" for c, v in self._values.items())
        return f"PinSet({body})"

    def validate_against(self, s: PointSet) -> None:
        """Every pinned coordinate must lie in some projection of ``s``."""
        present = set(s.coordinates())
        outside = [c for c in self._values if c not in present]
        if outside:
            raise PreconditionError(
                "Pinned coordinates outside every projection: "
                + ", ".join(s.space.describe(c) for c in outside)
            )

    def without(self, c: Coordinate) -> "PinSet":
        return PinSet({k: v for k, v in self._values.items() if k != c})
