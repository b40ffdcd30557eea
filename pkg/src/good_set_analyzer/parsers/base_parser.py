"""Base parser class for instance files."""

import logging
import os
from abc import ABC, abstractmethod
from fractions import Fraction
from typing import Any, Dict, List, Mapping

from ..errors import InstanceParseError, PreconditionError
from ..models.functions import FunctionTable, PinSet, to_scalar
from ..models.instance import Instance
from ..models.space import Point, PointSet, Space

logger = logging.getLogger(__name__)


class BaseInstanceParser(ABC):
    """Abstract base class for instance file loaders; subclasses handle one file format."""

    def __init__(self) -> None:
        self.logger = logger

    @property
    @abstractmethod
    def format_name(self) -> str:
        """Return the file format name."""
        pass

    @property
    @abstractmethod
    def extensions(self) -> List[str]:
        """Return the file extensions this parser accepts."""
        pass

    @abstractmethod
    def load_raw(self, file_path: str) -> Any:
        """
        Read a file into plain Python data.

        Args:
            file_path: Path to the instance file

        Returns:
            The decoded document
        """
        pass

    @abstractmethod
    def dump_raw(self, data: Dict[str, Any], file_path: str) -> None:
        """Write plain Python data to ``file_path`` in this format."""
        pass

    def parse_file(self, file_path: str) -> Instance:
        """
        Load and validate an instance file.

        Args:
            file_path: Path to the instance file

        Returns:
            The Instance
        """
        self.logger.info(f"Loading {self.format_name} instance from {file_path}")
        try:
            data = self.load_raw(file_path)
        except OSError as e:
            raise InstanceParseError(f"Cannot read {file_path}: {e}") from e
        except UnicodeDecodeError as e:
            # Instance files are UTF-8 text in every format
            self.logger.error(f"Instance file {file_path} is not valid UTF-8: {e}")
            raise InstanceParseError(f"{file_path}: not valid UTF-8 ({e})") from e
        default_name = os.path.splitext(os.path.basename(file_path))[0]
        instance = self.build_instance(data, default_name)
        self.logger.info(
            f"Loaded instance '{instance.name}': n={instance.space.n}, {len(instance.points)} points"
        )
        return instance

    def save(self, instance: Instance, file_path: str) -> None:
        data: Dict[str, Any] = {"name": instance.name}
        data.update(instance.to_dict())
        self.dump_raw(data, file_path)
        self.logger.info(f"Wrote {self.format_name} instance to {file_path}")

    def build_instance(self, data: Any, default_name: str = "") -> Instance:
        """Validate decoded data against the instance schema and build the Instance."""
        if not isinstance(data, Mapping):
            raise InstanceParseError("Instance document must be a mapping")
        try:
            space = self._space(data.get("axes"))
            points = self._points(space, data.get("points"))
            function = self._function(points, data["f"]) if "f" in data else None
            pins = self._pins(space, data["pins"]) if "pins" in data else None
            measure = self._measure(points, data["measure"]) if "measure" in data else None
        except PreconditionError as e:
            raise InstanceParseError(str(e)) from e
        name = data.get("name", default_name)
        if not isinstance(name, str):
            raise InstanceParseError("'name' must be a string")
        return Instance(space, points, function, pins, measure, name)

    def _space(self, axes: Any) -> Space:
        if not isinstance(axes, list) or not axes:
            raise InstanceParseError("'axes' must be a nonempty list")
        names, values = [], []
        for k, axis in enumerate(axes):
            if not isinstance(axis, Mapping) or "name" not in axis or "values" not in axis:
                raise InstanceParseError(f"Axis #{k} must have 'name' and 'values'")
            if not isinstance(axis["values"], list):
                raise InstanceParseError(f"Axis '{axis['name']}': 'values' must be a list")
            names.append(str(axis["name"]))
            values.append([self._label(v) for v in axis["values"]])
        return Space.from_values(values, names)

    def _points(self, space: Space, points: Any) -> PointSet:
        if not isinstance(points, list):
            raise InstanceParseError("'points' must be a list")
        parsed = []
        for k, p in enumerate(points):
            if not isinstance(p, list):
                raise InstanceParseError(f"Point #{k} must be a list of value labels")
            parsed.append(Point(tuple(self._label(v) for v in p)))
        return PointSet(space, parsed)

    def _function(self, points: PointSet, values: Any) -> FunctionTable:
        if not isinstance(values, Mapping):
            raise InstanceParseError("'f' must map point indices to rationals")
        given = {self._index(k, len(points), "f"): to_scalar(v) for k, v in values.items()}
        return FunctionTable(points, {p: given.get(k, Fraction(0)) for k, p in enumerate(points)})

    def _pins(self, space: Space, pins: Any) -> PinSet:
        if not isinstance(pins, list):
            raise InstanceParseError("'pins' must be a list")
        values = {}
        for k, pin in enumerate(pins):
            if not isinstance(pin, Mapping) or not {"axis", "value", "rational"} <= set(pin):
                raise InstanceParseError(f"Pin #{k} must have 'axis', 'value' and 'rational'")
            c = space.coordinate(space.axis_index(str(pin["axis"])), self._label(pin["value"]))
            if c in values:
                raise InstanceParseError(f"Coordinate {space.describe(c)} is pinned twice")
            values[c] = to_scalar(pin["rational"])
        return PinSet(values)

    def _measure(self, points: PointSet, weights: Any) -> Dict[int, Fraction]:
        if not isinstance(weights, Mapping):
            raise InstanceParseError("'measure' must map point indices to rationals")
        return {self._index(k, len(points), "measure"): to_scalar(v) for k, v in weights.items()}

    @staticmethod
    def _label(value: Any) -> str:
        if value is None or isinstance(value, (bool, float, list, dict)):
            raise InstanceParseError(f"Value label {value!r} must be a string or integer")
        return str(value)

    @staticmethod
    def _index(key: Any, size: int, section: str) -> int:
        try:
            index = int(key)
        except (TypeError, ValueError):
            raise InstanceParseError(f"'{section}' key {key!r} is not a point index") from None
        if not 0 <= index < size:
            raise InstanceParseError(f"'{section}' index {index} out of range (0..{size - 1})")
        return index

