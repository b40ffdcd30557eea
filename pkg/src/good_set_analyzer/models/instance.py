"""A parsed analysis instance: space, points and the optional data attached to them."""

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Dict, Optional

from .functions import FunctionTable, PinSet, format_scalar
from .space import PointSet, Space


@dataclass(frozen=True)
class Instance:
    """Everything an instance file may carry."""

    space: Space
    points: PointSet
    function: Optional[FunctionTable] = None
    pins: Optional[PinSet] = None
    measure_weights: Optional[Dict[int, Fraction]] = None
    name: str = ""

    def to_dict(self) -> Dict[str, Any]:
        """Serialize to the instance-file schema (rationals as strings)."""
        data: Dict[str, Any] = {
            "axes": [{"name": axis.name, "values": list(axis.values)} for axis in self.space.axes],
            "points": [list(p.coords) for p in self.points],
        }
        if self.function is not None:
            data["f"] = {
                str(index): format_scalar(value)
                for index, (_, value) in enumerate(self.function.items())
                if value != 0
            }
        if self.pins is not None:
            data["pins"] = [
                {
                    "axis": self.space.axes[c.axis].name,
                    "value": c.value,
                    "rational": format_scalar(v),
                }
                for c, v in self.pins.items()
            ]
        if self.measure_weights is not None:
            data["measure"] = {
                str(index): format_scalar(weight)
                for index, weight in sorted(self.measure_weights.items())
            }
        return data

    def digest(self) -> str:
        """SHA-256 of the canonical JSON form."""
        canonical = json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(canonical.encode("utf-8")).hexdigest()
