"""Conversion of analysis results to JSON-ready payloads.

Points are referred to by their 0-based index in the instance's point order, and every
rational is a canonical ``"p/q"`` string.
"""

from typing import Any, Dict, List, Optional, Sequence

from ..analysis.goodness import GoodnessVerdict, Loop
from ..analysis.structure import BoundaryConstruction, ComponentPartition, Geodesic
from ..errors import CertificateError
from ..linalg.exact import KernelBasis, RowCombination, verify_circuit
from ..measures.finite_measure import FiniteMeasure, SimplicialVerdict, marginals
from ..models.functions import Decomposition, PinSet, format_scalar
from ..models.space import Coordinate, Point, PointSet, Space
from ..solvers.base_solver import SolveReport
from ..solvers.diagnostics import BoundDiagnostics


def indices(points: PointSet, subset: Sequence[Point]) -> List[int]:
    return [points.index_of(p) for p in subset]


def coordinate_payload(space: Space, c: Coordinate) -> Dict[str, str]:
    return {"axis": space.axes[c.axis].name, "value": c.value}


def loop_payload(points: PointSet, loop: Loop, verify: bool = True) -> Dict[str, Any]:
    if verify:
        verify_circuit(loop)
        stray = [p for p in loop.support if p not in points]
        if stray:
            raise CertificateError(f"Loop point {stray[0]} is not in the instance")
    return {
        "points": indices(points, loop.support),
        "coefficients": list(loop.coefficients),
    }


def goodness_payload(points: PointSet, verdict: GoodnessVerdict, verify: bool = True) -> Dict[str, Any]:
    payload: Dict[str, Any] = {"good": verdict.good}
    if verdict.loop is not None:
        payload["loop"] = loop_payload(points, verdict.loop, verify)
    return payload


def decomposition_payload(space: Space, d: Decomposition) -> Dict[str, Dict[str, str]]:
    """``{axis name: {value label: rational}}`` in declaration order."""
    ordered = sorted(d.coordinates(), key=space.coordinate_key)
    payload: Dict[str, Dict[str, str]] = {}
    for c in ordered:
        payload.setdefault(space.axes[c.axis].name, {})[c.value] = format_scalar(d[c])
    return payload


def pins_payload(space: Space, pins: PinSet) -> List[Dict[str, str]]:
    return [
        dict(coordinate_payload(space, c), rational=format_scalar(v)) for c, v in pins.items()
    ]


def kernel_payload(space: Space, kernel: KernelBasis) -> List[Dict[str, Dict[str, str]]]:
    return [decomposition_payload(space, d) for d in kernel.as_decompositions()]


def witness_payload(points: PointSet, witness: RowCombination) -> Dict[str, Any]:
    space = points.space
    return {
        "points": {str(points.index_of(p)): n for p, n in witness.point_coefficients.items()},
        "pins": [
            dict(coordinate_payload(space, c), coefficient=n)
            for c, n in witness.pin_coefficients.items()
        ],
        "residual": format_scalar(witness.residual),
    }


def solve_payload(points: PointSet, report: SolveReport) -> Dict[str, Any]:
    space = points.space
    payload: Dict[str, Any] = {
        "method": report.method,
        "verdict": report.verdict.value,
        "pins": pins_payload(space, report.pins),
    }
    if report.decomposition is not None:
        payload["decomposition"] = decomposition_payload(space, report.decomposition)
        payload["max_abs_value"] = format_scalar(report.decomposition.max_abs())
    if report.kernel is not None:
        payload["kernel"] = kernel_payload(space, report.kernel)
    if report.witness is not None:
        payload["witness"] = witness_payload(points, report.witness)
    if report.max_geodesic_length is not None:
        payload["max_geodesic_length"] = report.max_geodesic_length
    return payload


def point_set_payload(points: PointSet, subset: PointSet) -> Dict[str, Any]:
    """Indices of the points already in the instance plus the labels of new ones."""
    return {
        "size": len(subset),
        "points": [list(p.coords) for p in subset],
        "original": [points.index_of(p) for p in subset if p in points],
        "added": [list(p.coords) for p in subset if p not in points],
    }


def geodesic_payload(points: PointSet, g: Optional[Geodesic]) -> Dict[str, Any]:
    if g is None:
        return {"related": False}
    return {"related": True, "length": g.length, "points": indices(points, g.points.points)}


def partition_payload(points: PointSet, partition: ComponentPartition) -> Dict[str, Any]:
    return {
        "count": len(partition),
        "components": [indices(points, component.points) for component in partition],
    }


def boundary_payload(points: PointSet, construction: BoundaryConstruction) -> Dict[str, Any]:
    space = points.space
    ei = construction.ei
    return {
        "components": partition_payload(points, construction.partition)["components"],
        "cross_section": indices(points, construction.cross_section),
        "ei_classes": {
            space.axes[i].name: [[c.value for c in members] for members in axis]
            for i, axis in enumerate(ei.classes)
        },
        "generators": [
            coordinate_payload(space, ei.classes[i][k][0]) for i, k in construction.generators
        ],
        "relations": [list(row) for row in construction.relations],
        "pivots": list(construction.pivots),
        "basis": list(construction.basis),
        "boundary": [coordinate_payload(space, c) for c in construction.boundary],
        "meets_every_axis": construction.meets_every_axis(),
    }


def diagnostics_payload(points: PointSet, diagnostics: BoundDiagnostics) -> Dict[str, Any]:
    return {
        "base": points.index_of(diagnostics.base),
        "max_geodesic_length": diagnostics.max_geodesic_length,
        "mean_geodesic_length": format_scalar(diagnostics.mean_geodesic_length),
        "geodesic_lengths": {
            str(points.index_of(p)): length for p, length in diagnostics.geodesic_lengths.items()
        },
        "length_distribution": {
            str(length): count for length, count in diagnostics.length_distribution().items()
        },
        "max_abs_value": format_scalar(diagnostics.max_abs_value),
        "worst_point": points.index_of(diagnostics.worst_point),
    }


def marginals_payload(space: Space, m: FiniteMeasure) -> Dict[str, Dict[str, str]]:
    return {
        space.axes[i].name: {c.value: format_scalar(v) for c, v in axis.items()}
        for i, axis in enumerate(marginals(m))
    }


def simplicial_payload(points: PointSet, m: FiniteMeasure, verdict: SimplicialVerdict) -> Dict[str, Any]:
    payload: Dict[str, Any] = {
        "simplicial": verdict.simplicial,
        "marginals": marginals_payload(points.space, m),
    }
    if verdict.perturbation is not None and verdict.eps is not None:
        payload["perturbation"] = loop_payload(points, verdict.perturbation)
        payload["eps"] = format_scalar(verdict.eps)
    return payload
