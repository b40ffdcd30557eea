"""Report payloads and writers."""

from .payloads import (
    boundary_payload,
    decomposition_payload,
    diagnostics_payload,
    geodesic_payload,
    goodness_payload,
    loop_payload,
    partition_payload,
    point_set_payload,
    simplicial_payload,
    solve_payload,
)
from .report_writer import OUTPUT_FORMATS, ReportWriter, render_json, render_text

__all__ = [
    "OUTPUT_FORMATS",
    "ReportWriter",
    "boundary_payload",
    "decomposition_payload",
    "diagnostics_payload",
    "geodesic_payload",
    "goodness_payload",
    "loop_payload",
    "partition_payload",
    "point_set_payload",
    "render_json",
    "render_text",
    "simplicial_payload",
    "solve_payload",
]
