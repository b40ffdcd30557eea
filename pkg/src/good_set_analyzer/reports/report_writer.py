"""Report assembly and JSON / text output."""

import json
import logging
from typing import Any, Dict, List, Optional

from ..models.instance import Instance
from ..utils.file_utils import prepare_output_file

logger = logging.getLogger(__name__)

OUTPUT_FORMATS = ("json", "txt")


class ReportWriter:
    """Builds the report document for one command and writes it out."""

    def __init__(self, output_format: str = "json", include_timing: bool = False):
        """
        Initialize the writer.

        Args:
            output_format: ``json`` or ``txt``
            include_timing: Add the elapsed time to reports (makes them differ run to run)
        """
        if output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Unsupported output format: {output_format}")
        self.output_format = output_format
        self.include_timing = include_timing
        self.logger = logger

    def build(
        self,
        command: str,
        instance: Optional[Instance],
        result: Dict[str, Any],
        options: Optional[Dict[str, Any]] = None,
        elapsed: Optional[float] = None,
    ) -> Dict[str, Any]:
        report: Dict[str, Any] = {
            "command": {"name": command, "options": options or {}},
            "result": result,
        }
        if instance is not None:
            report["instance"] = {"name": instance.name, "digest": instance.digest()}
        if self.include_timing and elapsed is not None:
            report["timing"] = {"elapsed_seconds": round(elapsed, 6)}
        return report

    def render(self, report: Dict[str, Any]) -> str:
        if self.output_format == "json":
            return render_json(report)
        return render_text(report)

    def write(self, report: Dict[str, Any], output_file: Optional[str] = None) -> str:
        """
        Render the report; write it to ``output_file`` when given.

        Returns:
            The rendered text
        """
        text = self.render(report)
        if output_file:
            with open(prepare_output_file(output_file), "w", encoding="utf-8") as f:
                f.write(text)
            self.logger.info(f"Report written to {output_file}")
        return text


def render_json(report: Dict[str, Any]) -> str:
    return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def render_text(report: Dict[str, Any]) -> str:
    """Indented ``key: value`` rendering of the same document."""
    lines: List[str] = []
    _render(report, 0, lines)
    return "\n".join(lines) + "\n"


def _render(value: Any, depth: int, lines: List[str]) -> None:
    pad = "  " * depth
    if isinstance(value, dict):
        for key, item in value.items():
            if isinstance(item, (dict, list)) and item and not _is_flat(item):
                lines.append(f"{pad}{key}:")
                _render(item, depth + 1, lines)
            else:
                lines.append(f"{pad}{key}: {_inline(item)}")
    elif isinstance(value, list):
        for item in value:
            if isinstance(item, (dict, list)) and not _is_flat(item):
                lines.append(f"{pad}-")
                _render(item, depth + 1, lines)
            else:
                lines.append(f"{pad}- {_inline(item)}")
    else:
        lines.append(f"{pad}{_inline(value)}")


def _is_flat(value: Any) -> bool:
    items = value.values() if isinstance(value, dict) else value
    return all(not isinstance(item, (dict, list)) for item in items)


def _inline(value: Any) -> str:
    if isinstance(value, bool):
        return "yes" if value else "no"
    if value is None:
        return "-"
    if isinstance(value, list):
        return "[" + ", ".join(_inline(v) for v in value) + "]"
    if isinstance(value, dict):
        return "{" + ", ".join(f"{k}: {_inline(v)}" for k, v in value.items()) + "}"
    return str(value)
