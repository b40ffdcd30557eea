"""JSON instance files."""

import json
from typing import Any, Dict, List

from ..errors import InstanceParseError
from .base_parser import BaseInstanceParser


class JSONInstanceParser(BaseInstanceParser):
    """UTF-8 JSON instance files."""

    @property
    def format_name(self) -> str:
        return "JSON"

    @property
    def extensions(self) -> List[str]:
        return [".json"]

    def load_raw(self, file_path: str) -> Any:
        with open(file_path, "r", encoding="utf-8") as f:
            try:
                return json.load(f)
            except json.JSONDecodeError as e:
                self.logger.error(f"Failed to parse JSON file {file_path}: {e}")
                raise InstanceParseError(f"{file_path}: invalid JSON ({e})") from e

    def dump_raw(self, data: Dict[str, Any], file_path: str) -> None:
        with open(file_path, "w", encoding="utf-8") as f:
            json.dump(data, f, indent=2, sort_keys=True)
            f.write("\n")
