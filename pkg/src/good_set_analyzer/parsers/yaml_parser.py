"""YAML instance files, same schema as JSON."""

from typing import Any, Dict, List

import yaml

from ..errors import InstanceParseError
from .base_parser import BaseInstanceParser


class YAMLInstanceParser(BaseInstanceParser):
    """YAML instance files."""

    @property
    def format_name(self) -> str:
        return "YAML"

    @property
    def extensions(self) -> List[str]:
        return [".yaml", ".yml"]

    def load_raw(self, file_path: str) -> Any:
        with open(file_path, "r", encoding="utf-8") as f:
            try:
                return yaml.safe_load(f)
            except yaml.YAMLError as e:
                self.logger.error(f"Failed to parse YAML file {file_path}: {e}")
                raise InstanceParseError(f"{file_path}: invalid YAML ({e})") from e

    def dump_raw(self, data: Dict[str, Any], file_path: str) -> None:
        with open(file_path, "w", encoding="utf-8") as f:
            yaml.safe_dump(data, f, sort_keys=True, allow_unicode=True)
