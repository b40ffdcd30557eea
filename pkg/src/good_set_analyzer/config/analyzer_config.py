"""Analyzer configuration loaded from YAML."""

import logging
from dataclasses import dataclass, fields
from typing import Any, Dict, Optional

import yaml

from ..errors import InstanceParseError

logger = logging.getLogger(__name__)

_SECTIONS = {
    "verification": {
        "boundary": "verify_boundary",
        "components": "verify_components",
        "certificates": "verify_certificates",
    },
    "search": {"max_points": "max_points"},
    "report": {"include_timing": "include_timing"},
}


@dataclass
class AnalyzerConfig:
    """
    Verification switches, search limits and report options.

    The YAML layout groups the keys in sections::

        verification: {boundary: true, components: true, certificates: true}
        search: {max_points: 24}
        report: {include_timing: false}
    """

    verify_boundary: bool = True
    verify_components: bool = True
    verify_certificates: bool = True
    max_points: Optional[int] = 24
    include_timing: bool = False

    @classmethod
    def from_file(cls, config_file: str) -> "AnalyzerConfig":
        """
        Load configuration from a YAML file.

        Args:
            config_file: Path to the configuration file

        Returns:
            AnalyzerConfig with defaults for every key the file omits
        """
        try:
            with open(config_file, "r", encoding="utf-8") as f:
                data = yaml.safe_load(f)
        except FileNotFoundError:
            logger.error(f"Configuration file not found: {config_file}")
            raise InstanceParseError(f"Configuration file not found: {config_file}") from None
        except yaml.YAMLError as e:
            logger.error(f"Failed to parse configuration file {config_file}: {e}")
            raise InstanceParseError(f"Invalid configuration file {config_file}: {e}") from e
        except UnicodeDecodeError as e:
            logger.error(f"Configuration file {config_file} is not valid UTF-8: {e}")
            raise InstanceParseError(f"Configuration file {config_file} is not valid UTF-8") from e
        config = cls.from_dict(data or {})
        logger.info(f"Loaded configuration from {config_file}: {config}")
        return config

    @classmethod
    def from_dict(cls, data: Any) -> "AnalyzerConfig":
        if not isinstance(data, dict):
            raise InstanceParseError("Configuration must be a mapping of sections")
        values: Dict[str, Any] = {}
        for section, body in data.items():
            if section not in _SECTIONS:
                logger.warning(f"Ignoring unknown configuration section '{section}'")
                continue
            if not isinstance(body, dict):
                raise InstanceParseError(f"Configuration section '{section}' must be a mapping")
            for key, value in body.items():
                attribute = _SECTIONS[section].get(key)
                if attribute is None:
                    logger.warning(f"Ignoring unknown configuration key '{section}.{key}'")
                    continue
                values[attribute] = value

        config = cls(**values)
        config._check_types()
        return config

    def _check_types(self) -> None:
        for item in fields(self):
            value = getattr(self, item.name)
            if item.name == "max_points":
                if value is not None and (isinstance(value, bool) or not isinstance(value, int) or value < 1):
                    raise InstanceParseError(f"search.max_points must be a positive integer, got {value!r}")
            elif not isinstance(value, bool):
                raise InstanceParseError(f"{item.name} must be true or false, got {value!r}")
