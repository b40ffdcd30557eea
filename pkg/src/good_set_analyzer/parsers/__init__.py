"""Instance file loaders."""

import os
from typing import Dict, Type

from ..errors import InstanceParseError
from ..models.instance import Instance
from .base_parser import BaseInstanceParser
from .json_parser import JSONInstanceParser
from .yaml_parser import YAMLInstanceParser

PARSER_CLASSES = (JSONInstanceParser, YAMLInstanceParser)

# Each parser declares the extensions it reads
_PARSERS_BY_EXTENSION: Dict[str, Type[BaseInstanceParser]] = {
    extension: parser_class for parser_class in PARSER_CLASSES for extension in parser_class().extensions
}
INSTANCE_EXTENSIONS = list(_PARSERS_BY_EXTENSION)


def get_instance_parser(file_path: str) -> BaseInstanceParser:
    """Get the appropriate instance parser based on file extension."""
    extension = os.path.splitext(file_path)[1].lower()
    parser_class = _PARSERS_BY_EXTENSION.get(extension)
    if parser_class is None:
        raise InstanceParseError(
            f"Unsupported instance format: {file_path} (expected one of {', '.join(INSTANCE_EXTENSIONS)})"
        )
    return parser_class()


def load_instance(file_path: str) -> Instance:
    """Parse an instance file of any supported format."""
    return get_instance_parser(file_path).parse_file(file_path)


__all__ = [
    "BaseInstanceParser",
    "INSTANCE_EXTENSIONS",
    "JSONInstanceParser",
    "YAMLInstanceParser",
    "get_instance_parser",
    "load_instance",
]
