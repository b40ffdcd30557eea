"""Logging setup and file helpers."""

from .file_utils import prepare_directory, prepare_output_file, require_instance_file
from .logging_config import setup_logging

__all__ = ["prepare_directory", "prepare_output_file", "require_instance_file", "setup_logging"]
