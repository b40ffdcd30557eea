"""Paths of instance files and report outputs."""

import logging
import os
from typing import Sequence

from ..errors import InstanceParseError

logger = logging.getLogger(__name__)


def prepare_directory(directory_path: str) -> str:
    """
    Create ``directory_path`` (and parents) if it does not exist yet.

    Returns:
        The directory path

    Raises:
        OSError: If the directory cannot be created
    """
    try:
        os.makedirs(directory_path, exist_ok=True)
    except OSError as e:
        logger.error(f"Failed to create directory {directory_path}: {e}")
        raise
    return directory_path


def prepare_output_file(file_path: str) -> str:
    """Make sure the directory a report or instance will be written to exists."""
    directory = os.path.dirname(file_path)
    if directory:
        prepare_directory(directory)
    return file_path


def require_instance_file(file_path: str, extensions: Sequence[str]) -> str:
    """
    Check that ``file_path`` names a readable instance file of a known format.

    Raises:
        InstanceParseError: Naming what is wrong with the path
    """
    if not os.path.exists(file_path):
        raise InstanceParseError(f"Instance file does not exist: {file_path}")
    if not os.path.isfile(file_path):
        raise InstanceParseError(f"Instance path is not a file: {file_path}")

    extension = os.path.splitext(file_path)[1].lower()
    if extension not in extensions:
        raise InstanceParseError(
            f"Instance file {file_path} has extension {extension or '(none)'}, expected one of {', '.join(extensions)}"
        )
    logger.debug(f"Instance file {file_path} accepted")
    return file_path
