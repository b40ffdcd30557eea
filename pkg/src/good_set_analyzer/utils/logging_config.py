"""Logging configuration for the good set analyzer."""

import logging
import sys
from typing import Optional

_HANDLER_NAMES = ("good_set_analyzer.console", "good_set_analyzer.file")


def setup_logging(level: str = "WARNING", log_file: Optional[str] = None) -> None:
    """
    Set up logging configuration.

    Console output goes to stderr so that reports on stdout stay machine readable.
    Handlers installed by an earlier call are replaced.

    Args:
        level: Logging level (DEBUG, INFO, WARNING, ERROR, CRITICAL)
        log_file: Optional log file path
    """
    formatter = logging.Formatter(
        '%(asctime)s - %(name)s - %(levelname)s - %(message)s'
    )

    root_logger = logging.getLogger()
    for handler in list(root_logger.handlers):
        if handler.get_name() in _HANDLER_NAMES:
            root_logger.removeHandler(handler)
            handler.close()

    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.set_name(_HANDLER_NAMES[0])
    console_handler.setFormatter(formatter)

    root_logger.setLevel(getattr(logging, level.upper()))
    root_logger.addHandler(console_handler)

    if log_file:
        file_handler = logging.FileHandler(log_file)
        file_handler.set_name(_HANDLER_NAMES[1])
        file_handler.setFormatter(formatter)
        root_logger.addHandler(file_handler)

    logging.getLogger('good_set_analyzer').setLevel(getattr(logging, level.upper()))
