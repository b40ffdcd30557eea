"""Configuration loading."""

from .analyzer_config import AnalyzerConfig

__all__ = ["AnalyzerConfig"]
