"""Shipped instances."""

from .examples import EX10_MAX_DEPTH, EXAMPLES, emit_examples, ex10, ex10_points, example

__all__ = ["EX10_MAX_DEPTH", "EXAMPLES", "emit_examples", "ex10", "ex10_points", "example"]
