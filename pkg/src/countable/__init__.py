"""Countable and uncountable sets, made executable with exact arithmetic."""

__version__ = "0.1.0"
