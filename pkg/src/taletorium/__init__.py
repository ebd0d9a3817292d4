"""Taletorium: interactive fairy-tale co-creation with doodle scenes."""

__version__ = "0.1.0"
