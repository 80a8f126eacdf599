"""Invariants of cubic fourfolds with a cyclic group of symmetries."""

__version__ = "0.1.0"
