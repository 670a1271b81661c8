"""Systole counts on surfaces: hyperbolic upper bounds and complete-graph constructions."""

__version__ = "0.1.0"
