"""Bourbaki degree of reduced plane projective curves."""

__version__ = "0.1.0"
