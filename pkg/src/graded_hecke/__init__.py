"""Drinfeld graded Hecke algebras for complex reflection groups, computed exactly."""
__version__ = "0.1.0"
