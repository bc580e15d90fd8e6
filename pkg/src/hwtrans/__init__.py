"""Highest weight vectors on tuples of matrices, their pullbacks, and exact oracles."""

__version__ = "0.1.0"
