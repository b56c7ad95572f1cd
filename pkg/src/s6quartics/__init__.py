"""Exact verification of the S6/A6 quartic threefold computations."""

__version__ = "0.1.0"
