"""Exact representation-theoretic and circuit computations for geometric complexity theory."""

__version__ = "0.1.0"
