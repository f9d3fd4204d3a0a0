"""Exact matrix-valued spherical functions of the pair (SU(3), U(2))."""

__version__ = "0.1.0"
