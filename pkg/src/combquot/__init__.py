"""Exact combinatorial quotients of torus actions on affine charts."""

__version__ = "0.1.0"
