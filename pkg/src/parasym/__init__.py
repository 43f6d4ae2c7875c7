"""Exact tools for symmetries of homogeneous parabolic geometries."""

__version__ = "0.1.0"
