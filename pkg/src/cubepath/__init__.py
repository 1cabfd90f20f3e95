"""Shortest paths between opposite faces of a cube, via the unfolding grid."""

from .geometry import ConvexPolygon, HalfPlane, Point
from .solver import DomainError, SolveResult, is_4fsp, solve

__all__ = ["ConvexPolygon", "DomainError", "HalfPlane", "Point", "SolveResult", "is_4fsp", "solve"]
__version__ = "0.1.0"
