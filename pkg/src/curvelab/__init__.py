"""Exact combinatorics of simple closed curves on punctured surfaces."""

from .surface import IdealTriangulation, SurfaceKind, standard_triangulation
from .curves import NormalCurve, curve, enumerate_census

__all__ = ["IdealTriangulation", "SurfaceKind", "standard_triangulation", "NormalCurve", "curve", "enumerate_census"]
