"""Exact-arithmetic toolkit for a family of degree-one del Pezzo surfaces.

Constructs surfaces y² = x³ + a₄(f(z/w))xw⁴ + a₆(f(z/w))w⁶ over Q, decides
smoothness, classifies the singularities of the associated cubic model,
verifies the seed hypotheses for rational-point generation, and generates
verified rational points fiber by fiber.
"""

from .surface import Surface, SurfaceParams, WPoint

__all__ = ["Surface", "SurfaceParams", "WPoint"]
__version__ = "0.1.0"
