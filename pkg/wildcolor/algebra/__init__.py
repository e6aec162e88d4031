"""
WildColor Algebra Module
========================

Exact bivariate polynomial arithmetic.
"""

from wildcolor.algebra.bipoly import (
    BiPoly,
    arith,
    evaluate,
    format_poly,
    parse_poly,
    power_xy,
    scale_y,
    substitute,
)

__all__ = [
    "BiPoly",
    "arith",
    "scale_y",
    "power_xy",
    "evaluate",
    "substitute",
    "format_poly",
    "parse_poly",
]
