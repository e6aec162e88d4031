"""
WildColor
=========

Graph colorings with wildcards: for k proper colors and l wildcard
colors, count assignments where no edge joins two equal proper colors.

Features:
---------
• Exact bivariate polynomial chi_G(x, y) by memoized deletion-contraction
• Multigraphs with loops and parallel edges
• Independent counting oracles (brute force, subset expansion)
• The k = 1 vertex and edge recursions
• Generalized Fibonacci and Lucas numbers from paths and cycles
• Recurrence mining, Hankel determinants and identity grids

Version: 1.0.0
License: MIT
"""

__version__ = "1.0.0"
__license__ = "MIT"

from wildcolor.core.config import settings
from wildcolor.core.logging import get_logger

logger = get_logger(__name__)

# Package exports
__all__ = [
    "__version__",
    "settings",
    "logger",
]
