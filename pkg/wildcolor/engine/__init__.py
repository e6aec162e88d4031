"""
WildColor Engine Module
=======================

Symbolic chi computation, the k = 1 wildcard recursions and the
independent counting oracles.
"""

from wildcolor.engine.chi import ChiEngine, chromatic_polynomial, compute_chi
from wildcolor.engine.oracles import (
    count_bruteforce,
    count_subset_expansion,
    independence_polynomial,
    independence_sum,
    is_proper,
)
from wildcolor.engine.simplify import simplify, simplify_with_relabel
from wildcolor.engine.wildcard import chi_wildcard

__all__ = [
    "ChiEngine",
    "compute_chi",
    "chromatic_polynomial",
    "count_bruteforce",
    "count_subset_expansion",
    "independence_polynomial",
    "independence_sum",
    "is_proper",
    "simplify",
    "simplify_with_relabel",
    "chi_wildcard",
]
