"""
WildColor Core Module
=====================

Configuration, logging and the exception hierarchy.
"""

from wildcolor.core.config import settings
from wildcolor.core.exceptions import (
    CapacityError,
    GraphFormatError,
    InputError,
    PolynomialFormatError,
    UnsupportedFocusError,
    VerificationError,
    WildColorError,
)
from wildcolor.core.logging import get_logger

__all__ = [
    "settings",
    "get_logger",
    "WildColorError",
    "InputError",
    "GraphFormatError",
    "PolynomialFormatError",
    "UnsupportedFocusError",
    "CapacityError",
    "VerificationError",
]
