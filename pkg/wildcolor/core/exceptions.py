"""
WildColor Exceptions
====================

Every error the package raises on purpose. Each class carries the
machine-readable code and the CLI exit status it maps to.
"""

from typing import Any, Dict, Optional


class WildColorError(Exception):
    """Base class for all WildColor errors"""

    error_code = "WILDCOLOR_ERROR"
    exit_code = 2

    def __init__(self, message: str, **details: Any):
        super().__init__(message)
        self.message = message
        self.details: Dict[str, Any] = details

    def to_dict(self) -> Dict[str, Any]:
        return {"error_code": self.error_code, "message": self.message, **self.details}


class InputError(WildColorError, ValueError):
    """Malformed or inconsistent input"""

    error_code = "INPUT_ERROR"


class GraphFormatError(InputError):
    """A .mg file that does not follow the format"""

    error_code = "GRAPH_FORMAT"

    def __init__(self, message: str, line_number: Optional[int] = None):
        where = f"line {line_number}: " if line_number is not None else ""
        super().__init__(f"{where}{message}", line_number=line_number)
        self.line_number = line_number


class PolynomialFormatError(InputError):
    error_code = "POLYNOMIAL_FORMAT"


class UnsupportedFocusError(InputError):
    """A vertex/edge focus the requested rule cannot use"""

    error_code = "UNSUPPORTED_FOCUS"


class CapacityError(WildColorError):
    """A request beyond a configured budget"""

    error_code = "CAPACITY_EXCEEDED"


class VerificationError(WildColorError):
    """Two independent computations disagree"""

    error_code = "VERIFICATION_FAILED"
    exit_code = 1
