"""
WildColor Models Module
=======================

Pydantic schemas and enums.
"""

from wildcolor.models.schemas import (
    ArithOp,
    CheckResult,
    ClassicKind,
    ColoringParams,
    Counterexample,
    CrossCheckReport,
    EdgeStrategy,
    EngineConfig,
    FamilyKind,
    FamilySpec,
    IdentityId,
    IdentityReport,
    MemoMode,
    OracleKind,
    Recurrence,
    SeqParams,
    SequenceKind,
    Verdict,
    VerificationSummary,
    WildcardMode,
)

__all__ = [
    # Enums
    "FamilyKind",
    "MemoMode",
    "EdgeStrategy",
    "WildcardMode",
    "ArithOp",
    "SequenceKind",
    "ClassicKind",
    "OracleKind",
    "IdentityId",
    "Verdict",
    # Parameters
    "FamilySpec",
    "ColoringParams",
    "SeqParams",
    "EngineConfig",
    # Results
    "Recurrence",
    "Counterexample",
    "IdentityReport",
    "CrossCheckReport",
    "CheckResult",
    "VerificationSummary",
]
