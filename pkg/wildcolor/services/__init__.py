"""
WildColor Services Module
=========================

Verification sweeps over the engine, the oracles and the sequences.
"""

from wildcolor.services.verification import VerificationService

__all__ = [
    "VerificationService",
]
