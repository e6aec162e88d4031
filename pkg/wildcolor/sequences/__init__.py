"""
WildColor Sequences Module
==========================

Generalized Fibonacci/Lucas numbers, recurrence discovery and the
identity registry.
"""

from wildcolor.sequences.crosscheck import cross_check_graphs
from wildcolor.sequences.generators import a_seq, b_seq, backward_a0, c_seq, classic_sequences
from wildcolor.sequences.identities import (
    ANY_K_IDENTITIES,
    IDENTITIES,
    IdentityDefinition,
    SequenceTable,
    get_identity,
    verify_identity,
)
from wildcolor.sequences.recurrence import (
    det_B_closed_form,
    hankel_det_B,
    hankel_matrix_B,
    minimal_recurrence,
)

__all__ = [
    "a_seq",
    "b_seq",
    "c_seq",
    "classic_sequences",
    "backward_a0",
    "minimal_recurrence",
    "hankel_matrix_B",
    "hankel_det_B",
    "det_B_closed_form",
    "IDENTITIES",
    "ANY_K_IDENTITIES",
    "IdentityDefinition",
    "SequenceTable",
    "get_identity",
    "verify_identity",
    "cross_check_graphs",
]
