"""Tie the closed recurrences to chi values computed on actual paths and cycles."""

from typing import Optional

from wildcolor.core.config import BudgetSettings, settings
from wildcolor.core.exceptions import CapacityError, InputError, VerificationError
from wildcolor.core.logging import get_logger
from wildcolor.engine.chi import ChiEngine
from wildcolor.graphs.multigraph import cycle_graph, path_graph
from wildcolor.models.schemas import CrossCheckReport, SeqParams
from wildcolor.sequences.generators import a_seq, b_seq

logger = get_logger("sequences.crosscheck")


def cross_check_graphs(
    p: SeqParams,
    N: int,
    engine: Optional[ChiEngine] = None,
    budget: Optional[BudgetSettings] = None,
) -> CrossCheckReport:
    """
    Compare a_n, b_n with chi of P_n, C_n at (k, l) for 1 <= n <= N.

    Raises:
        VerificationError: First n where the two disagree
    """
    budget = budget or settings.budget
    if N < 1:
        raise InputError(f"N must be >= 1, got {N}")
    if N > budget.crosscheck_max_n:
        raise CapacityError(
            f"cross-check limited to N <= {budget.crosscheck_max_n}, got {N}", n=N
        )
    engine = engine or ChiEngine()
    a = a_seq(p, N)
    b = b_seq(p, N)

    for n in range(1, N + 1):
        for family, graph, expected in (
            ("path", path_graph(n), a[n]),
            ("cycle", cycle_graph(n), b[n - 1]),
        ):
            value = engine.compute(graph).evaluate(p.k, p.ell)
            if value != expected:
                logger.error(
                    "sequence disagrees with graph",
                    extra={"family": family, "n": n, "k": p.k, "l": p.ell},
                )
                raise VerificationError(
                    f"{family} n={n}: sequence gives {expected}, chi gives {value}",
                    n=n,
                    family=family,
                )
    return CrossCheckReport(k=p.k, ell=p.ell, max_n=N, checked=2 * N)
