"""
Exact recurrence discovery for integer sequences.

minimal_recurrence finds the smallest order d for which one rational
coefficient vector satisfies every window of the input. The linear
systems are solved exactly with sympy.
"""

from fractions import Fraction
from typing import Optional, Sequence, Tuple

import sympy as sp

from wildcolor.core.exceptions import InputError
from wildcolor.core.logging import get_logger
from wildcolor.models.schemas import Recurrence, SeqParams
from wildcolor.sequences.generators import b_seq

logger = get_logger("sequences.recurrence")


def _to_fraction(value: sp.Expr) -> Fraction:
    rational = sp.Rational(value)
    return Fraction(int(rational.p), int(rational.q))


def _solve_order(values: Sequence[int], d: int) -> Optional[Tuple[Fraction, ...]]:
    rows = [[values[n - j] for j in range(1, d + 1)] for n in range(d, len(values))]
    rhs = [values[n] for n in range(d, len(values))]
    unknowns = sp.symbols(f"c1:{d + 1}")
    solutions = sp.linsolve((sp.Matrix(rows), sp.Matrix(rhs)), list(unknowns))
    if solutions == sp.S.EmptySet:
        return None
    solution = [sp.sympify(expr) for expr in next(iter(solutions))]
    free = set().union(*(expr.free_symbols for expr in solution))
    # pick a member of the solution family whose last coefficient survives
    for fill in (0, 1):
        chosen = [expr.subs({symbol: fill for symbol in free}) for expr in solution]
        if chosen[-1] != 0:
            return tuple(_to_fraction(c) for c in chosen)
    return None


def minimal_recurrence(values: Sequence[int], max_order: int = 3) -> Optional[Recurrence]:
    """
    Smallest-order linear recurrence with constant rational coefficients.

    Args:
        values: Consecutive sequence terms
        max_order: Largest order tried

    Returns:
        The recurrence, or None if no order up to max_order fits
    """
    if max_order < 1:
        raise InputError(f"max_order must be >= 1, got {max_order}")
    if len(values) < 2 * max_order + 2:
        raise InputError(
            f"need at least {2 * max_order + 2} terms for order {max_order}, got {len(values)}",
            terms=len(values),
        )
    values = [int(v) for v in values]

    for d in range(1, max_order + 1):
        coefficients = _solve_order(values, d)
        if coefficients is None:
            continue
        recurrence = Recurrence(order=d, coefficients=coefficients)
        if recurrence.fits(values):
            logger.debug("recurrence found", extra={"order": d})
            return recurrence
    logger.debug("no recurrence", extra={"max_order": max_order})
    return None


def hankel_matrix_B(p: SeqParams) -> sp.Matrix:
    """3x3 matrix of b_1..b_5 whose determinant decides the cycle recurrence order"""
    b1, b2, b3, b4, b5 = b_seq(p, 5)
    return sp.Matrix([[b3, b2, b1], [b4, b3, b2], [b5, b4, b3]])


def det_B_closed_form(p: SeqParams) -> int:
    k, ell = p.k, p.ell
    return -(k ** 2) * (k - 1) * ell * ((k + ell - 1) ** 2 + 4 * ell)


def hankel_det_B(p: SeqParams) -> Tuple[int, int]:
    """(determinant computed from the matrix, closed form); the two always agree"""
    return int(hankel_matrix_B(p).det(method="bareiss")), det_B_closed_form(p)

