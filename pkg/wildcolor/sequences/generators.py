"""
Generalized Fibonacci and Lucas numbers.

For fixed (k, l), a_n counts proper (k, l)-colorings of the path P_n and
b_n those of the cycle C_n (C_1 a looped vertex, C_2 a doubled edge).
a_0 = 1 is the value of the empty graph.
"""

from fractions import Fraction
from typing import List, Union

from wildcolor.core.exceptions import InputError
from wildcolor.models.schemas import ClassicKind, SeqParams


def a_seq(p: SeqParams, N: int) -> List[int]:
    """a_0..a_N; a_n = (k+l-1) a_{n-1} + l a_{n-2}"""
    if N < 0:
        raise InputError(f"N must be >= 0, got {N}")
    k, ell = p.k, p.ell
    values = [1, k + ell, (k + ell) ** 2 - k][: N + 1]
    while len(values) <= N:
        values.append((k + ell - 1) * values[-1] + ell * values[-2])
    return values


def b_seq(p: SeqParams, N: int) -> List[int]:
    """b_1..b_N (element i is b_{i+1}); order-3 recurrence from b_4 on"""
    if N < 1:
        raise InputError(f"N must be >= 1, got {N}")
    k, ell = p.k, p.ell
    a = a_seq(p, 3)
    b2 = (k + ell) ** 2 - k
    values = [ell, b2, a[3] - b2 + ell * a[1]][:N]
    while len(values) < N:
        values.append(
            (k + ell - 2) * values[-1] + (k + 2 * ell - 1) * values[-2] + ell * values[-3]
        )
    return values


def c_seq(p: SeqParams, N: int) -> List[int]:
    """c_2..c_N with c_n = b_n + b_{n-1} (element i is c_{i+2})"""
    b = b_seq(p, max(N, 1))
    return [b[i] + b[i - 1] for i in range(1, N)]


def classic_sequences(kind: Union[ClassicKind, str], N: int) -> List[int]:
    """
    fibonacci: F_0..F_N with F_0 = 0, F_1 = 1
    lucas:     L_1..L_N with L_1 = 1, L_2 = 3
    pell:      Q_0..Q_N with Q_0 = Q_1 = 1, Q_n = 2Q_{n-1} + Q_{n-2}
    """
    if N < 0:
        raise InputError(f"N must be >= 0, got {N}")
    kind = ClassicKind(kind)
    if kind == ClassicKind.FIBONACCI:
        values, step, count = [0, 1], 1, N + 1
    elif kind == ClassicKind.LUCAS:
        values, step, count = [1, 3], 1, N
    else:
        values, step, count = [1, 1], 2, N + 1
    while len(values) < count:
        values.append(step * values[-1] + values[-2])
    return values[:count]


def backward_a0(p: SeqParams) -> Fraction:
    """Run the a-recurrence backwards from a_1, a_2"""
    if p.ell == 0:
        raise InputError("running the recurrence backwards divides by l; need l >= 1")
    a = a_seq(p, 2)
    return Fraction(a[2] - (p.k + p.ell - 1) * a[1], p.ell)
