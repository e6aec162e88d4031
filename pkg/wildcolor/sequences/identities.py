"""
WildColor Identity Registry
===========================

Named identities between the generalized Fibonacci/Lucas numbers a_n, b_n
and their classical specializations, each with its index domain. An
identity is checked over every index tuple of its domain whose size
(the largest sequence index it mentions on the left) is at most max_index.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Callable, Dict, FrozenSet, Iterable, List, Mapping, Optional, Tuple, Union

from wildcolor.core.exceptions import InputError
from wildcolor.core.logging import get_logger
from wildcolor.models.schemas import (
    ClassicKind,
    Counterexample,
    IdentityId,
    IdentityReport,
    SeqParams,
)
from wildcolor.sequences.generators import a_seq, b_seq, classic_sequences

logger = get_logger("sequences.identities")

Indices = Mapping[str, int]
Sides = Tuple[Tuple[int, ...], Tuple[int, ...]]


class SequenceTable:
    """a, b, F, L and Q tabulated up to `size` for one (k, l)"""

    def __init__(self, params: SeqParams, size: int):
        self.k = params.k
        self.ell = params.ell
        self.size = size
        self.a = a_seq(params, size)
        self.b: Dict[int, int] = dict(enumerate(b_seq(params, size), start=1))
        self.F = classic_sequences(ClassicKind.FIBONACCI, size)
        lucas = classic_sequences(ClassicKind.LUCAS, size)
        self.L: Dict[int, int] = dict(enumerate(lucas, start=1))
        self.Q = classic_sequences(ClassicKind.PELL, size)

    def c(self, n: int) -> int:
        return self.b[n] + self.b[n - 1]


@lru_cache(maxsize=32)
def _table(k: int, ell: int, size: int) -> SequenceTable:
    return SequenceTable(SeqParams(k=k, ell=ell), size)


@dataclass(frozen=True)
class IdentityDefinition:
    identity: IdentityId
    statement: str
    lower: Mapping[str, int]
    size: Callable[..., int]
    sides: Callable[..., Sides]
    k_values: Optional[FrozenSet[int]] = None
    fixed_params: Optional[Tuple[int, int]] = None

    @property
    def names(self) -> Tuple[str, ...]:
        return tuple(self.lower)

    def check_domain(self, indices: Indices) -> None:
        if set(indices) != set(self.names):
            raise InputError(
                f"{self.identity.value} takes indices {','.join(self.names)}, "
                f"got {','.join(sorted(indices))}"
            )
        for name, bound in self.lower.items():
            if indices[name] < bound:
                raise InputError(
                    f"{self.identity.value} needs {name} >= {bound}, got {name}={indices[name]}",
                    identity=self.identity.value,
                    index=name,
                )

    def grid(self, max_index: int) -> Iterable[Dict[str, int]]:
        ranges = [range(bound, max_index + 1) for bound in self.lower.values()]
        for values in product(*ranges):
            indices = dict(zip(self.names, values))
            if self.size(**indices) <= max_index:
                yield indices


def _one(lhs: int, rhs: int) -> Sides:
    return (lhs,), (rhs,)


def _t15(T: SequenceTable, r: int, s: int, t: int) -> Sides:
    a, ell = T.a, T.ell
    return _one(
        a[r + s + t + 1],
        ell * a[r] * a[s] * a[t]
        + ell ** 3 * a[r - 1] * a[s - 1] * a[t - 1]
        - ell ** 4 * a[r - 2] * a[s - 2] * a[t - 2],
    )


def _p1(T: SequenceTable, r: int, s: int, t: int) -> Sides:
    a, ell = T.a, T.ell
    return _one(
        ell * a[r + s] * a[t] + ell ** 3 * a[r - 1] * a[s - 1] * a[t - 1],
        a[r + s + t + 1] - ell ** 4 * a[r - 2] * a[s - 2] * a[t - 1],
    )


def _l34(T: SequenceTable, n: int) -> Sides:
    if T.k == 0:
        return _one(T.b[n], T.ell * T.b[n - 1])
    return _one(T.b[n], T.ell * T.b[n - 1] + T.ell * T.b[n - 2])


def _c5(T: SequenceTable, r: int, s: int, t: int) -> Sides:
    F = T.F
    return _one(
        F[r + s + t],
        F[r + 1] * F[s + 1] * F[t + 1] + F[r] * F[s] * F[t] - F[r - 1] * F[s - 1] * F[t - 1],
    )


_K1 = frozenset({1})


def _n(n: int) -> int:
    return n


def _rs(r: int, s: int) -> int:
    return r + s


_DEFINITIONS: List[IdentityDefinition] = [
    IdentityDefinition(
        IdentityId.T1_1, "b_n = l a_{n-1} + l^2 a_{n-3}", {"n": 3}, _n,
        lambda T, n: _one(T.b[n], T.ell * T.a[n - 1] + T.ell ** 2 * T.a[n - 3]),
        k_values=_K1,
    ),
    IdentityDefinition(
        IdentityId.T1_2, "b_n = a_n - l^2 a_{n-4}", {"n": 4}, _n,
        lambda T, n: _one(T.b[n], T.a[n] - T.ell ** 2 * T.a[n - 4]),
        k_values=_K1,
    ),
    IdentityDefinition(
        IdentityId.T1_3, "a_{r+s} = l a_r a_{s-1} + l^2 a_{r-1} a_{s-2}", {"r": 1, "s": 2}, _rs,
        lambda T, r, s: _one(
            T.a[r + s], T.ell * T.a[r] * T.a[s - 1] + T.ell ** 2 * T.a[r - 1] * T.a[s - 2]
        ),
        k_values=_K1,
    ),
    IdentityDefinition(
        IdentityId.T1_4, "a_{r+s} = a_r a_s - l^2 a_{r-2} a_{s-2}", {"r": 2, "s": 2}, _rs,
        lambda T, r, s: _one(T.a[r + s], T.a[r] * T.a[s] - T.ell ** 2 * T.a[r - 2] * T.a[s - 2]),
        k_values=_K1,
    ),
    IdentityDefinition(
        IdentityId.T1_5,
        "a_{r+s+t+1} = l a_r a_s a_t + l^3 a_{r-1} a_{s-1} a_{t-1} - l^4 a_{r-2} a_{s-2} a_{t-2}",
        {"r": 2, "s": 2, "t": 2},
        lambda r, s, t: r + s + t + 1,
        _t15,
        k_values=_K1,
    ),
    IdentityDefinition(
        IdentityId.P1,
        "l a_{r+s} a_t + l^3 a_{r-1} a_{s-1} a_{t-1} = a_{r+s+t+1} - l^4 a_{r-2} a_{s-2} a_{t-1}",
        {"r": 2, "s": 2, "t": 1},
        lambda r, s, t: r + s + t + 1,
        _p1,
        k_values=_K1,
    ),
    IdentityDefinition(
        IdentityId.L3_1, "b_n = a_n - b_{n-1} + l a_{n-2}", {"n": 2}, _n,
        lambda T, n: _one(T.b[n], T.a[n] - T.b[n - 1] + T.ell * T.a[n - 2]),
    ),
    IdentityDefinition(
        IdentityId.L3_2, "c_n = (k+l-1) c_{n-1} + l c_{n-2}, c_n = b_n + b_{n-1}", {"n": 4}, _n,
        lambda T, n: _one(T.c(n), (T.k + T.ell - 1) * T.c(n - 1) + T.ell * T.c(n - 2)),
    ),
    IdentityDefinition(
        IdentityId.L3_3, "b_{n+1} = l (a_n + l a_{n-2})", {"n": 2},
        lambda n: n + 1,
        lambda T, n: _one(T.b[n + 1], T.ell * (T.a[n] + T.ell * T.a[n - 2])),
        k_values=_K1,
    ),
    IdentityDefinition(
        IdentityId.L3_4, "k=0: b_n = l b_{n-1}; k=1: b_n = l b_{n-1} + l b_{n-2}", {"n": 3}, _n,
        _l34,
        k_values=frozenset({0, 1}),
    ),
    IdentityDefinition(
        IdentityId.C1, "L_n = F_{n+1} + F_{n-1}", {"n": 1}, _n,
        lambda T, n: _one(T.L[n], T.F[n + 1] + T.F[n - 1]),
        fixed_params=(1, 1),
    ),
    IdentityDefinition(
        IdentityId.C2, "L_n = F_{n+2} - F_{n-2}", {"n": 2}, _n,
        lambda T, n: _one(T.L[n], T.F[n + 2] - T.F[n - 2]),
        fixed_params=(1, 1),
    ),
    IdentityDefinition(
        IdentityId.C3, "F_{r+s} = F_{r+1} F_s + F_r F_{s-1}", {"r": 0, "s": 1}, _rs,
        lambda T, r, s: _one(T.F[r + s], T.F[r + 1] * T.F[s] + T.F[r] * T.F[s - 1]),
        fixed_params=(1, 1),
    ),
    IdentityDefinition(
        IdentityId.C4, "F_{r+s} = F_{r+1} F_{s+1} - F_{r-1} F_{s-1}", {"r": 1, "s": 1}, _rs,
        lambda T, r, s: _one(T.F[r + s], T.F[r + 1] * T.F[s + 1] - T.F[r - 1] * T.F[s - 1]),
        fixed_params=(1, 1),
    ),
    IdentityDefinition(
        IdentityId.C5,
        "F_{r+s+t} = F_{r+1} F_{s+1} F_{t+1} + F_r F_s F_t - F_{r-1} F_{s-1} F_{t-1}",
        {"r": 1, "s": 1, "t": 1},
        lambda r, s, t: r + s + t,
        _c5,
        fixed_params=(1, 1),
    ),
    IdentityDefinition(
        IdentityId.FL, "a_n(1,1) = F_{n+2} and b_n(1,1) = L_n", {"n": 1}, _n,
        lambda T, n: ((T.a[n], T.b[n]), (T.F[n + 2], T.L[n])),
        fixed_params=(1, 1),
    ),
    IdentityDefinition(
        IdentityId.PELL, "a_n(2,1) = Q_{n+1}", {"n": 1}, _n,
        lambda T, n: _one(T.a[n], T.Q[n + 1]),
        fixed_params=(2, 1),
    ),
]

IDENTITIES: Dict[IdentityId, IdentityDefinition] = {d.identity: d for d in _DEFINITIONS}

# hold for every (k, l)
ANY_K_IDENTITIES: Tuple[IdentityId, ...] = tuple(
    d.identity for d in _DEFINITIONS if d.fixed_params is None and d.k_values is None
)


def get_identity(identity: Union[IdentityId, str]) -> IdentityDefinition:
    try:
        return IDENTITIES[IdentityId(identity)]
    except ValueError:
        raise InputError(f"unknown identity: {identity}") from None


def verify_identity(
    identity: Union[IdentityId, str],
    params: Optional[SeqParams] = None,
    max_index: int = 20,
    indices: Optional[Iterable[Mapping[str, int]]] = None,
) -> IdentityReport:
    """
    Check one identity over its domain.

    Args:
        identity: Identity id such as "T1.4"
        params: (k, l); ignored by identities pinned to fixed parameters
        max_index: Largest size index checked when `indices` is not given
        indices: Explicit index tuples; each must lie inside the domain

    Returns:
        IdentityReport carrying the first counterexample, if any
    """
    definition = get_identity(identity)
    if max_index < 0:
        raise InputError(f"max_index must be >= 0, got {max_index}")
    if definition.fixed_params is not None:
        k, ell = definition.fixed_params
    else:
        params = params or SeqParams(k=1, ell=1)
        k, ell = params.k, params.ell
    if definition.k_values is not None and k not in definition.k_values:
        allowed = ",".join(str(v) for v in sorted(definition.k_values))
        raise InputError(
            f"{definition.identity.value} holds only for k in {{{allowed}}}, got k={k}",
            identity=definition.identity.value,
        )

    if indices is None:
        grid = list(definition.grid(max_index))
    else:
        grid = [dict(idx) for idx in indices]
        for idx in grid:
            definition.check_domain(idx)
        max_index = max([max_index] + [definition.size(**idx) for idx in grid])

    table = _table(k, ell, max_index + 3)
    report = IdentityReport(identity=definition.identity, k=k, ell=ell, max_index=max_index)
    for idx in grid:
        lhs, rhs = definition.sides(table, **idx)
        report.checked += 1
        if lhs != rhs:
            report.counterexample = Counterexample(indices=idx, lhs=list(lhs), rhs=list(rhs))
            logger.warning(
                "identity failed",
                extra={"identity": definition.identity.value, "k": k, "l": ell, **idx},
            )
            break
    return report
