"""
WildColor Pydantic Schemas
==========================

Parameter, configuration and report models shared by the engine, the
sequence tools, the verification service and the CLI.
"""

import json
from enum import Enum
from fractions import Fraction
from itertools import product
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator

from wildcolor.core.config import Settings, settings
from wildcolor.core.exceptions import InputError


# Enums for Schemas
class FamilyKind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"
    SNEAKY = "sneaky"
    COMPLETE = "complete"


class MemoMode(str, Enum):
    LABELED = "labeled"
    CANONICAL = "canonical"


class EdgeStrategy(str, Enum):
    LOOPS_FIRST_MAX_DEGREE = "loops_first_max_degree"
    FIRST_EDGE = "first_edge"


class WildcardMode(str, Enum):
    VERTEX = "vertex"
    EDGE = "edge"


class ArithOp(str, Enum):
    ADD = "add"
    SUB = "sub"
    MUL = "mul"


class SequenceKind(str, Enum):
    PATH = "path"
    CYCLE = "cycle"


class ClassicKind(str, Enum):
    FIBONACCI = "fibonacci"
    LUCAS = "lucas"
    PELL = "pell"


class OracleKind(str, Enum):
    BRUTE = "brute"
    SUBSET = "subset"


class IdentityId(str, Enum):
    T1_1 = "T1.1"
    T1_2 = "T1.2"
    T1_3 = "T1.3"
    T1_4 = "T1.4"
    T1_5 = "T1.5"
    P1 = "P1"
    L3_1 = "L3.1"
    L3_2 = "L3.2"
    L3_3 = "L3.3"
    L3_4 = "L3.4"
    C1 = "C1"
    C2 = "C2"
    C3 = "C3"
    C4 = "C4"
    C5 = "C5"
    FL = "FL"
    PELL = "PELL"


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"


def _as_input_error(exc: ValidationError) -> InputError:
    messages = "; ".join(err["msg"] for err in exc.errors())
    return InputError(messages)


# =====================
# Parameter Schemas
# =====================

class FamilySpec(BaseModel):
    """One member of a named graph family"""

    model_config = ConfigDict(frozen=True)

    kind: FamilyKind
    n: Optional[int] = None
    r: Optional[int] = None
    s: Optional[int] = None
    t: Optional[int] = None

    @model_validator(mode="after")
    def check_parameters(self) -> "FamilySpec":
        if self.kind == FamilyKind.SNEAKY:
            if self.r is None or self.s is None or self.t is None:
                raise ValueError("sneaky needs r, s and t")
            if self.r < 2 or self.s < 2 or self.t < 1:
                raise ValueError("sneaky needs r >= 2, s >= 2, t >= 1")
        else:
            if self.n is None:
                raise ValueError(f"{self.kind.value} needs n")
            if self.n < 1:
                raise ValueError(f"{self.kind.value} needs n >= 1")
        return self

    @classmethod
    def of(cls, kind: str, params: Sequence[int]) -> "FamilySpec":
        """Build from a kind name and positional parameters (CLI form)"""
        try:
            family = FamilyKind(kind)
        except ValueError:
            raise InputError(f"unknown graph family: {kind}") from None
        names = ("r", "s", "t") if family == FamilyKind.SNEAKY else ("n",)
        if len(params) != len(names):
            raise InputError(f"{family.value} takes {len(names)} parameter(s), got {len(params)}")
        try:
            return cls(kind=family, **dict(zip(names, params)))
        except ValidationError as exc:
            raise _as_input_error(exc) from None

    @classmethod
    def path(cls, n: int) -> "FamilySpec":
        return cls.of("path", [n])

    @classmethod
    def cycle(cls, n: int) -> "FamilySpec":
        return cls.of("cycle", [n])

    @classmethod
    def complete(cls, n: int) -> "FamilySpec":
        return cls.of("complete", [n])

    @classmethod
    def sneaky(cls, r: int, s: int, t: int) -> "FamilySpec":
        return cls.of("sneaky", [r, s, t])


class ColoringParams(BaseModel):
    """k proper colors and ell wildcards"""

    model_config = ConfigDict(frozen=True)

    k: int = Field(..., ge=0)
    ell: int = Field(..., ge=0)

    @property
    def colors(self) -> int:
        return self.k + self.ell

    @classmethod
    def of(cls, k: int, ell: int) -> "ColoringParams":
        try:
            return cls(k=k, ell=ell)
        except ValidationError as exc:
            raise _as_input_error(exc) from None

    @classmethod
    def grid(cls, max_value: int) -> List["ColoringParams"]:
        """All (k, ell) in [0, max_value]^2 except (0, 0)"""
        return [
            cls(k=k, ell=ell)
            for k, ell in product(range(max_value + 1), repeat=2)
            if k + ell >= 1
        ]


class SeqParams(ColoringParams):
    """Sequence parameters: k and ell not both zero"""

    @model_validator(mode="after")
    def not_both_zero(self) -> "SeqParams":
        if self.k + self.ell < 1:
            raise ValueError("k and l must not both be zero")
        return self


class EngineConfig(BaseModel):
    """Knobs of the deletion-contraction engine; none of them changes the result"""

    model_config = ConfigDict(frozen=True)

    memo_mode: MemoMode = MemoMode.LABELED
    edge_strategy: EdgeStrategy = EdgeStrategy.LOOPS_FIRST_MAX_DEGREE
    drop_parallel_duplicates: bool = True
    factor_loops: bool = True
    canonical_max_vertices: int = Field(default=10, ge=0)

    @classmethod
    def from_settings(cls, source: Optional[Settings] = None) -> "EngineConfig":
        source = source or settings
        return cls(
            memo_mode=MemoMode(source.engine.memo_mode),
            edge_strategy=EdgeStrategy(source.engine.edge_strategy),
            drop_parallel_duplicates=source.engine.drop_parallel_duplicates,
            factor_loops=source.engine.factor_loops,
            canonical_max_vertices=source.budget.canonical_max_vertices,
        )

    @classmethod
    def all_configurations(cls, canonical_max_vertices: int = 10) -> Iterator["EngineConfig"]:
        flags = (True, False)
        for memo, strategy, dedup, loops in product(MemoMode, EdgeStrategy, flags, flags):
            yield cls(
                memo_mode=memo,
                edge_strategy=strategy,
                drop_parallel_duplicates=dedup,
                factor_loops=loops,
                canonical_max_vertices=canonical_max_vertices,
            )


# =====================
# Result Schemas
# =====================

class Recurrence(BaseModel):
    """s_n = c_1 s_{n-1} + ... + c_d s_{n-d}"""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    order: int = Field(..., ge=1)
    coefficients: Tuple[Fraction, ...]

    @field_validator("coefficients", mode="before")
    @classmethod
    def to_fractions(cls, value: Sequence) -> Tuple[Fraction, ...]:
        return tuple(Fraction(c) for c in value)

    @model_validator(mode="after")
    def check_shape(self) -> "Recurrence":
        if len(self.coefficients) != self.order:
            raise ValueError("one coefficient per order")
        if self.coefficients[-1] == 0:
            raise ValueError("last coefficient must be nonzero")
        return self

    def next_value(self, history: Sequence[int]) -> Fraction:
        """Predict the term following `history` (most recent last)"""
        return sum(
            (c * history[-i] for i, c in enumerate(self.coefficients, start=1)),
            Fraction(0),
        )

    def fits(self, values: Sequence[int]) -> bool:
        return all(
            self.next_value(values[n - self.order:n]) == values[n]
            for n in range(self.order, len(values))
        )

    def format_coefficients(self) -> str:
        return ",".join(
            str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
            for c in self.coefficients
        )


class Counterexample(BaseModel):
    """Indices where the two sides differ; each side may be a tuple of values"""

    indices: Dict[str, int]
    lhs: List[int]
    rhs: List[int]

    @staticmethod
    def _side(values: List[int]) -> str:
        if len(values) == 1:
            return str(values[0])
        return "(" + ",".join(str(v) for v in values) + ")"

    def describe(self) -> str:
        where = ",".join(f"{name}={value}" for name, value in self.indices.items())
        return f"({where}) lhs={self._side(self.lhs)} rhs={self._side(self.rhs)}"


class IdentityReport(BaseModel):
    """Outcome of one identity over an index grid"""

    identity: IdentityId
    k: int
    ell: int
    max_index: int
    checked: int = 0
    counterexample: Optional[Counterexample] = None

    @property
    def verdict(self) -> Verdict:
        return Verdict.PASS if self.counterexample is None else Verdict.FAIL

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def to_line(self) -> str:
        head = (
            f"{self.verdict.value} {self.identity.value} "
            f"k={self.k} l={self.ell} max={self.max_index}"
        )
        if self.counterexample is not None:
            return f"{head} at {self.counterexample.describe()}"
        return f"{head} checked={self.checked}"

    def as_check(self) -> "CheckResult":
        return CheckResult(
            name=f"{self.identity.value}[k={self.k},l={self.ell}]",
            passed=self.passed,
            checked=self.checked,
            detail=self.counterexample.describe() if self.counterexample else None,
        )


class CrossCheckReport(BaseModel):
    """Sequences versus graph-computed chi values"""

    k: int
    ell: int
    max_n: int
    checked: int


class CheckResult(BaseModel):
    """One line of a verification report"""

    name: str
    passed: bool
    checked: int = 0
    skipped: int = 0
    detail: Optional[str] = None

    def to_line(self) -> str:
        if self.passed:
            line = f"PASS {self.name} checked={self.checked}"
            return f"{line} skipped={self.skipped}" if self.skipped else line
        return f"FAIL {self.name} {self.detail or ''}".rstrip()


class VerificationSummary(BaseModel):
    """Ordered check results plus the machine-readable tally"""

    title: str
    results: List[CheckResult] = Field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(result.passed for result in self.results)

    @property
    def checked(self) -> int:
        return sum(result.checked for result in self.results)

    @property
    def skipped(self) -> int:
        return sum(result.skipped for result in self.results)

    @property
    def failed(self) -> int:
        return sum(1 for result in self.results if not result.passed)

    def add(self, result: CheckResult) -> None:
        self.results.append(result)

    def render(self) -> str:
        lines = [result.to_line() for result in self.results]
        lines.append(f"ok={str(self.ok).lower()} checked={self.checked} failed={self.failed}")
        return "\n".join(lines)

    def to_json(self) -> str:
        payload = self.model_dump()
        payload.update(
            ok=self.ok, checked=self.checked, failed=self.failed, skipped=self.skipped
        )
        return json.dumps(payload, indent=2, sort_keys=True)
