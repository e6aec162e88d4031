"""
WildColor Bivariate Polynomials
===============================

Sparse exact polynomials in x and y: a map from exponent pairs (dx, dy)
to nonzero Python ints. Values are immutable and hashable.

Text form: terms by total degree descending, then x-degree descending,
written `c*x^a*y^b` with unit coefficients and exponents elided, e.g.
"x^2 + 2*x*y + y^2 - x".
"""

import re
from functools import lru_cache
from math import comb
from typing import Dict, Iterator, Mapping, Optional, Tuple, Union

from wildcolor.core.exceptions import PolynomialFormatError
from wildcolor.models.schemas import ArithOp

Monomial = Tuple[int, int]
Scalar = int


class BiPoly:
    """Exact polynomial in x, y with integer coefficients"""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Optional[Mapping[Monomial, int]] = None):
        self._terms: Dict[Monomial, int] = {
            (int(dx), int(dy)): int(c) for (dx, dy), c in (terms or {}).items() if c != 0
        }
        self._hash: Optional[int] = None

    # ---------------------
    # Constructors
    # ---------------------

    @classmethod
    def zero(cls) -> "BiPoly":
        return cls()

    @classmethod
    def one(cls) -> "BiPoly":
        return cls({(0, 0): 1})

    @classmethod
    def constant(cls, c: int) -> "BiPoly":
        return cls({(0, 0): c})

    @classmethod
    def monomial(cls, c: int = 1, dx: int = 0, dy: int = 0) -> "BiPoly":
        return cls({(dx, dy): c})

    @classmethod
    def x(cls) -> "BiPoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BiPoly":
        return cls({(0, 1): 1})

    @classmethod
    def _coerce(cls, other: Union["BiPoly", Scalar]) -> "BiPoly":
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return cls.constant(other)
        raise TypeError(f"cannot combine BiPoly with {type(other).__name__}")

    # ---------------------
    # Inspection
    # ---------------------

    @property
    def terms(self) -> Dict[Monomial, int]:
        return dict(self._terms)

    def coefficient(self, dx: int, dy: int) -> int:
        return self._terms.get((dx, dy), 0)

    def degree(self) -> int:
        return max((dx + dy for dx, dy in self._terms), default=-1)

    def degree_x(self) -> int:
        return max((dx for dx, _ in self._terms), default=-1)

    def is_zero(self) -> bool:
        return not self._terms

    def ordered_terms(self) -> Iterator[Tuple[Monomial, int]]:
        """Graded order: total degree descending, then x-degree descending"""
        for mono in sorted(self._terms, key=lambda m: (-(m[0] + m[1]), -m[0])):
            yield mono, self._terms[mono]

    # ---------------------
    # Ring operations
    # ---------------------

    def __add__(self, other: Union["BiPoly", Scalar]) -> "BiPoly":
        other = self._coerce(other)
        result = dict(self._terms)
        for mono, c in other._terms.items():
            result[mono] = result.get(mono, 0) + c
        return BiPoly(result)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly({mono: -c for mono, c in self._terms.items()})

    def __sub__(self, other: Union["BiPoly", Scalar]) -> "BiPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: Scalar) -> "BiPoly":
        return self._coerce(other) - self

    def __mul__(self, other: Union["BiPoly", Scalar]) -> "BiPoly":
        other = self._coerce(other)
        result: Dict[Monomial, int] = {}
        for (ax, ay), ac in self._terms.items():
            for (bx, by), bc in other._terms.items():
                mono = (ax + bx, ay + by)
                result[mono] = result.get(mono, 0) + ac * bc
        return BiPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "BiPoly":
        if exponent < 0:
            raise ValueError("negative powers are not polynomials")
        result, base = BiPoly.one(), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def scale_y(self, d: int) -> "BiPoly":
        return BiPoly({(dx, dy + d): c for (dx, dy), c in self._terms.items()})

    # ---------------------
    # Evaluation
    # ---------------------

    def evaluate(self, k: int, ell: int) -> int:
        return sum(c * k**dx * ell**dy for (dx, dy), c in self._terms.items())

    def substitute(self, x: Optional[int] = None, y: Optional[int] = None) -> "BiPoly":
        """Fix x and/or y to an integer, keeping the other variable"""
        result: Dict[Monomial, int] = {}
        for (dx, dy), c in self._terms.items():
            if x is not None:
                c, dx = c * x**dx, 0
            if y is not None:
                c, dy = c * y**dy, 0
            result[(dx, dy)] = result.get((dx, dy), 0) + c
        return BiPoly(result)

    # ---------------------
    # Comparison & display
    # ---------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = BiPoly.constant(other)
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __str__(self) -> str:
        return format_poly(self)

    def __repr__(self) -> str:
        return f"BiPoly({format_poly(self)!r})"


# =====================
# Module-level API
# =====================

def arith(op: Union[ArithOp, str], p: BiPoly, q: BiPoly) -> BiPoly:
    op = ArithOp(op)
    if op == ArithOp.ADD:
        return p + q
    if op == ArithOp.SUB:
        return p - q
    return p * q


def scale_y(p: BiPoly, d: int) -> BiPoly:
    return p.scale_y(d)


@lru_cache(maxsize=None)
def power_xy(n: int) -> BiPoly:
    """(x+y)^n, the chi of n isolated vertices"""
    return BiPoly({(i, n - i): comb(n, i) for i in range(n + 1)})


def evaluate(p: BiPoly, k: int, ell: int) -> int:
    return p.evaluate(k, ell)


def substitute(p: BiPoly, x: Optional[int] = None, y: Optional[int] = None) -> BiPoly:
    return p.substitute(x=x, y=y)


def _format_monomial(dx: int, dy: int) -> str:
    parts = []
    for name, exp in (("x", dx), ("y", dy)):
        if exp == 1:
            parts.append(name)
        elif exp > 1:
            parts.append(f"{name}^{exp}")
    return "*".join(parts)


def format_poly(p: BiPoly) -> str:
    pieces = []
    for i, ((dx, dy), c) in enumerate(p.ordered_terms()):
        mono = _format_monomial(dx, dy)
        magnitude = abs(c)
        if not mono:
            body = str(magnitude)
        elif magnitude == 1:
            body = mono
        else:
            body = f"{magnitude}*{mono}"
        if i == 0:
            pieces.append(f"-{body}" if c < 0 else body)
        else:
            pieces.append(f"{'-' if c < 0 else '+'} {body}")
    return " ".join(pieces) if pieces else "0"


_TERMS = re.compile(r"[+-]?[^+-]+")
_FACTOR = re.compile(r"(?:(\d+)|([xy])(?:\^(\d+))?)")


def _parse_term(term: str) -> BiPoly:
    sign = -1 if term.startswith("-") else 1
    body = term.lstrip("+-")
    coefficient, dx, dy = sign, 0, 0
    for factor in body.split("*"):
        match = _FACTOR.fullmatch(factor)
        if match is None:
            raise PolynomialFormatError(f"malformed factor {factor!r} in term {term!r}")
        number, var, exp = match.groups()
        if number is not None:
            coefficient *= int(number)
        elif var == "x":
            dx += int(exp) if exp else 1
        else:
            dy += int(exp) if exp else 1
    return BiPoly.monomial(coefficient, dx, dy)


def parse_poly(text: str) -> BiPoly:
    compact = "".join(text.split())
    if not compact or not re.fullmatch(r"[+-]?[^+-]+(?:[+-][^+-]+)*", compact):
        raise PolynomialFormatError(f"malformed polynomial {text!r}")
    result = BiPoly.zero()
    for term in _TERMS.findall(compact):
        result = result + _parse_term(term)
    return result
