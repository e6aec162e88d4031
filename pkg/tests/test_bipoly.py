"""
Tests for Bivariate Polynomials
===============================
"""

import random

import pytest

from wildcolor.algebra.bipoly import (
    BiPoly,
    arith,
    evaluate,
    format_poly,
    parse_poly,
    power_xy,
    scale_y,
    substitute,
)
from wildcolor.core.exceptions import PolynomialFormatError

X = BiPoly.x()
Y = BiPoly.y()


class TestArithmetic:
    """Tests for ring operations"""

    def test_zero_coefficients_dropped(self):
        p = X - X

        assert p.is_zero()
        assert p == 0
        assert p.terms == {}

    def test_arith_ops(self):
        assert arith("add", X, Y) == X + Y
        assert arith("sub", X, Y) == X - Y
        assert arith("mul", X + Y, X - Y) == X ** 2 - Y ** 2

    def test_integer_scalars(self):
        assert 2 * X + 1 == BiPoly({(1, 0): 2, (0, 0): 1})
        assert 1 - X == -(X - 1)

    def test_scale_y(self):
        assert scale_y(X + 1, 2) == X * Y ** 2 + Y ** 2

    def test_power_xy_binomial(self):
        assert power_xy(0) == BiPoly.one()
        assert power_xy(3) == (X + Y) ** 3
        assert power_xy(3).coefficient(1, 2) == 3

    def test_huge_coefficients_exact(self):
        p = power_xy(60)

        assert p.coefficient(30, 30) == 118264581564861424
        assert p.evaluate(1, 1) == 2 ** 60

    def test_hashable(self):
        assert len({X + Y, Y + X, X}) == 2


class TestEvaluation:
    """Tests for evaluation and substitution"""

    def test_evaluate(self):
        p = (X + Y) ** 2 - X

        assert evaluate(p, 2, 1) == 7
        assert evaluate(p, 0, 0) == 0

    def test_substitute_keeps_other_variable(self):
        p = (X + Y) ** 2 - X

        assert substitute(p, x=1) == Y ** 2 + 2 * Y
        assert substitute(p, y=0) == X ** 2 - X
        assert substitute(p, x=2, y=1) == BiPoly.constant(7)


class TestTextForm:
    """Tests for formatting and parsing"""

    def test_graded_order(self):
        p = (X + Y) ** 2 - X

        assert format_poly(p) == "x^2 + 2*x*y + y^2 - x"

    def test_zero_and_constants(self):
        assert format_poly(BiPoly.zero()) == "0"
        assert format_poly(BiPoly.constant(-3)) == "-3"
        assert format_poly(-X + 1) == "-x + 1"

    def test_parse_inverts_format(self):
        for p in (power_xy(4) - 3 * X * Y, -Y ** 3 + 5, BiPoly.zero() + 7 * X ** 2 * Y):
            assert parse_poly(format_poly(p)) == p

    def test_parse_ignores_whitespace(self):
        assert parse_poly(" x ^2+2 * x*y ") == X ** 2 + 2 * X * Y

    @pytest.mark.parametrize("text", ["", "x^", "2**x", "x + + y", "z"])
    def test_malformed(self, text):
        with pytest.raises(PolynomialFormatError):
            parse_poly(text)


def random_poly(rng: random.Random, max_terms: int = 4, max_degree: int = 3) -> BiPoly:
    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        mono = (rng.randint(0, max_degree), rng.randint(0, max_degree))
        terms[mono] = rng.randint(-9, 9)
    return BiPoly(terms)


class TestProperties:
    """Seeded random checks of the ring laws, evaluation and the text form"""

    CASES = 1000

    @pytest.fixture
    def triples(self):
        rng = random.Random(20091)
        return [
            (random_poly(rng), random_poly(rng), random_poly(rng)) for _ in range(self.CASES)
        ]

    def test_commutative(self, triples):
        for p, q, _ in triples:
            assert p + q == q + p
            assert p * q == q * p

    def test_associative(self, triples):
        for p, q, r in triples:
            assert (p + q) + r == p + (q + r)
            assert (p * q) * r == p * (q * r)

    def test_distributive(self, triples):
        for p, q, r in triples:
            assert p * (q + r) == p * q + p * r

    def test_identities_and_inverse(self, triples):
        zero, one = BiPoly.zero(), BiPoly.one()
        for p, _, _ in triples:
            assert p + zero == p
            assert p * one == p
            assert (p * zero).is_zero()
            assert (p - p).is_zero()
            assert p + (-p) == zero

    def test_evaluate_is_a_homomorphism(self):
        rng = random.Random(20092)
        for _ in range(200):
            p, q = random_poly(rng), random_poly(rng)
            for k in range(6):
                for ell in range(6):
                    assert (p + q).evaluate(k, ell) == p.evaluate(k, ell) + q.evaluate(k, ell)
                    assert (p * q).evaluate(k, ell) == p.evaluate(k, ell) * q.evaluate(k, ell)

    def test_substitute_then_evaluate(self):
        rng = random.Random(20093)
        for _ in range(200):
            p = random_poly(rng)
            k, ell = rng.randint(0, 5), rng.randint(0, 5)

            assert substitute(p, x=k).evaluate(0, ell) == p.evaluate(k, ell)
            assert substitute(p, y=ell).evaluate(k, 0) == p.evaluate(k, ell)

    def test_parse_inverts_format(self):
        rng = random.Random(20094)
        for _ in range(self.CASES):
            p = random_poly(rng, max_terms=6, max_degree=5)

            assert parse_poly(format_poly(p)) == p
