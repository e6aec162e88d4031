"""
Tests for Sequences and Recurrences
===================================

Acceptance 2-6: the classical reproductions, graph cross-checks, the
determinant closed form and the minimal-order dichotomy.
"""

from fractions import Fraction

import pytest

from wildcolor.core.config import BudgetSettings
from wildcolor.core.exceptions import CapacityError, InputError, VerificationError
from wildcolor.graphs.multigraph import cycle_graph, path_graph
from wildcolor.models.schemas import ClassicKind, ColoringParams, Recurrence, SeqParams
from wildcolor.sequences.crosscheck import cross_check_graphs
from wildcolor.sequences.generators import a_seq, b_seq, backward_a0, c_seq, classic_sequences
from wildcolor.sequences.recurrence import det_B_closed_form, hankel_det_B, minimal_recurrence

GRID_4 = [SeqParams.of(p.k, p.ell) for p in ColoringParams.grid(4)]
GRID_6 = [SeqParams.of(p.k, p.ell) for p in ColoringParams.grid(6)]


class TestGenerators:
    """Tests for a_n, b_n and the classical sequences"""

    def test_a_pell(self):
        assert a_seq(SeqParams.of(2, 1), 5) == [1, 3, 7, 17, 41, 99]

    def test_b_values(self):
        assert b_seq(SeqParams.of(2, 1), 5) == [1, 7, 13, 35, 81]
        assert b_seq(SeqParams.of(1, 2), 4) == [2, 8, 20, 56]

    def test_a_spot_value(self):
        assert a_seq(SeqParams.of(1, 2), 7)[7] == 1224

    def test_short_requests(self):
        p = SeqParams.of(1, 1)

        assert a_seq(p, 0) == [1]
        assert b_seq(p, 1) == [1]
        with pytest.raises(InputError):
            b_seq(p, 0)
        with pytest.raises(InputError):
            a_seq(p, -1)

    def test_both_zero_rejected(self):
        with pytest.raises(InputError):
            SeqParams.of(0, 0)

    def test_c_sequence(self):
        p = SeqParams.of(2, 1)

        assert c_seq(p, 5) == [8, 20, 48, 116]

    def test_classic(self):
        assert classic_sequences(ClassicKind.FIBONACCI, 6) == [0, 1, 1, 2, 3, 5, 8]
        assert classic_sequences("lucas", 5) == [1, 3, 4, 7, 11]
        assert classic_sequences("pell", 5) == [1, 1, 3, 7, 17, 41]
        assert classic_sequences("lucas", 0) == []

    @pytest.mark.parametrize("params", GRID_4[:12])
    def test_backward_a0(self, params):
        if params.ell == 0:
            with pytest.raises(InputError):
                backward_a0(params)
        else:
            assert backward_a0(params) == Fraction(1)


class TestClassicalReproduction:
    """Acceptance 2 and 3"""

    def test_fibonacci_lucas_via_sequences(self):
        p = SeqParams.of(1, 1)
        a, b = a_seq(p, 30), b_seq(p, 30)
        fib = classic_sequences("fibonacci", 32)
        lucas = classic_sequences("lucas", 30)

        for n in range(1, 31):
            assert a[n] == fib[n + 2]
            assert b[n - 1] == lucas[n - 1]

    def test_fibonacci_lucas_via_graphs(self, shared_engine):
        fib = classic_sequences("fibonacci", 14)
        lucas = classic_sequences("lucas", 12)

        for n in range(1, 13):
            assert shared_engine.compute(path_graph(n)).evaluate(1, 1) == fib[n + 2]
            assert shared_engine.compute(cycle_graph(n)).evaluate(1, 1) == lucas[n - 1]

    def test_pell_via_graphs(self, shared_engine):
        pell = classic_sequences("pell", 13)

        for n in range(1, 13):
            assert shared_engine.compute(path_graph(n)).evaluate(2, 1) == pell[n + 1]


class TestCrossCheck:
    """Acceptance 4"""

    @pytest.mark.parametrize("params", GRID_4)
    def test_grid(self, params, shared_engine):
        report = cross_check_graphs(params, 10, shared_engine)

        assert report.checked == 20
        assert (report.k, report.ell) == (params.k, params.ell)

    def test_budget(self):
        with pytest.raises(CapacityError):
            cross_check_graphs(SeqParams.of(1, 1), 13, budget=BudgetSettings(crosscheck_max_n=12))

    def test_mismatch_names_n(self, mocker):
        mocker.patch(
            "wildcolor.sequences.crosscheck.b_seq",
            return_value=[1, 3, 4, 8, 11],
        )

        with pytest.raises(VerificationError, match="cycle n=4") as exc_info:
            cross_check_graphs(SeqParams.of(1, 1), 5)

        assert exc_info.value.details["n"] == 4
        assert exc_info.value.exit_code == 1


class TestHankelDeterminant:
    """Acceptance 5"""

    def test_spot_values(self):
        assert hankel_det_B(SeqParams.of(2, 1)) == (-32, -32)
        assert hankel_det_B(SeqParams.of(1, 1)) == (0, 0)
        assert hankel_det_B(SeqParams.of(0, 3)) == (0, 0)
        assert det_B_closed_form(SeqParams.of(3, 1)) == -234

    @pytest.mark.parametrize("params", GRID_6)
    def test_closed_form(self, params):
        det, closed = hankel_det_B(params)

        assert det == closed


class TestMinimalRecurrence:
    """Acceptance 6 plus the solver's edge cases"""

    def test_lucas(self):
        rec = minimal_recurrence(b_seq(SeqParams.of(1, 1), 12), 3)

        assert rec == Recurrence(order=2, coefficients=(1, 1))

    def test_pure_wildcards(self):
        rec = minimal_recurrence(b_seq(SeqParams.of(0, 2), 12), 3)

        assert rec.order == 1
        assert rec.coefficients == (Fraction(2),)

    def test_cycle_order_three(self):
        rec = minimal_recurrence(b_seq(SeqParams.of(2, 1), 12), 3)

        assert rec.order == 3
        assert rec.format_coefficients() == "1,3,1"

    def test_path_order_two(self):
        rec = minimal_recurrence(a_seq(SeqParams.of(2, 1), 12)[1:], 3)

        assert rec.format_coefficients() == "2,1"

    def test_rational_coefficients(self):
        values = [2 ** (9 - n) * 3 ** n for n in range(10)]

        assert minimal_recurrence(values, 3).coefficients == (Fraction(3, 2),)

    def test_zero_sequence(self):
        rec = minimal_recurrence([0] * 8, 3)

        assert rec.order == 1

    def test_eventually_zero_has_none(self):
        assert minimal_recurrence([1, 0, 0, 0, 0, 0, 0, 0], 3) is None

    def test_no_fit(self):
        assert minimal_recurrence([n ** 5 for n in range(8)], 3) is None

    def test_too_few_terms(self):
        with pytest.raises(InputError):
            minimal_recurrence([1, 2, 3, 5, 8, 13, 21], 3)

    @pytest.mark.parametrize("params", GRID_4)
    def test_dichotomy(self, params):
        rec = minimal_recurrence(b_seq(params, 12), 3)
        short = params.k in (0, 1) or params.ell == 0

        assert rec is not None
        assert (rec.order <= 2) == short
        assert rec.fits(b_seq(params, 20))
