"""
Tests for the Command-Line Interface
====================================

Commands go through run(), which returns (exit code, stdout text) and
writes error lines to stderr.
"""

import json

import pytest

from wildcolor.cli import main, run
from wildcolor.models.schemas import CheckResult, VerificationSummary

P2 = "p 2 1\ne 1 2\n"
C4 = "p 4 4\ne 1 2\ne 2 3\ne 3 4\ne 4 1\n"


class TestChi:
    """Tests for `wildcolor chi`"""

    def test_polynomial(self, graph_file):
        assert run(["chi", str(graph_file(P2))]) == (0, "x^2 + 2*x*y + y^2 - x")

    def test_eval(self, graph_file):
        assert run(["chi", str(graph_file(C4)), "--eval", "2", "1"]) == (0, "35")

    def test_engine_flags(self, graph_file):
        path = str(graph_file(C4))
        default = run(["chi", path])
        flagged = run(["chi", path, "--memo", "canonical", "--strategy", "first_edge"])

        assert default == flagged

    def test_malformed_file(self, graph_file, capsys):
        code, output = run(["chi", str(graph_file("p 2 1\ne 1 3\n"))])

        assert (code, output) == (2, "")
        assert "error[GRAPH_FORMAT]: line 2:" in capsys.readouterr().err

    def test_missing_file(self, tmp_path, capsys):
        code, _ = run(["chi", str(tmp_path / "nope.mg")])

        assert code == 2
        assert "error[INPUT_ERROR]" in capsys.readouterr().err


class TestCount:
    """Tests for `wildcolor count`"""

    @pytest.mark.parametrize("oracle", ["brute", "subset"])
    def test_oracles(self, graph_file, oracle):
        path = str(graph_file(C4))

        assert run(["count", path, "-k", "2", "-l", "1", "--oracle", oracle]) == (0, "35")

    def test_budget_flag(self, graph_file, capsys):
        path = str(graph_file(C4))
        code, _ = run(["count", path, "-k", "1", "-l", "1", "--max-brute-vertices", "3"])

        assert code == 2
        assert "error[CAPACITY_EXCEEDED]" in capsys.readouterr().err


class TestSequences:
    """Tests for `wildcolor seq` and `wildcolor recurrence`"""

    def test_path(self):
        assert run(["seq", "path", "-k", "2", "-l", "1", "-n", "5"]) == (0, "3 7 17 41 99")

    def test_cycle(self):
        assert run(["seq", "cycle", "-k", "2", "-l", "1", "-n", "5"]) == (0, "1 7 13 35 81")

    def test_both_zero(self, capsys):
        code, _ = run(["seq", "path", "-k", "0", "-l", "0", "-n", "3"])

        assert code == 2
        assert "error[INPUT_ERROR]" in capsys.readouterr().err

    def test_cycle_recurrence(self):
        assert run(["recurrence", "cycle", "-k", "2", "-l", "1"]) == (
            0,
            "order=3 coeffs=1,3,1 detB=-32",
        )

    def test_lucas_recurrence(self):
        assert run(["recurrence", "cycle", "-k", "1", "-l", "1"]) == (
            0,
            "order=2 coeffs=1,1 detB=0",
        )

    def test_path_recurrence(self):
        assert run(["recurrence", "path", "-k", "2", "-l", "1"]) == (0, "order=2 coeffs=2,1")

    def test_too_few_terms(self, capsys):
        code, _ = run(["recurrence", "path", "-k", "2", "-l", "1", "--terms", "5"])

        assert code == 2
        assert "--terms must be >= 8" in capsys.readouterr().err

    def test_zero_terms_is_not_the_default(self, capsys):
        code, _ = run(["recurrence", "cycle", "-k", "2", "-l", "1", "--terms", "0"])

        assert code == 2
        assert "--terms must be >= 8, got 0" in capsys.readouterr().err


class TestFamily:
    """Tests for `wildcolor family`"""

    def test_sneaky(self):
        code, output = run(["family", "sneaky", "2", "2", "1"])

        assert code == 0
        assert output.splitlines() == [
            "p 6 6",
            "e 1 2",
            "e 2 3",
            "e 3 4",
            "e 4 5",
            "e 5 6",
            "e 2 5",
        ]

    def test_output_round_trips_through_chi(self, graph_file):
        _, text = run(["family", "cycle", "4"])

        assert run(["chi", str(graph_file(text + "\n")), "--eval", "2", "1"]) == (0, "35")

    def test_bad_family(self, capsys):
        code, _ = run(["family", "star", "3"])

        assert code == 2
        assert "unknown graph family" in capsys.readouterr().err


class TestVerify:
    """Tests for `wildcolor verify`"""

    def test_identities(self):
        code, output = run(["verify", "identities", "-l", "1", "--max", "10"])

        assert code == 0
        assert output.splitlines()[-1].startswith("ok=true")

    def test_identities_json(self):
        code, output = run(["verify", "identities", "-l", "2", "--max", "8", "--json"])
        payload = json.loads(output)

        assert code == 0
        assert payload["ok"] is True
        assert payload["failed"] == 0

    def test_oracle(self):
        code, output = run(
            [
                "verify", "oracle",
                "--kl-max", "1",
                "--random-count", "5",
                "--max-vertices", "4",
                "--max-edges", "5",
                "--simple-max-vertices", "3",
            ]
        )

        assert code == 0
        assert output.splitlines()[0].startswith("PASS oracle:simple")

    def test_oracle_wide_grid_runs(self):
        code, output = run(
            ["verify", "oracle", "--kl-max", "4", "--random-count", "5", "--simple-max-vertices", "3"]
        )

        assert code == 0
        assert output.splitlines()[-1].startswith("ok=true")

    def test_sneaky(self):
        code, output = run(["verify", "sneaky", "--rst", "2", "2", "1", "-l", "1"])

        assert code == 0
        assert "PASS sneaky(2,2,1)[l=1]:P1.rhs checked=1" in output.splitlines()

    def test_sneaky_out_of_range(self, capsys):
        code, _ = run(["verify", "sneaky", "--rst", "1", "2", "1", "-l", "1"])

        assert code == 2
        assert "r >= 2" in capsys.readouterr().err

    def test_recurrences(self):
        code, output = run(["verify", "recurrences", "--kl-max", "1"])

        assert code == 0
        assert "PASS minimal[k=1,l=1] checked=1" in output.splitlines()

    def test_failure_exit_code(self, mocker):
        failing = VerificationSummary(title="identities")
        failing.add(CheckResult(name="T1.4[k=1,l=1]", passed=False, detail="(r=2,s=2) lhs=1 rhs=2"))
        service = mocker.patch("wildcolor.cli.VerificationService")
        service.return_value.verify_identities.return_value = failing

        code, output = run(["verify", "identities"])

        assert code == 1
        assert output.splitlines() == [
            "FAIL T1.4[k=1,l=1] (r=2,s=2) lhs=1 rhs=2",
            "ok=false checked=0 failed=1",
        ]


class TestUsage:
    """Tests for argument errors and the entry point"""

    def test_missing_command(self, capsys):
        code, _ = run([])

        assert code == 2
        assert "error[INPUT_ERROR]" in capsys.readouterr().err

    def test_missing_required_flag(self, capsys):
        code, _ = run(["seq", "path", "-k", "1", "-l", "1"])

        assert code == 2
        assert "-n" in capsys.readouterr().err

    def test_main_prints_and_exits(self, capsys):
        with pytest.raises(SystemExit) as exc_info:
            main(["seq", "path", "-k", "1", "-l", "1", "-n", "4"])

        assert exc_info.value.code == 0
        assert capsys.readouterr().out == "2 3 5 8\n"
