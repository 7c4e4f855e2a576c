import json
from io import StringIO

import pytest
from loguru import logger

from lascoux.cli import render_report, run
from lascoux.cli.formats import (
    expansion_from_json,
    format_composition,
    format_expansion,
    format_pair,
    format_permutation,
    parse_compatible_pair,
    parse_composition,
    parse_expansion_lines,
    parse_pair,
    parse_permutation,
    parse_tableau,
)
from lascoux.combi_core import WeakComposition
from lascoux.errors import IdentityCheckError, InternalAssertionError, UsageError
from lascoux.heckewords import Permutation
from lascoux.polynomials import ExpansionResult
from lascoux.verify import CheckKind, PropertyOutcome, Suite, SuiteReport

PAIR_FILE = "1 2\n3\n\n3 2,1\n2,1\n"


def invoke(*argv):
    out, err = StringIO(), StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestLascouxCommand:
    def test_prints_polynomial(self):
        code, out, _ = invoke("lascoux", "--alpha", "0,1")
        assert code == 0
        assert out == "x1 + x2 + b*x1*x2\n"

    def test_key_polynomial(self):
        assert invoke("lascoux", "--alpha", "0,1", "--beta0")[1] == "x1 + x2\n"

    def test_length_mismatch_is_usage_error(self):
        code, out, err = invoke("lascoux", "--alpha", "1,0", "--n", "3")
        assert code == 2
        assert out == ""
        assert err.startswith("error[USAGE_ERROR]:")

    def test_negative_entry(self):
        code, _, err = invoke("lascoux", "--alpha", "1,-1")
        assert code == 2
        assert "nonnegative" in err


class TestExpandCommand:
    def test_trivial_product(self):
        code, out, _ = invoke("expand", "--alpha", "1", "--w", "1")
        assert code == 0
        assert out == "L_(1) : 1\n"

    def test_json_output(self):
        code, out, _ = invoke("expand", "--alpha", "1,0", "--w", "21", "--json")
        assert code == 0
        result = expansion_from_json(out)
        assert result.row(0) == {WeakComposition((2, 0)): 1, WeakComposition((1, 1)): 1}
        assert result.row(1) == {WeakComposition((2, 1)): 1}

    def test_key_flag(self):
        _, out, _ = invoke("expand", "--alpha", "1,0", "--w", "2,1", "--key")
        assert parse_expansion_lines(out) == ExpansionResult({WeakComposition((2, 0)): (1,), WeakComposition((1, 1)): (1,)})

    def test_identity_failure_exit_code(self, mocker):
        mocker.patch("lascoux.cli.expand_product", side_effect=IdentityCheckError("sides differ", details={"w": "321"}))
        code, out, err = invoke("expand", "--alpha", "1,0,2", "--w", "321")
        assert code == 3
        assert err.splitlines() == ["error[IDENTITY_CHECK_FAILED]: sides differ", "  w: 321"]

    def test_internal_error_exit_code(self, mocker):
        mocker.patch("lascoux.cli.expand_product", side_effect=InternalAssertionError("broken"))
        assert invoke("expand", "--alpha", "1", "--w", "1")[0] == 4

    def test_bad_threshold(self):
        code, _, err = invoke("expand", "--alpha", "1,0", "--w", "21", "--threshold", "2")
        assert code == 2
        assert "DOMAIN_ERROR" in err

    def test_flags_reach_the_library(self, mocker):
        expand = mocker.patch("lascoux.cli.expand_product", return_value=ExpansionResult())
        code, out, _ = invoke("expand", "--alpha", "1,0", "--w", "21", "--no-verify", "--threshold", "7")
        assert code == 0 and out == "0\n"
        expand.assert_called_once_with(WeakComposition((1, 0)), Permutation([2, 1]), 2, verify=False, threshold=7)


class TestGrothendieckCommand:
    def test_expansion(self):
        code, out, _ = invoke("grothendieck", "--w", "132")
        assert code == 0
        assert out == "L_(0,1) : 1\n"

    def test_malformed_permutation(self):
        assert invoke("grothendieck", "--w", "1a2")[0] == 2
        assert invoke("grothendieck", "--w", "2,2")[0] == 2


class TestInsertCommand:
    def test_worked_example(self, tmp_path):
        path = tmp_path / "p.txt"
        path.write_text("1 2 3 5\n2 5 6\n3 6\n6 7\n8\n")
        code, out, _ = invoke("insert", str(path), "--cell", "4,2", "--alpha", "0")
        assert code == 0
        assert out.splitlines() == ["trace: IR, DR, D, NR", "m: 3", "P':", "1 2 3 5", "2 5 6", "3 7", "6 8", "8"]

    def test_removing_the_only_cell(self, tmp_path):
        path = tmp_path / "p.txt"
        path.write_text("5\n")
        _, out, _ = invoke("insert", str(path), "--cell", "1,1", "--alpha", "1")
        assert out.splitlines() == ["trace: INIT-REMOVE", "m: 5", "P':"]

    def test_inner_cell_is_usage_error(self, tmp_path):
        path = tmp_path / "p.txt"
        path.write_text("1 2 3 5\n2 5 6\n3 6\n6 7\n8\n")
        code, _, err = invoke("insert", str(path), "--cell", "3,2")
        assert code == 2
        assert "outer cell" in err

    def test_missing_file(self, tmp_path):
        code, _, err = invoke("insert", str(tmp_path / "absent.txt"), "--cell", "1,1")
        assert code == 2
        assert "cannot read" in err


class TestPsiCommand:
    def test_forward(self, tmp_path):
        path = tmp_path / "pair.txt"
        path.write_text(PAIR_FILE)
        code, out, _ = invoke("psi", str(path))
        assert code == 0
        assert out == "(21313, 11223)\n"

    def test_inverse(self, tmp_path):
        path = tmp_path / "word.txt"
        path.write_text("(21313, 11223)\n")
        code, out, _ = invoke("psi", str(path), "--inverse")
        assert code == 0
        assert out.rstrip("\n") == PAIR_FILE.rstrip("\n")

    def test_shape_mismatch(self, tmp_path):
        path = tmp_path / "pair.txt"
        path.write_text("1 2\n\n1\n")
        assert invoke("psi", str(path))[0] == 2


class TestVerifyCommand:
    def _report(self, failed):
        outcome = PropertyOutcome(
            suite=Suite.SETOPS, name="greedy_matches_recursive", kind=CheckKind.RANDOM, passed=10, failed=failed,
            counterexample="(FinSet(), FinSet())" if failed else None,
        )
        return SuiteReport(suite=Suite.SETOPS, seed=3, trials=10, outcomes=[outcome])

    def test_passing_report(self, mocker):
        runner = mocker.patch("lascoux.cli.run_suite", return_value=self._report(0))
        code, out, _ = invoke("verify", "--suite", "setops", "--seed", "3", "--trials", "10", "--workers", "1")
        assert code == 0
        runner.assert_called_once_with(Suite.SETOPS, 3, 10, 1)
        assert out.splitlines()[0].startswith("PASS setops/greedy_matches_recursive [random] passed=10")
        assert out.splitlines()[-1] == "1/1 checks passed (seed=3, trials=10)"

    def test_failing_report(self, mocker):
        mocker.patch("lascoux.cli.run_suite", return_value=self._report(1))
        code, out, _ = invoke("verify", "--suite", "setops", "--workers", "1")
        assert code == 3
        assert "counterexample: (FinSet(), FinSet())" in out

    def test_json_report(self, mocker):
        mocker.patch("lascoux.cli.run_suite", return_value=self._report(0))
        _, out, _ = invoke("verify", "--json", "--workers", "1")
        assert json.loads(out)["outcomes"][0]["name"] == "greedy_matches_recursive"

    def test_negative_trials(self):
        assert invoke("verify", "--trials", "-1")[0] == 2

    def test_render_notes(self):
        report = self._report(0)
        report.outcomes[0].note = "all good"
        assert render_report(report)[0].endswith("(all good)")


class TestGlobalFlags:
    def test_missing_subcommand(self):
        assert invoke()[0] == 2

    def test_unknown_flag(self):
        assert invoke("lascoux", "--alpha", "1", "--bogus")[0] == 2

    def test_bad_log_level(self):
        code, _, err = invoke("--log-level", "LOUD", "lascoux", "--alpha", "1")
        assert code == 2
        assert "Invalid log level" in err

    def test_bad_environment(self, monkeypatch):
        monkeypatch.setenv("LASCOUX_WORKERS", "0")
        code, _, err = invoke("lascoux", "--alpha", "1")
        assert code == 2
        assert "LASCOUX_" in err

    def test_log_file_receives_records(self, tmp_path):
        path = tmp_path / "run.log"
        code, _, _ = invoke("--log-level", "DEBUG", "--log-file", str(path), "lascoux", "--alpha", "1")
        logger.remove()
        logger.disable("lascoux")
        assert code == 0
        assert "dispatching" in path.read_text()


class TestFormats:
    def test_permutations(self):
        assert parse_permutation("321") == parse_permutation("3,2,1") == Permutation([3, 2, 1])
        assert parse_permutation("1") == Permutation()
        assert format_permutation(Permutation()) == "1"
        assert format_permutation(Permutation([2, 1])) == "2,1"

    def test_composition(self):
        assert parse_composition("1, 0 ,2") == WeakComposition((1, 0, 2))
        assert format_composition(WeakComposition((1, 0, 2))) == "1,0,2"
        with pytest.raises(UsageError):
            parse_composition("1,x")

    def test_pair_round_trip(self):
        pair = parse_pair(PAIR_FILE)
        assert parse_pair(format_pair(pair)) == pair

    def test_tableau_file_with_two_blocks(self):
        with pytest.raises(UsageError):
            parse_tableau("1 2\n\n3\n")

    def test_compatible_pair(self):
        pair = parse_compatible_pair("(21313, 11223)")
        assert str(pair) == "(21313, 11223)"
        assert str(parse_compatible_pair("(12,1, 1,2)")) == "(12,1, 12)"
        with pytest.raises(UsageError):
            parse_compatible_pair("21313 11223")

    def test_expansion_lines(self):
        result = ExpansionResult({WeakComposition((1, 0)): (1, 0, 3), WeakComposition((0, 1)): (0, 2)})
        assert parse_expansion_lines(format_expansion(result)) == result
        assert format_expansion(ExpansionResult()) == "0"
        with pytest.raises(UsageError):
            parse_expansion_lines("L_(1) = 1")

    def test_expansion_json(self):
        with pytest.raises(UsageError):
            expansion_from_json("[1, 2]")
