"""
CLI functionality tests for signedmagic.
"""

import json

import pytest

from signedmagic.base import smr3_even
from signedmagic.cli import main
from signedmagic.core import params_new
from signedmagic.formatter import format_as_csv, parse_csv
from signedmagic.verifier import verify_smr


def stderr_of(result) -> str:
    try:
        return result.stderr
    except ValueError:
        return result.output


@pytest.mark.cli
class TestCLI:
    """Test the command group."""

    def test_help_command(self, runner):
        result = runner.invoke(main, ["--help"])

        assert result.exit_code == 0
        assert "signed magic rectangles" in result.output
        for command in ("generate", "verify", "search", "count", "enumerate", "sweep"):
            assert command in result.output

    def test_version_command(self, runner):
        result = runner.invoke(main, ["--version"])

        assert result.exit_code == 0
        assert result.output.strip() != ""


@pytest.mark.cli
class TestGenerateCommand:
    """Test signedmagic generate."""

    def test_csv_to_stdout(self, runner):
        result = runner.invoke(main, ["generate", "3", "10", "10", "-f", "csv", "-q"])

        assert result.exit_code == 0, stderr_of(result)
        assert result.stdout == format_as_csv(smr3_even(10))

    def test_status_goes_to_stderr(self, runner):
        result = runner.invoke(main, ["generate", "4", "12", "9", "-f", "csv"])

        assert result.exit_code == 0
        assert "via fixed-4x12" in stderr_of(result)
        assert "via" not in result.stdout

    @pytest.mark.parametrize("fmt", ["text", "csv", "json"])
    def test_formats(self, runner, fmt):
        result = runner.invoke(main, ["generate", "6", "10", "5", "-f", fmt, "-q"])

        assert result.exit_code == 0, stderr_of(result)
        if fmt == "json":
            assert json.loads(result.stdout)["m"] == 6
        else:
            assert len(result.stdout.splitlines()) == 6

    def test_inadmissible(self, runner):
        result = runner.invoke(main, ["generate", "3", "5", "4"])

        assert result.exit_code == 2
        assert "mk != 3n" in stderr_of(result)

    def test_missing_arguments(self, runner):
        result = runner.invoke(main, ["generate", "3"])

        assert result.exit_code == 2

    def test_output_file(self, runner, tmp_path):
        output_file = tmp_path / "smr.csv"
        result = runner.invoke(
            main, ["generate", "10", "30", "9", "-f", "csv", "-o", str(output_file)]
        )

        assert result.exit_code == 0, stderr_of(result)
        assert result.stdout == ""
        rect = parse_csv(output_file.read_text(encoding="utf-8"))
        assert verify_smr(rect, params_new(10, 30, 9)).passed

    def test_sweep_option(self, runner):
        result = runner.invoke(main, ["generate", "--sweep", "4", "-q"])

        assert result.exit_code == 0, stderr_of(result)
        assert "3/3 passed" in result.stdout


@pytest.mark.cli
class TestVerifyCommand:
    """Test signedmagic verify and its exit codes."""

    def test_valid_file(self, runner, fixed_4_12_file):
        result = runner.invoke(main, ["verify", str(fixed_4_12_file), "4", "12", "9"])

        assert result.exit_code == 0
        assert "SMR(4,12;9,3): pass" in result.stdout

    def test_mutated_file(self, runner, mutated_4_12_file):
        result = runner.invoke(main, ["verify", str(mutated_4_12_file), "4", "12", "9"])

        assert result.exit_code == 1
        assert "fail" in result.stdout
        assert "symbols-foreign" in result.stdout

    def test_wrong_dimensions(self, runner, fixed_4_12_file):
        result = runner.invoke(main, ["verify", str(fixed_4_12_file), "3", "12", "12"])

        assert result.exit_code == 1
        assert "dimensions" in result.stdout

    def test_not_integers(self, runner, not_integers_file):
        result = runner.invoke(main, ["verify", str(not_integers_file), "3", "3", "3"])

        assert result.exit_code == 4

    def test_missing_file(self, runner, tmp_path):
        result = runner.invoke(
            main, ["verify", str(tmp_path / "absent.csv"), "3", "3", "3"]
        )

        assert result.exit_code == 4

    def test_inadmissible_parameters(self, runner, fixed_4_12_file):
        result = runner.invoke(main, ["verify", str(fixed_4_12_file), "4", "12", "8"])

        assert result.exit_code == 2

    def test_generate_then_verify(self, runner, tmp_path):
        output_file = tmp_path / "smr.json"
        generated = runner.invoke(
            main, ["generate", "9", "12", "4", "-f", "json", "-o", str(output_file)]
        )
        assert generated.exit_code == 0, stderr_of(generated)

        result = runner.invoke(main, ["verify", str(output_file), "9", "12", "4"])

        assert result.exit_code == 0
        assert "SMR(9,12;4,3): pass" in result.stdout


@pytest.mark.cli
@pytest.mark.search
class TestSearchCommands:
    """Test signedmagic search, count and enumerate."""

    def test_search_found(self, runner):
        result = runner.invoke(main, ["search", "4", "4", "3", "-f", "csv", "-q"])

        assert result.exit_code == 0, stderr_of(result)
        rect = parse_csv(result.stdout)
        assert verify_smr(rect, params_new(4, 4, 3)).passed

    def test_search_inadmissible(self, runner):
        result = runner.invoke(main, ["search", "2", "2", "3"])

        assert result.exit_code == 2

    def test_search_inadmissible_allowed(self, runner):
        result = runner.invoke(
            main, ["search", "3", "2", "2", "--allow-inadmissible", "-f", "csv", "-q"]
        )

        assert result.exit_code == 0, stderr_of(result)
        assert len(result.stdout.splitlines()) == 3

    def test_search_none_exists(self, runner):
        result = runner.invoke(main, ["search", "3", "3", "2", "--allow-inadmissible"])

        assert result.exit_code == 1
        assert "no SMR(3,3;2,3) exists" in stderr_of(result)

    def test_search_budget_exhausted(self, runner):
        result = runner.invoke(main, ["search", "5", "5", "3", "--budget-nodes", "1"])

        assert result.exit_code == 3

    def test_count(self, runner):
        result = runner.invoke(main, ["count", "3", "2", "2", "-q"])

        assert result.exit_code == 0
        assert result.stdout.strip() == "SMR(3,2;2,3): 12"

    def test_count_saturates(self, runner):
        result = runner.invoke(main, ["count", "3", "2", "2", "--cap", "5", "-q"])

        assert result.stdout.strip() == "SMR(3,2;2,3): >= 5"

    def test_count_too_large(self, runner):
        result = runner.invoke(main, ["count", "3", "6", "6"])

        assert result.exit_code == 2

    def test_enumerate(self, runner):
        result = runner.invoke(main, ["enumerate", "5"])

        assert result.exit_code == 0
        assert result.stdout.splitlines() == [
            "3 3 3",
            "3 4 4",
            "4 4 3",
            "3 5 5",
            "5 5 3",
        ]


@pytest.mark.cli
class TestSweepCommand:
    """Test signedmagic sweep."""

    def test_sweep_range(self, runner):
        result = runner.invoke(main, ["sweep", "5"])

        assert result.exit_code == 0, stderr_of(result)
        assert "5/5 passed" in result.stdout

    def test_sweep_batch(self, runner, small_sweep_file):
        result = runner.invoke(main, ["sweep", "--batch", str(small_sweep_file), "-q"])

        assert result.exit_code == 0, stderr_of(result)
        assert "4/4 passed" in result.stdout

    def test_sweep_batch_with_inadmissible_triple(self, runner, mixed_sweep_file):
        result = runner.invoke(main, ["sweep", "--batch", str(mixed_sweep_file)])

        assert result.exit_code == 1
        assert "1/2 passed (1 inadmissible)" in result.stdout

    def test_sweep_batch_without_triples(self, runner, comments_sweep_file):
        result = runner.invoke(main, ["sweep", "--batch", str(comments_sweep_file)])

        assert result.exit_code == 4

    def test_sweep_needs_a_range_or_batch(self, runner):
        result = runner.invoke(main, ["sweep"])

        assert result.exit_code == 1
