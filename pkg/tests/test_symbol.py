"""Tests for the symbol command."""
from click.testing import CliRunner

from rlab.cli import cli
from tests.report_utils import error_lines, parse_report


class TestSymbol:
    """Test cases for the symbol command."""

    def test_command_exists(self):
        runner = CliRunner()
        result = runner.invoke(cli, ["symbol", "--help"])
        assert result.exit_code == 0
        assert "Hilbert symbol" in result.output
        assert "--alpha" in result.output
        assert "--beta" in result.output

    def test_four_and_zeta(self):
        runner = CliRunner()
        result = runner.invoke(
            cli, ["symbol", "--field", "f0", "--alpha", "1+p", "--beta", "zeta"]
        )
        assert result.exit_code == 0
        report = parse_report(result.output)
        assert report["command"] == "symbol"
        assert report["success"] is True
        assert report["guard_recheck"] is True
        assert report["outputs"]["c"] == 2
        assert report["outputs"]["modulus"] == 3
        assert report["outputs"]["alpha"]["expr"] == "4"
        assert report["inputs"] == {"alpha": "1+p", "beta": "zeta", "field": "f0", "n": 1}
        assert report["precision"] == 40

    def test_field_file(self, fixtures_dir):
        runner = CliRunner()
        result = runner.invoke(
            cli,
            ["symbol", "--field", str(fixtures_dir / "f0.toml"), "--alpha", "1+p", "--beta", "pi"],
        )
        assert result.exit_code == 0
        assert parse_report(result.output)["outputs"]["c"] == 1

    def test_deterministic_output(self):
        runner = CliRunner()
        args = ["symbol", "--field", "f0", "--alpha", "(1+p)^2", "--beta", "pi^3*zeta"]
        first = runner.invoke(cli, args)
        second = runner.invoke(cli, args)
        assert first.exit_code == 0
        assert first.output == second.output

    def test_alpha_outside_domain(self):
        runner = CliRunner()
        result = runner.invoke(
            cli, ["symbol", "--field", "f0", "--alpha", "zeta", "--beta", "zeta"]
        )
        assert result.exit_code == 2
        assert error_lines(result.output)
        assert "2/(p-1)" in result.output

    def test_syntax_error_column(self):
        runner = CliRunner()
        result = runner.invoke(
            cli, ["symbol", "--field", "f0", "--alpha", "1+*p", "--beta", "zeta"]
        )
        assert result.exit_code == 2
        assert "at column 3" in result.output

    def test_level_out_of_range(self):
        runner = CliRunner()
        result = runner.invoke(
            cli, ["symbol", "--field", "f0", "--alpha", "1+p", "--beta", "zeta", "--n", "2"]
        )
        assert result.exit_code == 2
        assert "outside 1..1" in result.output

    def test_missing_field_file(self, temp_dir):
        runner = CliRunner()
        result = runner.invoke(
            cli,
            ["symbol", "--field", str(temp_dir / "none.toml"), "--alpha", "1+p", "--beta", "zeta"],
        )
        assert result.exit_code == 2
        assert "File not found" in result.output

    def test_invalid_field(self, fixtures_dir):
        runner = CliRunner()
        result = runner.invoke(
            cli,
            [
                "symbol",
                "--field",
                str(fixtures_dir / "not_eisenstein.toml"),
                "--alpha",
                "1+p",
                "--beta",
                "zeta",
            ],
        )
        assert result.exit_code == 2
        assert "not Eisenstein" in result.output

    def test_precision_exhausted(self):
        runner = CliRunner()
        result = runner.invoke(
            cli,
            ["symbol", "--field", "f0", "--alpha", "1+p", "--beta", "zeta", "--precision", "2"],
        )
        assert result.exit_code == 3
