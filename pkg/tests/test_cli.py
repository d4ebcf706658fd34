"""Tests for the command group."""
from click.testing import CliRunner

from rlab import __version__
from rlab.cli import cli


class TestCli:

    def test_version(self):
        runner = CliRunner()
        result = runner.invoke(cli, ["--version"])
        assert result.exit_code == 0
        assert __version__ in result.output

    def test_help_lists_commands(self):
        runner = CliRunner()
        result = runner.invoke(cli, ["-h"])
        assert result.exit_code == 0
        for command in ("symbol", "oracle", "selftest", "expmap"):
            assert command in result.output

    def test_field_is_required(self):
        runner = CliRunner()
        result = runner.invoke(cli, ["symbol", "--alpha", "1+p", "--beta", "zeta"])
        assert result.exit_code == 2
        assert "--field" in result.output
