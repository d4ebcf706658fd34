"""rlab CLI entry point."""

import click
import sys

from rlab import __version__
from rlab.commands import expmap, oracle, selftest, symbol


@click.group()
@click.version_option(version=__version__, prog_name="rlab")
@click.help_option("-h", "--help")
def cli() -> None:
    """rlab - explicit reciprocity laboratory for p-adic fields.

    Compute Hilbert symbols through explicit trace formulas, evaluate the
    exponential map on differential forms, decide norms with an
    independent oracle and run seeded property suites.
    """
    pass


# Register all commands
symbol.register(cli)
oracle.register(cli)
selftest.register(cli)
expmap.register(cli)


def main() -> None:
    """Main entry point for the CLI."""
    try:
        cli()
    except Exception as e:
        click.echo(f"Error: {e}", err=True)
        sys.exit(1)


if __name__ == "__main__":
    main()
