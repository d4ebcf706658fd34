"""Run the seeded property suites."""

from dataclasses import asdict
from typing import Optional

import click

from rlab.commands.common import (
    CommandFailed,
    captured_warnings,
    field_option,
    precision_option,
    reraise,
)
from rlab.core.config import load_field
from rlab.core.result_types import Report
from rlab.core.selftest import SUITES, run_selftest


def register(cli) -> None:
    """Register the selftest command with the CLI."""

    @cli.command("selftest")
    @field_option
    @click.option(
        "--suite",
        type=click.Choice(list(SUITES) + ["all"]),
        default="all",
        help="Suite to run (default: all)",
    )
    @click.option("--seed", type=int, default=0, help="Run seed (default: 0)")
    @click.option(
        "--samples",
        type=click.IntRange(min=1),
        default=20,
        help="Samples per property (default: 20)",
    )
    @precision_option
    def selftest(
        field_source: str,
        suite: str,
        seed: int,
        samples: int,
        precision: Optional[int],
    ) -> None:
        """Check algebraic identities on seeded random samples.

        Prints a JSON report; every failing property carries the sample
        that broke it. Exits with status 1 if any property fails.
        """
        try:
            with captured_warnings() as messages:
                config = load_field(field_source, precision)
                results = run_selftest(config, suite, seed, samples)

            failures = []
            for result in results:
                for prop in result.failures:
                    failures.append(f"{result.suite}/{prop.name}")
                    click.echo(
                        f"FAIL {result.suite}/{prop.name}: {prop.counterexample}", err=True
                    )
            passed = not failures
            report = Report(
                success=passed,
                message="all properties passed" if passed else f"{len(failures)} properties failed",
                warnings=messages,
                command="selftest",
                fingerprint=config.tower.desc.fingerprint(),
                inputs={
                    "field": field_source,
                    "suite": suite,
                    "seed": seed,
                    "samples": samples,
                },
                outputs={
                    "suites": [asdict(r) for r in results],
                    "failures": failures,
                },
                precision=config.tower.prec,
            )
            click.echo(report.to_json())
            if not passed:
                raise CommandFailed(f"{len(failures)} properties failed", 1)

        except Exception as e:
            reraise(e, "Self-test")
