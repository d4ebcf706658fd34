"""Compute Hilbert symbols through the explicit trace formula."""

from typing import Optional

import click

from rlab.commands.common import (
    captured_warnings,
    field_option,
    guarded,
    precision_option,
    reraise,
)
from rlab.core.config import FieldConfig, load_field
from rlab.core.expr import evaluate_source
from rlab.core.reciprocity import CyclotomicContext, SymbolValue, hilbert_symbol
from rlab.core.result_types import Report
from rlab.utils.serialization import element_to_json


def register(cli) -> None:
    """Register the symbol command with the CLI."""

    @cli.command("symbol")
    @field_option
    @click.option("--alpha", required=True, help="Element expression for alpha")
    @click.option("--beta", required=True, help="Element expression for beta")
    @click.option(
        "--n",
        "level",
        type=click.IntRange(min=1),
        default=None,
        help="Level n of the root of unity (default: the field's n)",
    )
    @precision_option
    def symbol(
        field_source: str,
        alpha: str,
        beta: str,
        level: Optional[int],
        precision: Optional[int],
    ) -> None:
        """Compute the Hilbert symbol (alpha, beta) = zeta^c.

        alpha must satisfy ord(alpha - 1) >= 2/(p-1); beta is any nonzero
        element. The result is recomputed ten digits higher before it is
        reported.
        """
        try:
            with captured_warnings() as messages:
                config = load_field(field_source, precision)

                def compute(cfg: FieldConfig) -> SymbolValue:
                    ctx = CyclotomicContext.create(cfg.tower, level)
                    return hilbert_symbol(
                        ctx,
                        evaluate_source(alpha, cfg.tower),
                        evaluate_source(beta, cfg.tower),
                    )

                value = guarded(compute, config)
                tower = config.tower
                alpha_value = evaluate_source(alpha, tower)
                beta_value = evaluate_source(beta, tower)

            report = Report(
                success=True,
                message=f"(alpha, beta) = zeta_{value.modulus}^{value.c}",
                warnings=messages,
                command="symbol",
                fingerprint=tower.desc.fingerprint(),
                inputs={
                    "field": field_source,
                    "alpha": alpha,
                    "beta": beta,
                    "n": value.n,
                },
                outputs={
                    **value.to_json(),
                    "alpha": element_to_json(alpha_value),
                    "beta": element_to_json(beta_value),
                },
                precision=tower.prec,
                guard_recheck=True,
            )
            click.echo(report.to_json())

        except Exception as e:
            reraise(e, "Symbol computation")
