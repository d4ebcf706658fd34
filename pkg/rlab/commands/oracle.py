"""Decide norms from Kummer extensions without any reciprocity formula."""

from typing import Any, Dict, Optional

import click

from rlab.commands.common import (
    CommandFailed,
    captured_warnings,
    field_option,
    precision_option,
    reraise,
)
from rlab.core.config import load_field, read_desc
from rlab.core.exceptions import DomainError
from rlab.core.expr import evaluate_source
from rlab.core.norm_oracle import NORM_SAMPLE_BUDGET, NormOracle, check_parameters
from rlab.core.reciprocity import CyclotomicContext, hilbert_symbol
from rlab.core.result_types import Report


def register(cli) -> None:
    """Register the oracle command with the CLI."""

    @cli.command("oracle")
    @field_option
    @click.option("--alpha", required=True, help="Element expression for alpha")
    @click.option("--beta", required=True, help="Element expression for beta")
    @click.option(
        "--budget",
        type=click.IntRange(min=1),
        default=NORM_SAMPLE_BUDGET,
        help=f"Maximum number of sampled norms (default: {NORM_SAMPLE_BUDGET})",
    )
    @precision_option
    def oracle(
        field_source: str,
        alpha: str,
        beta: str,
        budget: int,
        precision: Optional[int],
    ) -> None:
        """Decide whether alpha is a norm from K(beta^(1/p)).

        Supports p in {3, 5} with n = 1. When alpha lies in the domain of
        the trace formula, the verdict is compared with the symbol: alpha
        is a norm exactly when (alpha, beta) = 1.
        """
        try:
            with captured_warnings() as messages:
                desc = read_desc(field_source)
                check_parameters(desc.p, desc.n)
                config = load_field(field_source, precision)
                tower = config.tower
                alpha_value = evaluate_source(alpha, tower)
                beta_value = evaluate_source(beta, tower)
                verdict = NormOracle(tower, budget).verdict(
                    alpha_value, beta_value, (alpha, beta)
                )
                concordance: Dict[str, Any] = {"applicable": False}
                try:
                    value = hilbert_symbol(
                        CyclotomicContext.create(tower), alpha_value, beta_value
                    )
                except DomainError as e:
                    concordance["reason"] = str(e)
                else:
                    concordance = {
                        "applicable": True,
                        "symbol": value.to_json(),
                        "concordant": value.is_trivial() == verdict.is_norm,
                    }

            concordant = concordance.get("concordant", True)
            if concordance["applicable"]:
                line = "concordant" if concordant else "DISCORDANT"
                click.echo(
                    f"is_norm = {verdict.is_norm}, c = {concordance['symbol']['c']}: {line}",
                    err=True,
                )
            report = Report(
                success=concordant,
                message="alpha is a norm" if verdict.is_norm else "alpha is not a norm",
                warnings=messages,
                command="oracle",
                fingerprint=tower.desc.fingerprint(),
                inputs={"field": field_source, "alpha": alpha, "beta": beta, "budget": budget},
                outputs={**verdict.to_json(), "concordance": concordance},
                precision=tower.prec,
            )
            click.echo(report.to_json())
            if not concordant:
                raise CommandFailed("oracle verdict disagrees with the symbol", 1)

        except Exception as e:
            reraise(e, "Norm oracle")
