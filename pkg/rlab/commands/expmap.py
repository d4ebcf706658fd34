"""Evaluate exp_eta on degree-one forms through the Hilbert pairing."""

from typing import List, Optional, Tuple

import click

from rlab.commands.common import (
    captured_warnings,
    field_option,
    guarded,
    precision_option,
    reraise,
)
from rlab.core.config import FieldConfig, load_field
from rlab.core.exp_map import FormExpression, exp2_eval, rewrite_to_zeta
from rlab.core.expr import evaluate_source
from rlab.core.reciprocity import CyclotomicContext, SymbolValue
from rlab.core.result_types import Report
from rlab.utils.serialization import element_to_json


def _split_term(
    ctx: click.Context, param: click.Parameter, value: Tuple[str, ...]
) -> List[Tuple[str, str]]:
    terms = []
    for raw in value:
        parts = raw.split(",")
        if len(parts) != 2 or not all(part.strip() for part in parts):
            raise click.BadParameter(f"expected 'A,B', got {raw!r}")
        terms.append((parts[0].strip(), parts[1].strip()))
    return terms


def register(cli) -> None:
    """Register the expmap command with the CLI."""

    @cli.command("expmap")
    @field_option
    @click.option("--eta", required=True, help="Element expression for eta")
    @click.option(
        "--term",
        "terms",
        multiple=True,
        required=True,
        callback=_split_term,
        help="Form term 'A,B' meaning A dB/B (A dB with --db); repeatable",
    )
    @click.option("--db", is_flag=True, help="Read terms as A dB instead of A dB/B")
    @click.option(
        "--rewrite",
        is_flag=True,
        help="Also rewrite the form as a dzeta/zeta (needs pi = zeta - 1)",
    )
    @precision_option
    def expmap(
        field_source: str,
        eta: str,
        terms: List[Tuple[str, str]],
        db: bool,
        rewrite: bool,
        precision: Optional[int],
    ) -> None:
        """Pair exp_eta(sum A dB/B) with the Hilbert symbol.

        Each term contributes {exp(eta A), B}; with --db a term A dB
        contributes {exp(eta A B), B}.
        """
        try:
            with captured_warnings() as messages:
                config = load_field(field_source, precision)

                def build(cfg: FieldConfig) -> FormExpression:
                    return FormExpression(
                        tuple(
                            (evaluate_source(a, cfg.tower), evaluate_source(b, cfg.tower))
                            for a, b in terms
                        ),
                        db,
                    )

                def compute(cfg: FieldConfig) -> SymbolValue:
                    ctx = CyclotomicContext.create(cfg.tower)
                    return exp2_eval(ctx, evaluate_source(eta, cfg.tower), build(cfg))

                value = guarded(compute, config)
                tower = config.tower
                expr = build(config)
                outputs = {
                    **value.to_json(),
                    "form": element_to_json(expr.to_form(tower).coeff),
                }
                if rewrite:
                    a = rewrite_to_zeta(CyclotomicContext.create(tower), expr)
                    outputs["rewrite"] = element_to_json(a)

            report = Report(
                success=True,
                message=f"exp_eta(form) pairs to zeta_{value.modulus}^{value.c}",
                warnings=messages,
                command="expmap",
                fingerprint=tower.desc.fingerprint(),
                inputs={
                    "field": field_source,
                    "eta": eta,
                    "terms": [list(t) for t in terms],
                    "db": db,
                },
                outputs=outputs,
                precision=tower.prec,
                guard_recheck=True,
            )
            click.echo(report.to_json())

        except Exception as e:
            reraise(e, "Exponential map evaluation")
