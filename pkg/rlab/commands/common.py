"""Helpers shared by the command modules."""

import warnings
from contextlib import contextmanager
from typing import Callable, Iterator, List, TypeVar

import click

from rlab.core.config import FieldConfig
from rlab.core.exceptions import GuardRecheckError, RlabError

GUARD_DIGITS = 10

T = TypeVar("T")


class CommandFailed(click.ClickException):
    """ClickException carrying the exit code of the error that caused it."""

    def __init__(self, message: str, exit_code: int = 2):
        super().__init__(message)
        self.exit_code = exit_code


def field_option(fn: Callable) -> Callable:
    return click.option(
        "--field",
        "field_source",
        required=True,
        help="Field description file (TOML) or preset name "
        "(f0, cubic-radical, q5-zeta5, q3)",
    )(fn)


def precision_option(fn: Callable) -> Callable:
    return click.option(
        "--precision",
        type=click.IntRange(min=1),
        default=None,
        help="Working precision overriding the field file",
    )(fn)


def guarded(compute: Callable[[FieldConfig], T], config: FieldConfig) -> T:
    """Compute at the working precision and again GUARD_DIGITS digits higher.

    Raises:
        GuardRecheckError: If the two results differ
    """
    first = compute(config)
    second = compute(config.with_precision(config.tower.prec + GUARD_DIGITS))
    if first != second:
        raise GuardRecheckError(
            f"result {first} at precision {config.tower.prec} differs from "
            f"{second} at precision {config.tower.prec + GUARD_DIGITS}"
        )
    return first


@contextmanager
def captured_warnings() -> Iterator[List[str]]:
    """Collect warning messages so they can be placed in the report."""
    messages: List[str] = []
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        yield messages
    messages.extend(str(w.message) for w in caught)


def reraise(e: Exception, what: str) -> None:
    """Echo an error the way every command does and convert it for click."""
    if isinstance(e, click.ClickException):
        raise e
    if isinstance(e, (RlabError, FileNotFoundError)):
        click.echo(f"Error: {e}", err=True)
        raise CommandFailed(str(e), getattr(e, "exit_code", 2)) from e
    click.echo(f"Unexpected error: {e}", err=True)
    raise click.ClickException(f"{what} failed: {e}") from e
