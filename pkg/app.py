import logging
import sys
from collections.abc import Callable
from pathlib import Path

import click
import msgspec

from config import settings
from controllers.check_controller import canonical, check, vector
from controllers.enumeration_controller import census, decompose, enum, verify
from controllers.lattice_controller import lattice
from controllers.semigroup_controller import semigroup
from controllers.young_controller import young
from exceptions import UnrefError
from middleware import envelope
from schemas import Diagnostic

logging.basicConfig(level=settings.log_level, format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
logger = logging.getLogger(__name__)


# Exception Handlers
def _write_error(ctx: click.Context, code: str, detail: str) -> None:
    payload = envelope(ctx.invoked_subcommand or ctx.info_name or "unref", None, [Diagnostic(code=code, detail=detail)])
    click.echo(msgspec.json.encode(payload).decode(), err=True)


def unref_error_handler(ctx: click.Context, exc: UnrefError) -> int:
    """Domain errors carry their own exit code."""
    _write_error(ctx, exc.code, exc.detail)
    return exc.exit_code


def internal_error_handler(ctx: click.Context, exc: Exception) -> int:
    logger.exception("unexpected failure")
    _write_error(ctx, "internal", f"{type(exc).__name__}: {exc}")
    return 3


EXCEPTION_HANDLERS: dict[type[Exception], Callable[[click.Context, Exception], int]] = {
    UnrefError: unref_error_handler,
    Exception: internal_error_handler,
}


class UnrefGroup(click.Group):
    def invoke(self, ctx: click.Context):
        try:
            return super().invoke(ctx)
        except (click.exceptions.Exit, click.ClickException, click.Abort):
            raise
        except Exception as exc:
            handler = next(h for kind, h in EXCEPTION_HANDLERS.items() if isinstance(exc, kind))
            ctx.exit(handler(ctx, exc))


# Application
@click.group(cls=UnrefGroup)
@click.option("--output", type=click.Path(dir_okay=False, path_type=Path), help="Write the result here instead of stdout.")
@click.option("--verbose", is_flag=True, help="Log at DEBUG level.")
@click.pass_context
def cli(ctx: click.Context, output: Path | None, verbose: bool) -> None:
    """Unrefinable partitions, numerical semigroups and their Young diagrams."""
    if verbose:
        logging.getLogger().setLevel(logging.DEBUG)
    ctx.obj = {"output": output}


for command in (check, vector, canonical, semigroup, young, enum, census, decompose, verify, lattice):
    cli.add_command(command)


if __name__ == "__main__":
    cli()
