from pathlib import Path
from typing import Any

import click
import msgspec

from exceptions import InvalidInputError, InvalidPartitionError
from models import DistinctPartition
from schemas import SCHEMA_VERSION, Diagnostic, OutputEnvelope


def parse_int_list(ctx: click.Context, param: click.Parameter, value: str | None) -> list[int] | None:
    """Click callback for comma-separated integer flags such as ``--gaps 1,2,4``."""
    if value is None:
        return None
    items = [item.strip() for item in value.split(",") if item.strip()]
    try:
        return [int(item) for item in items]
    except ValueError:
        raise InvalidInputError(f"--{param.name} expects comma-separated integers, got {value!r}") from None


def partition_from_args(parts: tuple[int, ...]) -> DistinctPartition:
    """Positional parts as typed; order and distinctness are checked, not repaired."""
    if not parts:
        raise InvalidPartitionError("no parts given", code="empty")
    return DistinctPartition(tuple(parts))


def envelope(command: str, result: Any, diagnostics: list[Diagnostic] | None = None) -> OutputEnvelope:
    return OutputEnvelope(schema_version=SCHEMA_VERSION, command=command, result=result, diagnostics=diagnostics or [])


def emit(ctx: click.Context, command: str, result: Any, diagnostics: list[Diagnostic] | None = None) -> None:
    """Write one JSON envelope to ``--output`` if given, stdout otherwise."""
    payload = msgspec.json.encode(envelope(command, result, diagnostics))
    output: Path | None = ctx.find_root().obj.get("output") if ctx.find_root().obj else None
    if output is not None:
        output.write_bytes(payload + b"\n")
    else:
        click.echo(payload.decode())


def emit_text(ctx: click.Context, text: str) -> None:
    output: Path | None = ctx.find_root().obj.get("output") if ctx.find_root().obj else None
    if output is not None:
        output.write_text(text + "\n")
    else:
        click.echo(text)


def command_path(ctx: click.Context) -> str:
    """``semigroup apery`` rather than ``unref semigroup apery``."""
    return " ".join(ctx.command_path.split()[1:])


def require_flag_choice(**flags: bool) -> str | None:
    chosen = [name for name, on in flags.items() if on]
    if len(chosen) > 1:
        raise InvalidInputError(f"choose at most one of {', '.join('--' + n for n in flags)}", code="conflicting_flags")
    return chosen[0] if chosen else None
