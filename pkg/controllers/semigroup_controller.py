import click

from exceptions import InvalidInputError
from middleware import command_path, emit, parse_int_list
from models import NumericalSet
from schemas import AperyRead, GeneratorsRead, SemigroupInfo
from services import numerical_semigroup as ns


def _numerical_set(ctx: click.Context) -> NumericalSet:
    return ctx.obj["numerical_set"]


@click.group("semigroup", invoke_without_command=True)
@click.option("--gaps", callback=parse_int_list, help="Gap set, e.g. 1,2,4,5,7,10,13.")
@click.option("--generators", callback=parse_int_list, help="Generators, e.g. 3,8.")
@click.pass_context
def semigroup(ctx: click.Context, gaps: list[int] | None, generators: list[int] | None) -> None:
    """Numerical set given by its gaps or a semigroup by its generators (default: info)."""
    if (gaps is None) == (generators is None):
        raise InvalidInputError("give exactly one of --gaps and --generators", code="conflicting_flags")
    if generators is not None:
        numerical_set = ns.from_generators(generators).numerical_set
    else:
        numerical_set = ns.from_gaps(gaps)
    ctx.obj = {**(ctx.obj or {}), "numerical_set": numerical_set}
    if ctx.invoked_subcommand is None:
        ctx.invoke(info)


@semigroup.command("info")
@click.pass_context
def info(ctx: click.Context) -> None:
    """Frobenius number, genus, multiplicity and symmetry class."""
    numerical_set = _numerical_set(ctx)
    closed = ns.is_semigroup(numerical_set)
    result = SemigroupInfo(
        gaps=list(numerical_set.gaps),
        semigroup=closed,
        genus=ns.genus(numerical_set),
        multiplicity=ns.multiplicity(numerical_set),
    )
    if numerical_set.gaps:
        result.frobenius = ns.frobenius(numerical_set)
        if closed:
            result.symmetry = ns.symmetry_class(ns.as_semigroup(numerical_set))
    emit(ctx, "semigroup info", result)


@semigroup.command("apery")
@click.argument("modulus", type=int)
@click.pass_context
def apery(ctx: click.Context, modulus: int) -> None:
    """Apéry set with respect to MODULUS."""
    apery_set = ns.apery_set(ns.as_semigroup(_numerical_set(ctx)), modulus)
    emit(
        ctx,
        command_path(ctx),
        AperyRead(modulus=apery_set.modulus, elements=list(apery_set.elements), modulus_in_set=apery_set.modulus_in_set),
    )


@semigroup.command("msg")
@click.pass_context
def msg(ctx: click.Context) -> None:
    """Minimal system of generators."""
    generators = ns.minimal_generators(ns.as_semigroup(_numerical_set(ctx)))
    emit(
        ctx,
        command_path(ctx),
        GeneratorsRead(generators=list(generators.generators), embedding_dimension=generators.embedding_dimension),
    )


@semigroup.command("compare")
@click.pass_context
def compare(ctx: click.Context) -> None:
    """Apéry set at the multiplicity against the forbidden vector of the gap partition."""
    emit(ctx, command_path(ctx), ns.apery_vs_forbidden(ns.as_semigroup(_numerical_set(ctx))))
