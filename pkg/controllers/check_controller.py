import click

from exceptions import AssertionFailedError, OracleDisagreementError
from middleware import command_path, emit, parse_int_list, partition_from_args, require_flag_choice
from models import UNBOUNDED, VectorStage
from schemas import CanonicalRead, CheckResult, StageRead, VectorRead, WitnessRead
from services.partition_core import canonical_family, missing_parts, require_two_parts
from services.refinability import (
    brute_force_refinement,
    build_forbidden_vector,
    check_unrefinable_fast,
    classify_extension_finiteness,
    forbidden_vector_trace,
    is_saturated,
    missing_from_list,
)


def _stage_read(stage: VectorStage) -> StageRead:
    entries = [None if e == UNBOUNDED else int(e) for e in stage.entries]
    return StageRead(missing_part=stage.missing_part, stage=stage.stage, entries=entries)


@click.command("check")
@click.argument("parts", nargs=-1, type=int, required=True)
@click.option("--fast", is_flag=True, help="Decide with the forbidden-element vector (default).")
@click.option("--oracle", is_flag=True, help="Decide with the subset-sum search.")
@click.option("--both", is_flag=True, help="Run both and fail on disagreement.")
@click.option("--trace", is_flag=True, help="Include every intermediate vector state.")
@click.option("--assert-unrefinable", is_flag=True, help="Exit 1 when the partition is refinable.")
@click.pass_context
def check(ctx: click.Context, parts, fast, oracle, both, trace, assert_unrefinable) -> None:
    """Decide whether PARTS (ascending, distinct) form an unrefinable partition."""
    partition = partition_from_args(parts)
    require_two_parts(partition)
    method = require_flag_choice(fast=fast, oracle=oracle, both=both) or "fast"
    missing = missing_parts(partition)

    witness = brute_force_refinement(partition) if method != "fast" else None
    if method == "oracle":
        unrefinable = witness is None
    else:
        unrefinable = check_unrefinable_fast(partition)
        if method == "both" and unrefinable != (witness is None):
            found = witness.equation() if witness else "no witness"
            raise OracleDisagreementError(
                f"vector check says {'unrefinable' if unrefinable else 'refinable'}, "
                f"subset-sum search found {found} on {list(partition.parts)}"
            )
        if not unrefinable and witness is None:
            witness = brute_force_refinement(partition)

    result = CheckResult(
        partition=list(partition.parts),
        verdict="unrefinable" if unrefinable else "refinable",
        method=method,
        mex=missing.mex,
        witness=WitnessRead(part=witness.part, summands=list(witness.summands)) if witness else None,
    )
    if method != "oracle" and missing.mex:
        vector = build_forbidden_vector(missing)
        result.forbidden_vector = vector.as_json()
        result.saturated = is_saturated(vector)
        if trace:
            result.trace = [_stage_read(s) for s in forbidden_vector_trace(missing)]
    emit(ctx, command_path(ctx), result)

    if assert_unrefinable and not unrefinable:
        raise AssertionFailedError(f"{list(partition.parts)} is refinable")


@click.command("vector")
@click.option("--missing", "missing_values", callback=parse_int_list, required=True, help="Missing parts, e.g. 6,7,9,13.")
@click.option("--trace", is_flag=True, help="Include every intermediate vector state.")
@click.pass_context
def vector(ctx: click.Context, missing_values: list[int], trace: bool) -> None:
    """Forbidden-element vector of a set of missing parts."""
    missing = missing_from_list(missing_values)
    built = build_forbidden_vector(missing)
    result = VectorRead(
        missing=list(missing.missing),
        mex=missing.mex,
        entries=built.as_json(),
        saturated=is_saturated(built),
        finiteness=classify_extension_finiteness(missing).value if missing.count >= 2 else None,
    )
    if trace:
        result.trace = [_stage_read(s) for s in forbidden_vector_trace(missing)]
    emit(ctx, command_path(ctx), result)


@click.command("canonical")
@click.argument("weight", type=int)
@click.pass_context
def canonical(ctx: click.Context, weight: int) -> None:
    """The staircase-type unrefinable partition of WEIGHT."""
    family = canonical_family(weight)
    emit(
        ctx,
        command_path(ctx),
        CanonicalRead(weight=weight, kind=family.kind, n=family.n, partition=list(family.partition.parts), d=family.d),
    )
