from dataclasses import replace

import click

from config import settings
from exceptions import AssertionFailedError, InvalidInputError, OracleDisagreementError
from middleware import command_path, emit, parse_int_list
from schemas import FamilyQuery
from services.enumeration_service import EnumerationService


def _service(workers: int | None) -> EnumerationService:
    if workers is None:
        return EnumerationService(settings)
    return EnumerationService(replace(settings, workers=workers))


def _query_from_flags(
    max_part: int | None,
    mex: int | None,
    weight: int | None,
    maximal_missing: bool,
    frobenius: int | None,
    symmetric: bool,
    maximal: bool,
    listing: bool,
) -> FamilyQuery:
    if sum(v is not None for v in (max_part, weight, frobenius)) != 1:
        raise InvalidInputError("give exactly one of --max-part, --weight and --frobenius", code="conflicting_flags")
    refinements = {
        "--mex": (mex is not None, max_part is not None),
        "--maximal-missing": (maximal_missing, max_part is not None),
        "--symmetric": (symmetric, frobenius is not None),
        "--maximal": (maximal, weight is not None),
    }
    unused = [flag for flag, (given, applies) in refinements.items() if given and not applies]
    if unused:
        raise InvalidInputError(
            f"{', '.join(unused)} does not apply to this family (--mex and --maximal-missing need --max-part, "
            "--symmetric needs --frobenius, --maximal needs --weight)",
            code="conflicting_flags",
        )
    if frobenius is not None:
        family = "SNS_frobenius" if symmetric else "NS_frobenius"
        return FamilyQuery(family=family, frobenius=frobenius, with_listing=listing)
    if weight is not None:
        family = "maximal" if maximal else "U_weight"
        return FamilyQuery(family=family, weight=weight, with_listing=listing)
    if mex is not None:
        family = "Ubar_mex" if maximal_missing else "U_mex"
    else:
        family = "Ubar" if maximal_missing else "U_maxpart"
    return FamilyQuery(family=family, max_part=max_part, mex=mex, with_listing=listing)


@click.command("enum")
@click.option("--max-part", type=int, help="Largest part λ_t.")
@click.option("--mex", type=int, help="Smallest missing part (0 for staircases).")
@click.option("--weight", type=int, help="Sum of the parts.")
@click.option("--maximal-missing", is_flag=True, help="Only partitions with ⌊λ_t/2⌋ missing parts.")
@click.option("--frobenius", type=int, help="Enumerate numerical semigroups with this Frobenius number.")
@click.option("--symmetric", is_flag=True, help="With --frobenius: symmetric semigroups only.")
@click.option("--maximal", is_flag=True, help="With --weight: only partitions with the largest possible λ_t.")
@click.option("--list", "listing", is_flag=True, help="Include every member.")
@click.option("--workers", type=int, help="Worker processes (overrides UNREF_WORKERS).")
@click.pass_context
def enum(ctx: click.Context, max_part, mex, weight, maximal_missing, frobenius, symmetric, maximal, listing, workers) -> None:
    """Count (and optionally list) a family of unrefinable partitions or semigroups."""
    query = _query_from_flags(max_part, mex, weight, maximal_missing, frobenius, symmetric, maximal, listing)
    emit(ctx, command_path(ctx), _service(workers).enumerate(query))


@click.command("census")
@click.option("--frobenius", type=int, required=True, help="Frobenius number.")
@click.option("--symmetric", is_flag=True, help="List only the symmetric semigroups.")
@click.option("--list", "listing", is_flag=True, help="Include the gap sets.")
@click.pass_context
def census(ctx: click.Context, frobenius: int, symmetric: bool, listing: bool) -> None:
    """Semigroups with a given Frobenius number, tabulated by genus and symmetry."""
    emit(ctx, command_path(ctx), _service(None).census(frobenius, symmetric_only=symmetric, with_listing=listing))


@click.command("decompose")
@click.option("--max-part", type=int, required=True, help="Largest part λ_t.")
@click.pass_context
def decompose(ctx: click.Context, max_part: int) -> None:
    """Split the unrefinable partitions with largest part λ_t by their mex."""
    emit(ctx, command_path(ctx), _service(None).mex_decomposition(max_part))


@click.group("verify")
def verify() -> None:
    """Check the counting identities and structural properties."""


@verify.command("prime-identity")
@click.option("--primes", callback=parse_int_list, required=True, help="Primes larger than 3, e.g. 5,7,11,13.")
@click.option("--workers", type=int, help="Worker processes (overrides UNREF_WORKERS).")
@click.pass_context
def prime_identity(ctx: click.Context, primes: list[int], workers: int | None) -> None:
    """Compare the maximal-missing partition count with the symmetric semigroup count."""
    report = _service(workers).verify_prime_identity(primes)
    emit(ctx, command_path(ctx), report)
    if not report.all_equal:
        raise AssertionFailedError("counts differ for " + ", ".join(str(r.prime) for r in report.rows if not r.equal))


@verify.command("mirror")
@click.option("--max-part", type=int, required=True, help="Largest part λ_t.")
@click.pass_context
def mirror(ctx: click.Context, max_part: int) -> None:
    """Mirror, half-exclusion and multiple-of-three properties over the maximal-missing family."""
    report = _service(None).check_mirror_properties(max_part)
    emit(ctx, command_path(ctx), report)
    if report.violations:
        raise AssertionFailedError(f"{len(report.violations)} violations at λ_t={max_part}")


@verify.command("maximal-subset")
@click.option("--n-max", type=int, required=True, help="Largest staircase index n to check.")
@click.pass_context
def maximal_subset(ctx: click.Context, n_max: int) -> None:
    """Maximal partitions outside the explicit families have ⌊λ_t/2⌋ missing parts."""
    report = _service(None).verify_maximal_subset_proposition(n_max)
    emit(ctx, command_path(ctx), report)
    if not report.holds:
        raise AssertionFailedError(
            f"maximal partitions outside the explicit families lack missing parts: {report.counterexamples}"
        )


@verify.command("oracle")
@click.option("--max-part", type=int, required=True, help="Sweep every partition with λ_t up to this value.")
@click.pass_context
def oracle(ctx: click.Context, max_part: int) -> None:
    """Vector check against subset-sum search on every partition with λ_t ≤ MAX_PART."""
    report = _service(None).oracle_sweep(max_part)
    emit(ctx, command_path(ctx), report)
    if report.disagreements:
        raise OracleDisagreementError(f"{len(report.disagreements)} disagreements, first {report.disagreements[0]}")
