import click

from middleware import command_path, emit, emit_text, parse_int_list, require_flag_choice
from schemas import YoungRead
from services import numerical_semigroup as ns
from services import young_hooks


@click.command("young")
@click.option("--gaps", callback=parse_int_list, required=True, help="Gap set, e.g. 1,2,4,5,7,10,13.")
@click.option("--hooks", is_flag=True, help="Include hook lengths.")
@click.option("--criterion", type=click.Choice(["semigroup", "unrefinable"]), help="Run a hookset criterion.")
@click.option("--ascii", "as_ascii", is_flag=True, help="Print the diagram as text.")
@click.option("--json", "as_json", is_flag=True, help="Print a JSON envelope (default).")
@click.pass_context
def young(ctx: click.Context, gaps: list[int], hooks: bool, criterion: str | None, as_ascii: bool, as_json: bool) -> None:
    """Young diagram of the numerical set with the given gaps."""
    output = require_flag_choice(ascii=as_ascii, json=as_json) or "json"
    diagram = young_hooks.diagram_from_set(ns.from_gaps(gaps))
    if output == "ascii":
        emit_text(ctx, young_hooks.render(diagram, "hooks" if hooks else "outline"))
        return

    result = YoungRead(gaps=list(diagram.source.gaps), profile=list(diagram.profile))
    if hooks:
        result.hooks = [list(row) for row in young_hooks.hook_grid(diagram).hooks]
    if criterion == "semigroup":
        result.criterion, result.verdict = "semigroup", young_hooks.semigroup_by_hooks(diagram)
    elif criterion == "unrefinable":
        result.criterion, result.verdict = "unrefinable", young_hooks.unrefinable_by_hooks(diagram)
    emit(ctx, command_path(ctx), result)
