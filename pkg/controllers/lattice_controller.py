import click

from middleware import command_path, emit, emit_text, partition_from_args
from schemas import LatticeRead
from services.refinability import extension_lattice, lattice_to_dot


@click.command("lattice")
@click.argument("parts", nargs=-1, type=int, required=True)
@click.option("--dot", is_flag=True, help="Print Graphviz DOT instead of JSON.")
@click.pass_context
def lattice(ctx: click.Context, parts: tuple[int, ...], dot: bool) -> None:
    """Insertions that keep PARTS unrefinable with the same largest part and mex."""
    built = extension_lattice(partition_from_args(parts))
    if dot:
        emit_text(ctx, lattice_to_dot(built))
        return
    emit(
        ctx,
        command_path(ctx),
        LatticeRead(
            base=list(built.base.parts),
            node_count=len(built.nodes),
            nodes=[list(n) for n in built.nodes],
            edges=[(list(s), list(t), x) for s, t, x in built.edges],
            top=[list(n) for n in built.top_nodes()],
        ),
    )
