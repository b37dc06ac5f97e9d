"""Young diagrams of numerical sets and the two hookset criteria.

Walking k = 0, 1, ..., F(S) and stepping east for k ∈ S and north for a gap
draws a staircase; the cells left of the path form the diagram. The row
created by the north step at gap g has one cell per element of S below g.
Rows are stored top-longest, so storage row 0 belongs to the Frobenius number
and the last storage row to the smallest gap.
"""

import logging
from typing import Literal

from exceptions import NoGapsError
from models import HookGrid, NumericalSet, YoungDiagram

logger = logging.getLogger(__name__)

RenderMode = Literal["outline", "hooks"]


def diagram_from_set(numerical_set: NumericalSet) -> YoungDiagram:
    if not numerical_set.gaps:
        raise NoGapsError("ℕ₀ has an empty Young diagram")
    rows: list[int] = []
    east = 0
    gaps = set(numerical_set.gaps)
    for k in range(numerical_set.gaps[-1] + 1):
        if k in gaps:
            rows.append(east)
        else:
            east += 1
    return YoungDiagram(rows=tuple(reversed(rows)), source=numerical_set)


def set_from_diagram(diagram: YoungDiagram) -> NumericalSet:
    """Invert the walk: the i-th row from the bottom (1-based) closes gap r_i + i - 1."""
    bottom_up = list(reversed(diagram.rows))
    return NumericalSet(gaps=tuple(length + i for i, length in enumerate(bottom_up)))


def hook_grid(diagram: YoungDiagram) -> HookGrid:
    shape = diagram.rows
    column_heights = [sum(1 for length in shape if length > col) for col in range(diagram.columns)]
    hooks = tuple(
        tuple((length - col - 1) + (column_heights[col] - row - 1) + 1 for col in range(length))
        for row, length in enumerate(shape)
    )
    return HookGrid(shape=shape, hooks=hooks)


def semigroup_by_hooks(diagram: YoungDiagram) -> bool:
    grid = hook_grid(diagram)
    return grid.hookset() <= set(grid.first_column())


def unrefinable_by_hooks(diagram: YoungDiagram) -> bool:
    """Every hook is a first-column hook, or half of its own row's first-column hook."""
    grid = hook_grid(diagram)
    first_column = set(grid.first_column())
    return all(h in first_column or row[0] == 2 * h for row in grid.hooks for h in row)


def render(diagram: YoungDiagram, mode: RenderMode = "outline") -> str:
    grid = hook_grid(diagram)
    if mode == "hooks":
        width = len(str(max(grid.hookset())))
        lines = [" ".join(str(h).rjust(width) for h in row) for row in grid.hooks]
    else:
        lines = [" ".join("#" * length) for length in diagram.rows]
    footer = [
        "first column: " + " ".join(str(h) for h in grid.first_column()),
        f"rows top to bottom; the walk from 0 builds the bottom row first (row {diagram.walk_row(len(diagram.rows) - 1)})",
    ]
    return "\n".join(lines + footer)
