import math
from enum import StrEnum
from typing import Final, Literal

import msgspec
import networkx as nx

from exceptions import InvalidInputError, InvalidPartitionError

# Marker for a vector entry that no construction step has lowered yet.
# Compares greater than every integer, so threshold checks need no special case.
UNBOUNDED: Final[float] = math.inf


# ################################################
# -- Partitions

class DistinctPartition(msgspec.Struct, frozen=True):
    """A partition into distinct parts, stored ascending: (λ₁ < λ₂ < … < λ_t)."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        if not self.parts:
            raise InvalidPartitionError("a partition needs at least one part", code="empty")
        if any(p <= 0 for p in self.parts):
            raise InvalidPartitionError(f"parts must be positive: {list(self.parts)}", code="non_positive")
        if len(set(self.parts)) != len(self.parts):
            raise InvalidPartitionError(f"parts must be distinct: {list(self.parts)}", code="duplicate")
        if any(a > b for a, b in zip(self.parts, self.parts[1:])):
            raise InvalidPartitionError(f"parts must be increasing: {list(self.parts)}", code="order")

    @property
    def largest(self) -> int:
        return self.parts[-1]

    @property
    def length(self) -> int:
        return len(self.parts)

    def contains(self, x: int) -> bool:
        return x in self.parts

    def with_part(self, x: int) -> "DistinctPartition":
        return DistinctPartition(tuple(sorted((*self.parts, x))))

    def with_parts(self, extra: tuple[int, ...] | frozenset[int]) -> "DistinctPartition":
        return DistinctPartition(tuple(sorted((*self.parts, *extra))))


class MissingParts(msgspec.Struct, frozen=True):
    missing: tuple[int, ...]
    mex: int

    @property
    def count(self) -> int:
        return len(self.missing)


class CanonicalFamily(msgspec.Struct, frozen=True):
    kind: Literal["complete", "near_complete"]
    n: int
    partition: DistinctPartition
    d: int | None = None


# ################################################
# -- Refinability

class RefinementWitness(msgspec.Struct, frozen=True):
    part: int
    summands: tuple[int, ...]

    def equation(self) -> str:
        return f"{self.part}=" + "+".join(str(s) for s in self.summands)


class ForbiddenVector(msgspec.Struct, frozen=True):
    """Per-residue thresholds modulo the mex; index r holds the entry for class r."""

    mex: int
    entries: tuple[int | float, ...]

    def threshold(self, x: int) -> int | float:
        return self.entries[x % self.mex]

    def as_json(self) -> list[int | None]:
        return [None if e == UNBOUNDED else int(e) for e in self.entries]


class VectorStage(msgspec.Struct, frozen=True):
    missing_part: int
    stage: Literal["seed", "progression", "mixed", "closure", "skipped"]
    entries: tuple[int | float, ...]


class Finiteness(StrEnum):
    FINITE = "finite"
    POSSIBLY_INFINITE = "possibly_infinite"


Node = tuple[int, ...]


class ExtensionLattice(msgspec.Struct, frozen=True):
    """Insertion sets over ``base`` that keep it unrefinable, with single-insertion edges."""

    base: DistinctPartition
    nodes: tuple[Node, ...]
    edges: tuple[tuple[Node, Node, int], ...]

    def to_digraph(self) -> nx.DiGraph:
        graph = nx.DiGraph()
        graph.add_nodes_from(self.nodes)
        for source, target, inserted in self.edges:
            graph.add_edge(source, target, inserted=inserted)
        return graph

    def top_nodes(self) -> list[Node]:
        graph = self.to_digraph()
        return sorted((n for n in graph.nodes if graph.out_degree(n) == 0), key=lambda n: (len(n), n))

    def grades(self) -> list[list[Node]]:
        return [sorted(layer) for layer in nx.topological_generations(self.to_digraph())]

    def partitions(self) -> list[DistinctPartition]:
        return [self.base.with_parts(node) for node in self.nodes]


# ################################################
# -- Numerical sets and semigroups

class NumericalSet(msgspec.Struct, frozen=True):
    """ℕ₀ minus a finite gap set."""

    gaps: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        if any(g <= 0 for g in self.gaps):
            raise InvalidInputError(f"gaps must be positive (0 is always in the set): {list(self.gaps)}", code="zero_gap")
        if len(set(self.gaps)) != len(self.gaps):
            raise InvalidInputError(f"duplicate gaps: {list(self.gaps)}", code="duplicate")
        if any(a > b for a, b in zip(self.gaps, self.gaps[1:])):
            raise InvalidInputError(f"gaps must be increasing: {list(self.gaps)}", code="order")

    def contains(self, x: int) -> bool:
        return x >= 0 and x not in self.gaps

    def elements_below(self, bound: int) -> list[int]:
        gaps = set(self.gaps)
        return [x for x in range(bound) if x not in gaps]


class NumericalSemigroup(msgspec.Struct, frozen=True):
    numerical_set: NumericalSet

    @property
    def gaps(self) -> tuple[int, ...]:
        return self.numerical_set.gaps

    def contains(self, x: int) -> bool:
        return self.numerical_set.contains(x)


class GeneratorSet(msgspec.Struct, frozen=True):
    generators: tuple[int, ...]

    @property
    def embedding_dimension(self) -> int:
        return len(self.generators)


class AperySet(msgspec.Struct, frozen=True):
    modulus: int
    elements: tuple[int, ...]
    modulus_in_set: bool


# ################################################
# -- Young diagrams

class YoungDiagram(msgspec.Struct, frozen=True):
    """Row lengths top-longest (English notation); the last row is the first one the walk draws."""

    rows: tuple[int, ...]
    source: NumericalSet

    @property
    def profile(self) -> tuple[int, ...]:
        return self.rows

    @property
    def columns(self) -> int:
        return self.rows[0] if self.rows else 0

    def walk_row(self, row: int) -> int:
        """1-based index, counted from the bottom, of storage row ``row``."""
        return len(self.rows) - row


class HookGrid(msgspec.Struct, frozen=True):
    shape: tuple[int, ...]
    hooks: tuple[tuple[int, ...], ...]

    def hook(self, row: int, col: int) -> int:
        return self.hooks[row][col]

    def arm(self, row: int, col: int) -> int:
        return self.shape[row] - col - 1

    def leg(self, row: int, col: int) -> int:
        return sum(1 for length in self.shape[row + 1:] if length > col)

    def first_column(self) -> tuple[int, ...]:
        return tuple(r[0] for r in self.hooks)

    def hookset(self) -> frozenset[int]:
        return frozenset(h for r in self.hooks for h in r)
