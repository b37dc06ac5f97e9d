"""Refinability: the subset-sum oracle, the forbidden-element vector and extensions.

The vector is built one missing part at a time. For a missing part μ_i in
class r = μ_i mod μ₁ that is not already dominated (p_r < μ_i), the entry is
seeded with μ_i and then lowered in three stages:

* progression: μ₁ + kμ_i for 1 ≤ k ≤ μ₁ / gcd(μ₁, μ_i);
* mixed sums: p_j + μ_i for every finite p_j outside class r;
* closure: p_s + p_t over finite entries of different classes, repeated to a
  fixed point.

Every value written is a sum of two distinct integers that are missing in any
unrefinable partition with these missing parts, so each class is forbidden
from its threshold upwards.
"""

import logging
from collections import deque
from itertools import combinations
from math import gcd

from exceptions import RefinablePartitionError, UndefinedVectorError
from models import (
    UNBOUNDED,
    DistinctPartition,
    ExtensionLattice,
    Finiteness,
    ForbiddenVector,
    MissingParts,
    RefinementWitness,
    VectorStage,
)
from services.partition_core import missing_parts, require_two_parts

logger = logging.getLogger(__name__)


# ################################################
# -- Brute-force oracle

def _subset_sum_witness(target: int, candidates: list[int]) -> tuple[int, ...] | None:
    """Distinct ``candidates`` summing to ``target``, a pair when one exists."""
    pool = set(candidates)
    for a in candidates:
        if a >= target - a:
            break
        if target - a in pool:
            return (a, target - a)
    # reachable sums, each mapped to the first subset found for it
    reached: dict[int, tuple[int, ...]] = {0: ()}
    for c in candidates:
        for total, subset in list(reached.items()):
            new_total = total + c
            if new_total <= target and new_total not in reached:
                reached[new_total] = (*subset, c)
    found = reached.get(target)
    return found if found and len(found) >= 2 else None


def brute_force_refinement(partition: DistinctPartition) -> RefinementWitness | None:
    """The smallest part expressible as a sum of ≥2 distinct missing parts, if any."""
    require_two_parts(partition)
    missing = missing_parts(partition).missing
    for part in partition.parts:
        smaller = [m for m in missing if m < part]
        if len(smaller) < 2:
            continue
        summands = _subset_sum_witness(part, smaller)
        if summands is not None:
            return RefinementWitness(part=part, summands=summands)
    return None


def is_unrefinable(partition: DistinctPartition) -> bool:
    return brute_force_refinement(partition) is None


def is_unrefinable_sequence(prefix: tuple[int, ...]) -> bool:
    """No element is a sum of ≥2 distinct positive integers outside the prefix, below its maximum."""
    if not prefix:
        return True
    members = set(prefix)
    outside = [x for x in range(1, max(prefix) + 1) if x not in members]
    return all(_subset_sum_witness(v, [x for x in outside if x < v]) is None for v in prefix)


# ################################################
# -- Forbidden-element vector

class _VectorBuilder:
    def __init__(self, mex: int) -> None:
        self.mex = mex
        self.entries: list[int | float] = [UNBOUNDED] * mex
        self.stages: list[VectorStage] = []

    def _lower(self, value: int) -> bool:
        r = value % self.mex
        if value < self.entries[r]:
            self.entries[r] = value
            return True
        return False

    def _snapshot(self, part: int, stage: str) -> None:
        self.stages.append(VectorStage(missing_part=part, stage=stage, entries=tuple(self.entries)))

    def _close(self) -> None:
        changed = True
        while changed:
            changed = False
            finite = [v for v in self.entries if v != UNBOUNDED]
            # entries are distinct residues, so every pair sums two distinct forbidden values
            for a, b in combinations(finite, 2):
                changed |= self._lower(a + b)

    def process(self, part: int) -> None:
        r = part % self.mex
        if self.entries[r] < part:
            self._snapshot(part, "skipped")
            return
        self.entries[r] = part
        self._snapshot(part, "seed")

        for k in range(1, self.mex // gcd(self.mex, part) + 1):
            self._lower(self.mex + k * part)
        self._snapshot(part, "progression")

        current = list(self.entries)
        for j, value in enumerate(current):
            if j != r and value != UNBOUNDED:
                self._lower(value + part)
        self._snapshot(part, "mixed")

        self._close()
        self._snapshot(part, "closure")


def _run_builder(missing: MissingParts) -> _VectorBuilder:
    if missing.mex < 1:
        raise UndefinedVectorError("the forbidden vector is undefined when there are no missing parts (mex = 0)")
    builder = _VectorBuilder(missing.mex)
    for part in missing.missing[1:]:
        builder.process(part)
    logger.debug("forbidden vector for mex %d: %s", missing.mex, builder.entries)
    return builder


def build_forbidden_vector(missing: MissingParts) -> ForbiddenVector:
    builder = _run_builder(missing)
    return ForbiddenVector(mex=missing.mex, entries=tuple(builder.entries))


def forbidden_vector_trace(missing: MissingParts) -> list[VectorStage]:
    return _run_builder(missing).stages


def missing_from_list(values: list[int] | tuple[int, ...]) -> MissingParts:
    ordered = tuple(sorted(set(values)))
    return MissingParts(missing=ordered, mex=ordered[0] if ordered else 0)


def forbidden_vector(partition: DistinctPartition) -> ForbiddenVector | None:
    missing = missing_parts(partition)
    return build_forbidden_vector(missing) if missing.mex else None


def check_unrefinable_fast(partition: DistinctPartition) -> bool:
    require_two_parts(partition)
    vector = forbidden_vector(partition)
    if vector is None:
        return True
    return all(part < vector.threshold(part) for part in partition.parts)


def is_saturated(vector: ForbiddenVector) -> bool:
    return all(e != UNBOUNDED for e in vector.entries)


def classify_extension_finiteness(missing: MissingParts) -> Finiteness:
    if missing.count < 2:
        raise UndefinedVectorError(f"need at least two missing parts, got {list(missing.missing)}", code="too_few_missing")
    if any(gcd(missing.mex, m) == 1 for m in missing.missing[1:]):
        return Finiteness.FINITE
    return Finiteness.POSSIBLY_INFINITE


# ################################################
# -- Extensions

def extension_candidates(partition: DistinctPartition) -> set[int]:
    """Missing x with mex < x < λ_t whose insertion keeps the partition unrefinable."""
    missing = missing_parts(partition)
    if missing.mex == 0:
        return set()
    return {
        x
        for x in missing.missing
        if missing.mex < x < partition.largest and check_unrefinable_fast(partition.with_part(x))
    }


def extension_lattice(partition: DistinctPartition) -> ExtensionLattice:
    if not check_unrefinable_fast(partition):
        witness = brute_force_refinement(partition)
        raise RefinablePartitionError(f"base partition {list(partition.parts)} is refinable: {witness.equation()}")

    bottom: frozenset[int] = frozenset()
    seen: set[frozenset[int]] = {bottom}
    edges: list[tuple[tuple[int, ...], tuple[int, ...], int]] = []
    queue = deque([bottom])
    while queue:
        node = queue.popleft()
        for x in sorted(extension_candidates(partition.with_parts(node))):
            child = node | {x}
            edges.append((tuple(sorted(node)), tuple(sorted(child)), x))
            if child not in seen:
                seen.add(child)
                queue.append(child)

    nodes = tuple(sorted((tuple(sorted(n)) for n in seen), key=lambda n: (len(n), n)))
    logger.debug("extension lattice over %s: %d nodes, %d edges", partition.parts, len(nodes), len(edges))
    return ExtensionLattice(base=partition, nodes=nodes, edges=tuple(sorted(edges, key=lambda e: (len(e[0]), e[0], e[2]))))


def _node_label(node: tuple[int, ...]) -> str:
    return "{" + ",".join(str(x) for x in node) + "}"


def lattice_to_dot(lattice: ExtensionLattice) -> str:
    """Graphviz text: nodes named by their inserted sets, edges labelled by the inserted integer."""
    graph = lattice.to_digraph()
    lines = ["digraph extensions {", "graph [rankdir=BT];", "node [shape=box];"]
    append = lines.append
    for grade in lattice.grades():
        append("{rank=same " + " ".join(f'"{_node_label(n)}"' for n in grade) + "}")
    for source, target, data in graph.edges(data=True):
        append(f'"{_node_label(source)}" -> "{_node_label(target)}" [label="{data["inserted"]}"];')
    append("}")
    return "\n".join(lines)
