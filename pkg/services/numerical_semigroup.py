"""Numerical sets and semigroups, stored by their gap sets."""

import logging
from collections.abc import Iterable
from math import gcd

from exceptions import (
    InvalidInputError,
    NoGapsError,
    NotASemigroupError,
    NotCofiniteError,
    UndefinedVectorError,
    UnrefError,
)
from models import (
    AperySet,
    DistinctPartition,
    GeneratorSet,
    NumericalSemigroup,
    NumericalSet,
)
from schemas import AperyComparison, ResidueComparison, SymmetryClass
from services.refinability import forbidden_vector

logger = logging.getLogger(__name__)


def from_gaps(gaps: Iterable[int]) -> NumericalSet:
    return NumericalSet(gaps=tuple(int(g) for g in gaps))


def set_from_partition(partition: DistinctPartition) -> NumericalSet:
    """{0} ∪ missing parts ∪ [λ_t + 1, ∞): the parts become the gaps."""
    return NumericalSet(gaps=partition.parts)


def partition_from_set(numerical_set: NumericalSet) -> DistinctPartition:
    if not numerical_set.gaps:
        raise NoGapsError("ℕ₀ has no gaps, so there is no partition to read off")
    return DistinctPartition(numerical_set.gaps)


# ################################################
# -- Invariants

def frobenius(numerical_set: NumericalSet | NumericalSemigroup) -> int:
    if not numerical_set.gaps:
        raise NoGapsError("the Frobenius number is undefined for ℕ₀")
    return numerical_set.gaps[-1]


def genus(numerical_set: NumericalSet | NumericalSemigroup) -> int:
    return len(numerical_set.gaps)


def multiplicity(numerical_set: NumericalSet | NumericalSemigroup) -> int:
    x = 1
    while not numerical_set.contains(x):
        x += 1
    return x


def is_semigroup(numerical_set: NumericalSet) -> bool:
    if not numerical_set.gaps:
        return True
    f = numerical_set.gaps[-1]
    elements = numerical_set.elements_below(f + 1)[1:]
    gaps = set(numerical_set.gaps)
    for i, a in enumerate(elements):
        for b in elements[i:]:
            if a + b > f:
                break
            if a + b in gaps:
                return False
    return True


def as_semigroup(numerical_set: NumericalSet) -> NumericalSemigroup:
    if not is_semigroup(numerical_set):
        raise NotASemigroupError(f"gaps {list(numerical_set.gaps)} do not give an additively closed set")
    return NumericalSemigroup(numerical_set=numerical_set)


# ################################################
# -- Generators

def from_generators(generators: Iterable[int]) -> NumericalSemigroup:
    """Materialize ⟨A⟩, stopping once min(A) consecutive members have appeared."""
    values = sorted({int(a) for a in generators})
    if not values or values[0] <= 0:
        raise InvalidInputError(f"generators must be a nonempty set of positive integers, got {values}")
    if gcd(*values) != 1:
        raise NotCofiniteError(f"gcd{tuple(values)} = {gcd(*values)}, the generated monoid has infinitely many gaps")

    smallest = values[0]
    member = [True]
    gaps: list[int] = []
    run = 1
    x = 0
    while run < smallest:
        x += 1
        hit = any(x >= a and member[x - a] for a in values)
        member.append(hit)
        if hit:
            run += 1
        else:
            run = 0
            gaps.append(x)
    return NumericalSemigroup(numerical_set=NumericalSet(gaps=tuple(gaps)))


def minimal_generators(semigroup: NumericalSemigroup) -> GeneratorSet:
    """Nonzero elements that are not a sum of two nonzero elements."""
    bound = (semigroup.gaps[-1] if semigroup.gaps else 0) + multiplicity(semigroup)
    generators = tuple(
        x
        for x in range(1, bound + 1)
        if semigroup.contains(x)
        and not any(semigroup.contains(a) and semigroup.contains(x - a) for a in range(1, x // 2 + 1))
    )
    if from_generators(generators).gaps != semigroup.gaps:
        raise UnrefError(f"minimal generators {generators} do not regenerate gaps {list(semigroup.gaps)}")
    return GeneratorSet(generators=generators)


# ################################################
# -- Apéry sets

def apery_set(semigroup: NumericalSemigroup, n: int) -> AperySet:
    if n < 1:
        raise InvalidInputError(f"the Apéry modulus must be positive, got {n}")
    elements = []
    for i in range(n):
        w = i
        while not semigroup.contains(w):
            w += n
        elements.append(w)
    in_set = semigroup.contains(n)
    if not in_set:
        logger.warning("Apéry set taken with respect to %d, which is not an element of the semigroup", n)
    return AperySet(modulus=n, elements=tuple(elements), modulus_in_set=in_set)


def apery_vs_forbidden(semigroup: NumericalSemigroup) -> AperyComparison:
    m = multiplicity(semigroup)
    if m < 2:
        raise InvalidInputError("the comparison needs multiplicity at least 2")
    partition = partition_from_set(semigroup.numerical_set)
    vector = forbidden_vector(partition)
    if vector is None:
        raise UndefinedVectorError(f"gaps {list(partition.parts)} leave no missing parts below the Frobenius number")

    apery = apery_set(semigroup, m).elements
    entries = vector.as_json()
    residues = [
        ResidueComparison(residue=r, apery=apery[r], vector=entries[r], agrees=apery[r] == entries[r])
        for r in range(m)
    ]
    return AperyComparison(
        multiplicity=m,
        frobenius=partition.largest,
        apery=list(apery),
        forbidden_vector=entries,
        residues=residues,
        agrees_off_zero=all(row.agrees for row in residues[1:]),
        zero_entry_is_double_multiplicity=entries[0] == 2 * m,
    )


# ################################################
# -- Symmetry

def _mirror_misses(semigroup: NumericalSemigroup, skip_half: bool) -> list[int]:
    f = frobenius(semigroup)
    return [x for x in semigroup.gaps if not (skip_half and 2 * x == f) and not semigroup.contains(f - x)]


def is_symmetric(semigroup: NumericalSemigroup) -> bool:
    return frobenius(semigroup) % 2 == 1 and not _mirror_misses(semigroup, skip_half=False)


def is_pseudo_symmetric(semigroup: NumericalSemigroup) -> bool:
    return frobenius(semigroup) % 2 == 0 and not _mirror_misses(semigroup, skip_half=True)


def symmetric_by_genus(semigroup: NumericalSemigroup) -> bool:
    return 2 * genus(semigroup) == frobenius(semigroup) + 1


def pseudo_symmetric_by_genus(semigroup: NumericalSemigroup) -> bool:
    return 2 * genus(semigroup) == frobenius(semigroup) + 2


def symmetry_class(semigroup: NumericalSemigroup) -> SymmetryClass:
    if is_symmetric(semigroup):
        return "symmetric"
    if is_pseudo_symmetric(semigroup):
        return "pseudo_symmetric"
    return "neither"
