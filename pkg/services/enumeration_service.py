"""Enumeration of unrefinable partitions and numerical semigroups, plus the census and verifiers."""

import logging
import time
from collections import Counter
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

import msgspec
from sympy import isprime

from config import Settings, settings as default_settings
from exceptions import CapExceededError, InvalidInputError, NotPrimeError
from models import DistinctPartition, NumericalSemigroup, NumericalSet
from schemas import (
    CensusReport,
    CountsRecord,
    FamilyQuery,
    GenusRow,
    MaximalSubsetReport,
    MaximalSubsetRow,
    MexDecomposition,
    MexStratum,
    MirrorReport,
    MirrorViolation,
    OracleSweepReport,
    PrimeIdentityReport,
    PrimeIdentityRow,
)
from services import numerical_semigroup as ns
from services.partition_core import missing_parts, triangular
from services.refinability import check_unrefinable_fast, is_unrefinable

logger = logging.getLogger(__name__)

PARTITION_FAMILIES = {"U_weight", "U_maxpart", "Ubar", "U_mex", "Ubar_mex", "maximal"}
BRUTE_FORCE_FROBENIUS = 16


# ################################################
# -- Partition search

class SearchSpec(msgspec.Struct, frozen=True):
    """Unrefinable partitions with largest part ``largest`` and at least two parts."""

    largest: int
    weight: int | None = None
    mex: int | None = None
    missing_count: int | None = None


class Branch(msgspec.Struct, frozen=True):
    """Search state after deciding membership of 1 .. position-1.

    ``forbidden`` has bit v set when v is a sum of two distinct missing values.
    """

    position: int
    parts: tuple[int, ...] = ()
    missing_mask: int = 0
    forbidden: int = 0
    missing: int = 0
    total: int = 0


def _feasible(spec: SearchSpec, branch: Branch) -> bool:
    remaining = spec.largest - branch.position
    if spec.missing_count is not None:
        if branch.missing > spec.missing_count or branch.missing + remaining < spec.missing_count:
            return False
    if spec.weight is not None:
        low = branch.total + spec.largest
        high = low + triangular(spec.largest - 1) - triangular(branch.position - 1)
        if not low <= spec.weight <= high:
            return False
    return True


def _children(spec: SearchSpec, branch: Branch) -> list[Branch]:
    z = branch.position
    must_include = spec.mex is not None and (spec.mex == 0 or z < spec.mex)
    must_exclude = spec.mex is not None and z == spec.mex
    out = []
    if not must_exclude and not (branch.forbidden >> z) & 1:
        out.append(
            Branch(
                position=z + 1,
                parts=(*branch.parts, z),
                missing_mask=branch.missing_mask,
                forbidden=branch.forbidden,
                missing=branch.missing,
                total=branch.total + z,
            )
        )
    if not must_include:
        out.append(
            Branch(
                position=z + 1,
                parts=branch.parts,
                missing_mask=branch.missing_mask | (1 << z),
                forbidden=branch.forbidden | (branch.missing_mask << z),
                missing=branch.missing + 1,
                total=branch.total,
            )
        )
    return [child for child in out if _feasible(spec, child)]


def _accepts(spec: SearchSpec, branch: Branch) -> bool:
    if not branch.parts or (branch.forbidden >> spec.largest) & 1:
        return False
    if spec.missing_count is not None and branch.missing != spec.missing_count:
        return False
    return spec.weight is None or branch.total + spec.largest == spec.weight


def _walk(spec: SearchSpec, branch: Branch) -> Iterator[tuple[int, ...]]:
    if branch.position == spec.largest:
        if _accepts(spec, branch):
            yield (*branch.parts, spec.largest)
        return
    for child in _children(spec, branch):
        yield from _walk(spec, child)


def _split(spec: SearchSpec, depth: int) -> list[Branch]:
    frontier = [Branch(position=1)]
    for _ in range(depth):
        expanded: list[Branch] = []
        for branch in frontier:
            if branch.position == spec.largest:
                expanded.append(branch)
            else:
                expanded.extend(_children(spec, branch))
        frontier = expanded
    return frontier


def _run_branch(spec: SearchSpec, branch: Branch) -> list[tuple[int, ...]]:
    return list(_walk(spec, branch))


# ################################################
# -- Semigroup search

def _semigroups_brute_force(frobenius: int) -> list[tuple[int, ...]]:
    found = []
    below = range(1, frobenius)
    for mask in range(1 << (frobenius - 1)):
        gaps = tuple(x for x in below if (mask >> (x - 1)) & 1) + (frobenius,)
        if ns.is_semigroup(NumericalSet(gaps=gaps)):
            found.append(gaps)
    return found


def _semigroups_dfs(frobenius: int) -> list[tuple[int, ...]]:
    found: list[tuple[int, ...]] = []

    # sums: bit v set when v is a sum of two (not necessarily distinct) chosen elements
    def descend(k: int, elements: int, sums: int, gaps: tuple[int, ...]) -> None:
        if (sums >> frobenius) & 1:
            return
        if k == frobenius:
            found.append((*gaps, frobenius))
            return
        take_sums = sums | (elements << k) | (1 << (2 * k))
        descend(k + 1, elements | (1 << k), take_sums, gaps)
        if not (sums >> k) & 1:
            descend(k + 1, elements, sums, (*gaps, k))

    descend(1, 0, 0, ())
    return found


def numerical_semigroups(frobenius: int) -> list[tuple[int, ...]]:
    """Gap tuples of every numerical semigroup with the given Frobenius number, sorted."""
    if frobenius < 1:
        return []
    if frobenius <= BRUTE_FORCE_FROBENIUS:
        found = _semigroups_brute_force(frobenius)
    else:
        found = _semigroups_dfs(frobenius)
    return sorted(found)


def _semigroup(gaps: tuple[int, ...]) -> NumericalSemigroup:
    return NumericalSemigroup(numerical_set=NumericalSet(gaps=gaps))


# ################################################
# -- Explicit maximal families

def staircase_tail(n: int, tail: int) -> tuple[int, ...]:
    return (*range(1, n - 1), tail)


def shifted_staircase(n: int) -> tuple[int, ...]:
    """(1, ..., n-3, n+1, 2n-4): π_n with its three largest parts traded for two."""
    return (*range(1, n - 2), n + 1, 2 * n - 4)


def explicit_families(n: int) -> list[tuple[int, ...]]:
    """π̃_n, plus (1, ..., 2k-3, 4k-6) when n = 2k-1 or (1, ..., 2k-2, 4k-5) when n = 2k, for k ≥ 4."""
    families = [shifted_staircase(n)]
    if n % 2 == 1 and n >= 7:
        families.append(staircase_tail(n, 2 * n - 4))
    elif n % 2 == 0 and n >= 8:
        families.append(staircase_tail(n, 2 * n - 5))
    return families


def explicit_maximal_members(weight: int) -> set[tuple[int, ...]]:
    members = set()
    n = 6
    while triangular(n) - 4 <= weight:
        members.update(p for p in explicit_families(n) if sum(p) == weight)
        n += 1
    return members


# ################################################
# -- Service

class EnumerationService:
    """Exhaustive enumerators and the verifiers built on them."""

    def __init__(self, config: Settings | None = None) -> None:
        self.settings = config or default_settings

    # -- caps

    def _require_part_cap(self, value: int, label: str = "largest part") -> None:
        if value > self.settings.max_part_cap:
            raise CapExceededError(f"{label} {value} exceeds the cap {self.settings.max_part_cap} (UNREF_MAX_CAP)")

    def _require_weight_cap(self, value: int) -> None:
        if value > self.settings.max_weight_cap:
            raise CapExceededError(f"weight {value} exceeds the cap {self.settings.max_weight_cap} (UNREF_MAX_WEIGHT)")

    # -- partition search

    def search(self, spec: SearchSpec) -> list[tuple[int, ...]]:
        if spec.largest < 2:
            return []
        if self.settings.workers <= 1:
            found = list(_walk(spec, Branch(position=1)))
        else:
            seeds = _split(spec, min(self.settings.split_depth, spec.largest - 1))
            logger.debug("largest part %d: %d seed branches over %d workers", spec.largest, len(seeds), self.settings.workers)
            with ProcessPoolExecutor(max_workers=self.settings.workers) as pool:
                chunks = pool.map(_run_branch, [spec] * len(seeds), seeds)
                found = [p for chunk in chunks for p in chunk]
        return sorted(found)

    def _weight_family(self, weight: int) -> list[tuple[int, ...]]:
        found = []
        for largest in range(2, weight):
            found.extend(self.search(SearchSpec(largest=largest, weight=weight)))
        return sorted(found)

    def _maximal(self, weight: int) -> list[tuple[int, ...]]:
        for largest in range(weight - 1, 1, -1):
            found = self.search(SearchSpec(largest=largest, weight=weight))
            if found:
                return found
        return []

    def _validate(self, query: FamilyQuery) -> None:
        family = query.family
        if family in {"U_weight", "maximal"}:
            if query.weight is None:
                raise InvalidInputError(f"{family} needs a weight")
            self._require_weight_cap(query.weight)
            if family == "maximal" and query.weight <= 2:
                raise InvalidInputError(f"no unrefinable partition of {query.weight} has two parts; need N > 2")
        elif family in {"NS_frobenius", "SNS_frobenius"}:
            if query.frobenius is None or query.frobenius < 1:
                raise InvalidInputError(f"{family} needs a positive Frobenius number")
            self._require_part_cap(query.frobenius, "Frobenius number")
        else:
            if query.max_part is None or query.max_part < 1:
                raise InvalidInputError(f"{family} needs a positive largest part")
            self._require_part_cap(query.max_part)
            if family in {"U_mex", "Ubar_mex"}:
                if query.mex is None or not 0 <= query.mex < query.max_part:
                    raise InvalidInputError(f"{family} needs 0 ≤ mex < largest part, got mex={query.mex}")

    def _members(self, query: FamilyQuery) -> list[tuple[int, ...]]:
        match query.family:
            case "U_weight":
                return self._weight_family(query.weight)
            case "maximal":
                return self._maximal(query.weight)
            case "U_maxpart":
                return self.search(SearchSpec(largest=query.max_part))
            case "Ubar":
                return self.search(SearchSpec(largest=query.max_part, missing_count=query.max_part // 2))
            case "U_mex":
                return self.search(SearchSpec(largest=query.max_part, mex=query.mex))
            case "Ubar_mex":
                return self.search(
                    SearchSpec(largest=query.max_part, mex=query.mex, missing_count=query.max_part // 2)
                )
            case "NS_frobenius":
                return numerical_semigroups(query.frobenius)
            case "SNS_frobenius":
                return [g for g in numerical_semigroups(query.frobenius) if ns.is_symmetric(_semigroup(g))]
        raise InvalidInputError(f"unknown family {query.family}")

    def enumerate(self, query: FamilyQuery) -> CountsRecord:
        self._validate(query)
        started = time.perf_counter()
        members = self._members(query)
        elapsed = time.perf_counter() - started
        logger.info("%s: %d members in %.3fs", query.family, len(members), elapsed)
        return CountsRecord(
            query=query,
            count=len(members),
            wall_time=round(elapsed, 6),
            listing=[list(m) for m in members] if query.with_listing else None,
        )

    def count(self, query: FamilyQuery) -> int:
        return self.enumerate(query).count

    # -- verifiers

    def verify_prime_identity(self, primes: list[int]) -> PrimeIdentityReport:
        for p in primes:
            if not isprime(p):
                raise NotPrimeError(f"{p} is not prime")
            if p <= 3:
                raise InvalidInputError(f"the identity needs a prime larger than 3, got {p}", code="prime_too_small")
            self._require_part_cap(p)
        rows = []
        for p in primes:
            unrefinable = self.count(FamilyQuery(family="Ubar", max_part=p))
            symmetric = self.count(FamilyQuery(family="SNS_frobenius", frobenius=p))
            rows.append(
                PrimeIdentityRow(
                    prime=p,
                    unrefinable_maximal_missing=unrefinable,
                    symmetric_semigroups=symmetric,
                    equal=unrefinable == symmetric,
                )
            )
        return PrimeIdentityReport(rows=rows, all_equal=all(r.equal for r in rows))

    def check_mirror_properties(self, largest: int) -> MirrorReport:
        self._require_part_cap(largest)
        members = self._members(FamilyQuery(family="Ubar", max_part=largest))
        violations: list[MirrorViolation] = []
        semigroup_members = 0
        for parts in members:
            present = set(parts)
            missing = set(missing_parts(DistinctPartition(parts)).missing)
            for x in range(1, largest):
                if 2 * x != largest and (x in present) != (largest - x in missing):
                    violations.append(
                        MirrorViolation(partition=list(parts), property="mirror", detail=f"x={x}, λ_t-x={largest - x}")
                    )
            if largest % 2 == 0 and largest // 2 in present:
                violations.append(
                    MirrorViolation(partition=list(parts), property="half_excluded", detail=f"{largest // 2} is a part")
                )
            semigroup = ns.is_semigroup(NumericalSet(gaps=parts))
            semigroup_members += semigroup
            if largest % 2 == 1 and all(largest != 3 * m for m in missing) and not semigroup:
                violations.append(
                    MirrorViolation(
                        partition=list(parts),
                        property="semigroup_without_triple",
                        detail=f"{largest} is not three times a missing part, yet the set is not closed",
                    )
                )
        return MirrorReport(
            max_part=largest, checked=len(members), semigroup_members=semigroup_members, violations=violations
        )

    def maximal_unrefinable(self, weight: int) -> CountsRecord:
        return self.enumerate(FamilyQuery(family="maximal", weight=weight, with_listing=True))

    def verify_maximal_subset_proposition(self, n_max: int) -> MaximalSubsetReport:
        rows = []
        for n in range(6, n_max + 1):
            for label, weight in (("T_n", triangular(n)), ("T_n3", triangular(n) - 3), ("T_n4", triangular(n) - 4)):
                self._require_weight_cap(weight)
                maximal = self._maximal(weight)
                explicit = explicit_maximal_members(weight)
                remainder = [p for p in maximal if p not in explicit]
                rows.append(
                    MaximalSubsetRow(
                        n=n,
                        weight=weight,
                        family=label,
                        maximal_count=len(maximal),
                        largest_part=maximal[0][-1],
                        explicit_members=[list(p) for p in maximal if p in explicit],
                        remainder=[list(p) for p in remainder],
                        counterexamples=[
                            list(p) for p in remainder if missing_parts(DistinctPartition(p)).count != p[-1] // 2
                        ],
                    )
                )
        counterexamples = [p for r in rows for p in r.counterexamples]
        if counterexamples:
            logger.info("maximal partitions outside the explicit families lacking missing parts: %s", counterexamples)
        return MaximalSubsetReport(rows=rows, holds=not counterexamples, counterexamples=counterexamples)

    def mex_decomposition(self, largest: int) -> MexDecomposition:
        self._require_part_cap(largest)
        total = self.count(FamilyQuery(family="U_maxpart", max_part=largest))
        strata = [
            MexStratum(mex=mex, count=self.count(FamilyQuery(family="U_mex", max_part=largest, mex=mex)))
            for mex in range(1, largest)
        ]
        complete = self.count(FamilyQuery(family="U_mex", max_part=largest, mex=0)) if largest >= 2 else 0
        return MexDecomposition(
            max_part=largest,
            total=total,
            strata=[s for s in strata if s.count],
            complete_stratum=complete,
        )

    def census(self, frobenius: int, symmetric_only: bool = False, with_listing: bool = False) -> CensusReport:
        if frobenius < 1:
            raise InvalidInputError(f"the Frobenius number must be positive, got {frobenius}")
        self._require_part_cap(frobenius, "Frobenius number")
        semigroups = numerical_semigroups(frobenius)
        classes = {g: ns.symmetry_class(_semigroup(g)) for g in semigroups}
        by_genus: dict[int, Counter] = {}
        for gaps, cls in classes.items():
            by_genus.setdefault(len(gaps), Counter())[cls] += 1
        rows = [
            GenusRow(
                genus=g,
                semigroups=sum(c.values()),
                symmetric=c["symmetric"],
                pseudo_symmetric=c["pseudo_symmetric"],
            )
            for g, c in sorted(by_genus.items())
        ]
        listed = [g for g in semigroups if not symmetric_only or classes[g] == "symmetric"]
        return CensusReport(
            frobenius=frobenius,
            semigroups=len(semigroups),
            symmetric=sum(r.symmetric for r in rows),
            pseudo_symmetric=sum(r.pseudo_symmetric for r in rows),
            by_genus=rows,
            listing=[list(g) for g in listed] if with_listing else None,
        )

    def oracle_sweep(self, largest: int) -> OracleSweepReport:
        """Compare the vector check with the subset-sum oracle on every partition up to ``largest``."""
        self._require_part_cap(largest)
        checked = 0
        disagreements: list[list[int]] = []
        for top in range(2, largest + 1):
            below = range(1, top)
            for size in range(1, top):
                for chosen in combinations(below, size):
                    partition = DistinctPartition((*chosen, top))
                    checked += 1
                    if check_unrefinable_fast(partition) != is_unrefinable(partition):
                        disagreements.append(list(partition.parts))
        if disagreements:
            logger.warning("vector check disagrees with the oracle on %d partitions", len(disagreements))
        return OracleSweepReport(max_part=largest, checked=checked, disagreements=disagreements)
