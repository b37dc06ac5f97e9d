"""Value-level combinatorics for partitions into distinct parts."""

import logging
from collections.abc import Iterable
from math import isqrt

from exceptions import InvalidInputError, InvalidPartitionError
from models import CanonicalFamily, DistinctPartition, MissingParts

logger = logging.getLogger(__name__)


def validate(parts: Iterable[int]) -> DistinctPartition:
    """Build a partition, rejecting duplicates, non-positive values and bad order."""
    return DistinctPartition(tuple(int(p) for p in parts))


def require_two_parts(partition: DistinctPartition) -> None:
    if partition.length < 2:
        raise InvalidPartitionError(
            f"at least two parts are required, got {list(partition.parts)}", code="too_short"
        )


def missing_parts(partition: DistinctPartition) -> MissingParts:
    present = set(partition.parts)
    missing = tuple(x for x in range(1, partition.largest + 1) if x not in present)
    return MissingParts(missing=missing, mex=missing[0] if missing else 0)


def weight(partition: DistinctPartition) -> int:
    return sum(partition.parts)


def triangular(n: int) -> int:
    return n * (n + 1) // 2


def complete_partition(n: int) -> CanonicalFamily:
    return CanonicalFamily(kind="complete", n=n, partition=DistinctPartition(tuple(range(1, n + 1))))


def near_complete_partition(n: int, d: int) -> CanonicalFamily:
    if n < 3 or not 1 <= d <= n - 1:
        raise InvalidInputError(f"π_(n,d) needs n ≥ 3 and 1 ≤ d ≤ n-1, got n={n}, d={d}")
    parts = tuple(x for x in range(1, n + 1) if x != d)
    return CanonicalFamily(kind="near_complete", n=n, d=d, partition=DistinctPartition(parts))


def canonical_family(weight_n: int) -> CanonicalFamily:
    if weight_n <= 2:
        raise InvalidInputError(f"no unrefinable partition into ≥2 distinct parts for N={weight_n}; need N > 2")
    # smallest n with T_n >= N
    n = (isqrt(8 * weight_n + 1) - 1) // 2
    if triangular(n) < weight_n:
        n += 1
    d = triangular(n) - weight_n
    if d == 0:
        return complete_partition(n)
    return near_complete_partition(n, d)


def canonical_unrefinable(weight_n: int) -> DistinctPartition:
    """π_n when N is triangular, π_(n,d) with T_(n-1) < N < T_n otherwise."""
    family = canonical_family(weight_n)
    logger.debug("canonical partition of %d is %s(n=%d, d=%s)", weight_n, family.kind, family.n, family.d)
    return family.partition


def missing_bound_holds(partition: DistinctPartition) -> bool:
    return missing_parts(partition).count <= partition.largest // 2
