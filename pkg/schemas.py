from typing import Any, Literal

import msgspec

SCHEMA_VERSION = "1"


class BaseSchema(
    msgspec.Struct,
    omit_defaults=True,
    forbid_unknown_fields=True,
    rename="kebab",
):
    pass

# ################################################
# -- Envelope

class Diagnostic(BaseSchema):
    code: str
    detail: str


class OutputEnvelope(BaseSchema):
    schema_version: str
    command: str
    result: Any = None
    diagnostics: list[Diagnostic] = []


# ################################################
# -- Refinability

Verdict = Literal["unrefinable", "refinable"]


class WitnessRead(BaseSchema):
    part: int
    summands: list[int]


class StageRead(BaseSchema):
    missing_part: int
    stage: str
    entries: list[int | None]


class VectorRead(BaseSchema):
    missing: list[int]
    mex: int
    entries: list[int | None]
    saturated: bool
    finiteness: str | None = None
    trace: list[StageRead] | None = None


class CheckResult(BaseSchema):
    partition: list[int]
    verdict: Verdict
    method: Literal["fast", "oracle", "both"]
    mex: int
    witness: WitnessRead | None = None
    forbidden_vector: list[int | None] | None = None
    saturated: bool | None = None
    trace: list[StageRead] | None = None


class CanonicalRead(BaseSchema):
    weight: int
    kind: str
    n: int
    partition: list[int]
    d: int | None = None


class LatticeRead(BaseSchema):
    base: list[int]
    node_count: int
    nodes: list[list[int]]
    edges: list[tuple[list[int], list[int], int]]
    top: list[list[int]]


# ################################################
# -- Numerical semigroups

SymmetryClass = Literal["symmetric", "pseudo_symmetric", "neither"]


class SemigroupInfo(BaseSchema):
    gaps: list[int]
    semigroup: bool
    genus: int
    multiplicity: int
    frobenius: int | None = None
    symmetry: SymmetryClass | None = None


class AperyRead(BaseSchema):
    modulus: int
    elements: list[int]
    modulus_in_set: bool


class GeneratorsRead(BaseSchema):
    generators: list[int]
    embedding_dimension: int


class ResidueComparison(BaseSchema):
    residue: int
    apery: int
    vector: int | None
    agrees: bool


class AperyComparison(BaseSchema):
    multiplicity: int
    frobenius: int
    apery: list[int]
    forbidden_vector: list[int | None]
    residues: list[ResidueComparison]
    agrees_off_zero: bool
    zero_entry_is_double_multiplicity: bool


# ################################################
# -- Young diagrams

class YoungRead(BaseSchema):
    gaps: list[int]
    profile: list[int]
    hooks: list[list[int]] | None = None
    criterion: Literal["semigroup", "unrefinable"] | None = None
    verdict: bool | None = None
    ascii: str | None = None


# ################################################
# -- Enumeration

Family = Literal[
    "U_weight",
    "U_maxpart",
    "Ubar",
    "U_mex",
    "Ubar_mex",
    "NS_frobenius",
    "SNS_frobenius",
    "maximal",
]


class FamilyQuery(BaseSchema):
    family: Family
    max_part: int | None = None
    mex: int | None = None
    weight: int | None = None
    frobenius: int | None = None
    with_listing: bool = False


class CountsRecord(BaseSchema):
    query: FamilyQuery
    count: int
    wall_time: float
    listing: list[list[int]] | None = None


class PrimeIdentityRow(BaseSchema):
    prime: int
    unrefinable_maximal_missing: int
    symmetric_semigroups: int
    equal: bool


class PrimeIdentityReport(BaseSchema):
    rows: list[PrimeIdentityRow]
    all_equal: bool


class MirrorViolation(BaseSchema):
    partition: list[int]
    property: Literal["mirror", "half_excluded", "semigroup_without_triple"]
    detail: str


class MirrorReport(BaseSchema):
    max_part: int
    checked: int
    semigroup_members: int
    violations: list[MirrorViolation] = []


class MaximalSubsetRow(BaseSchema):
    n: int
    weight: int
    family: Literal["T_n", "T_n3", "T_n4"]
    maximal_count: int
    largest_part: int
    explicit_members: list[list[int]]
    remainder: list[list[int]]
    counterexamples: list[list[int]] = []


class MaximalSubsetReport(BaseSchema):
    rows: list[MaximalSubsetRow]
    holds: bool
    counterexamples: list[list[int]] = []


class MexStratum(BaseSchema):
    mex: int
    count: int


class MexDecomposition(BaseSchema):
    max_part: int
    total: int
    strata: list[MexStratum]
    complete_stratum: int


class GenusRow(BaseSchema):
    genus: int
    semigroups: int
    symmetric: int
    pseudo_symmetric: int


class CensusReport(BaseSchema):
    frobenius: int
    semigroups: int
    symmetric: int
    pseudo_symmetric: int
    by_genus: list[GenusRow]
    listing: list[list[int]] | None = None


class OracleSweepReport(BaseSchema):
    max_part: int
    checked: int
    disagreements: list[list[int]] = []
