import pytest

from exceptions import InvalidInputError, NoGapsError, NotASemigroupError, NotCofiniteError
from models import DistinctPartition, NumericalSemigroup, NumericalSet
from services import numerical_semigroup as ns
from services.enumeration_service import numerical_semigroups
from services.refinability import is_unrefinable

EXAMPLE_GAPS = (1, 2, 4, 5, 7, 10, 13)
CORRESPONDENCE_GAPS = (1, 2, 3, 5, 6, 9, 13)


def semigroup(gaps) -> NumericalSemigroup:
    return ns.as_semigroup(ns.from_gaps(gaps))


def test_from_gaps():
    numerical_set = ns.from_gaps(EXAMPLE_GAPS)
    assert numerical_set.elements_below(15) == [0, 3, 6, 8, 9, 11, 12, 14]
    assert ns.from_gaps([]).elements_below(4) == [0, 1, 2, 3]
    assert ns.from_gaps(CORRESPONDENCE_GAPS).elements_below(15) == [0, 4, 7, 8, 10, 11, 12, 14]


@pytest.mark.parametrize("gaps", [(0, 1), (1, 1, 2), (3, 2)])
def test_from_gaps_rejects(gaps):
    with pytest.raises(InvalidInputError):
        ns.from_gaps(gaps)


@pytest.mark.parametrize(
    "gaps, expected",
    [
        (EXAMPLE_GAPS, True),
        ((1, 2, 5, 6, 8), False),
        ((), True),
    ],
)
def test_is_semigroup(gaps, expected):
    assert ns.is_semigroup(ns.from_gaps(gaps)) is expected


def test_as_semigroup_rejects_open_sets():
    with pytest.raises(NotASemigroupError):
        ns.as_semigroup(ns.from_gaps((1, 2, 5, 6, 8)))


@pytest.mark.parametrize(
    "gaps, frobenius, genus, multiplicity",
    [
        (EXAMPLE_GAPS, 13, 7, 3),
        (CORRESPONDENCE_GAPS, 13, 7, 4),
    ],
)
def test_invariants(gaps, frobenius, genus, multiplicity):
    numerical_set = ns.from_gaps(gaps)
    assert ns.frobenius(numerical_set) == frobenius
    assert ns.genus(numerical_set) == genus
    assert ns.multiplicity(numerical_set) == multiplicity


def test_invariants_of_naturals():
    naturals = ns.from_gaps(())
    assert ns.genus(naturals) == 0
    assert ns.multiplicity(naturals) == 1
    with pytest.raises(NoGapsError):
        ns.frobenius(naturals)


def test_from_generators():
    assert ns.from_generators([3, 8]).gaps == EXAMPLE_GAPS
    assert ns.from_generators([1]).gaps == ()
    assert ns.from_generators([5, 7]).gaps[-1] == 23
    with pytest.raises(NotCofiniteError):
        ns.from_generators([2, 4])
    with pytest.raises(InvalidInputError):
        ns.from_generators([])


@pytest.mark.parametrize(
    "gaps, n, elements",
    [
        (EXAMPLE_GAPS, 3, (0, 16, 8)),
        (CORRESPONDENCE_GAPS, 4, (0, 17, 10, 7)),
        (EXAMPLE_GAPS, 1, (0,)),
    ],
)
def test_apery_set(gaps, n, elements):
    apery = ns.apery_set(semigroup(gaps), n)
    assert apery.elements == elements
    assert apery.modulus_in_set


def test_apery_set_with_modulus_outside():
    apery = ns.apery_set(semigroup(EXAMPLE_GAPS), 5)
    assert apery.elements == (0, 6, 12, 3, 9)
    assert not apery.modulus_in_set


@pytest.mark.parametrize(
    "gaps, generators",
    [
        (EXAMPLE_GAPS, (3, 8)),
        ((), (1,)),
        (ns.from_generators([5, 7]).gaps, (5, 7)),
        ((1, 2, 5), (3, 4)),
    ],
)
def test_minimal_generators(gaps, generators):
    msg = ns.minimal_generators(semigroup(gaps))
    assert msg.generators == generators
    assert msg.embedding_dimension == len(generators)


@pytest.mark.parametrize(
    "gaps, symmetric, pseudo",
    [
        ((1,), True, False),
        ((1, 2, 3, 5, 7, 9, 11, 15), True, False),
        ((1, 2, 5), True, False),
        ((1, 2), False, True),
        (EXAMPLE_GAPS, True, False),
        ((1, 2, 4), False, True),
        ((1, 2, 4, 5), False, False),
    ],
)
def test_symmetry(gaps, symmetric, pseudo):
    s = semigroup(gaps)
    assert ns.is_symmetric(s) is symmetric
    assert ns.is_pseudo_symmetric(s) is pseudo


def test_set_from_partition():
    assert ns.set_from_partition(DistinctPartition(CORRESPONDENCE_GAPS)).elements_below(15) == [
        0, 4, 7, 8, 10, 11, 12, 14
    ]
    open_set = ns.set_from_partition(DistinctPartition((1, 2, 5, 6, 8)))
    assert open_set.elements_below(10) == [0, 3, 4, 7, 9]
    assert not ns.is_semigroup(open_set)
    assert ns.set_from_partition(DistinctPartition((1,))).elements_below(4) == [0, 2, 3]


def test_partition_round_trip():
    partition = DistinctPartition((1, 2, 5, 6, 8))
    assert ns.partition_from_set(ns.set_from_partition(partition)) == partition
    assert ns.from_gaps(ns.from_gaps(EXAMPLE_GAPS).gaps) == NumericalSet(gaps=EXAMPLE_GAPS)


def test_apery_against_forbidden_vector():
    report = ns.apery_vs_forbidden(semigroup(CORRESPONDENCE_GAPS))
    assert report.apery == [0, 17, 10, 7]
    assert report.forbidden_vector == [8, 17, 10, 7]
    assert report.agrees_off_zero
    assert report.zero_entry_is_double_multiplicity
    assert not report.residues[0].agrees


def test_apery_against_forbidden_vector_above_frobenius():
    report = ns.apery_vs_forbidden(semigroup((1, 2, 5)))
    assert report.apery == [0, 4, 8]
    assert report.forbidden_vector == [15, 4, 11]
    assert [r.agrees for r in report.residues[1:]] == [True, False]


def test_apery_against_forbidden_vector_needs_missing_parts():
    with pytest.raises(InvalidInputError):
        ns.apery_vs_forbidden(semigroup((1,)))


@pytest.mark.parametrize("frobenius", range(1, 17))
def test_semigroup_properties(frobenius):
    for gaps in numerical_semigroups(frobenius):
        s = NumericalSemigroup(numerical_set=NumericalSet(gaps=gaps))
        assert ns.is_semigroup(s.numerical_set)
        assert ns.is_symmetric(s) == ns.symmetric_by_genus(s)
        assert ns.is_pseudo_symmetric(s) == ns.pseudo_symmetric_by_genus(s)
        assert ns.from_generators(ns.minimal_generators(s).generators).gaps == gaps
        if len(gaps) >= 2:
            assert is_unrefinable(DistinctPartition(gaps))
        m = ns.multiplicity(s)
        apery = ns.apery_set(s, m).elements
        assert all(not s.contains(w - m) for w in apery[1:])


@pytest.mark.parametrize("frobenius", range(3, 15))
def test_vector_meets_apery_below_frobenius(frobenius):
    for gaps in numerical_semigroups(frobenius):
        s = NumericalSemigroup(numerical_set=NumericalSet(gaps=gaps))
        if ns.multiplicity(s) < 2 or ns.multiplicity(s) > frobenius:
            continue
        report = ns.apery_vs_forbidden(s)
        for row in report.residues[1:]:
            if row.apery < frobenius:
                assert row.agrees, (gaps, row)
            else:
                assert row.vector is None or row.vector >= row.apery
