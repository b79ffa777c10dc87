import pytest

from helpers import lattice_points_under, pick_newton_number
from sqhspectrum.constructions import SQHParams, first_jump_diagram
from sqhspectrum.geometry import deform, diagram_from_vertices, is_deformation_of, newton_number, triangle
from sqhspectrum.oracle import (
    Budget,
    BudgetExceeded,
    EnumerationConstraints,
    attainable_spectrum,
    check_witnesses,
    enumerate_subdiagrams,
    find_witness,
    hull_closure_deformations,
    spectrum_of,
    subset_hull_deformations,
    verify,
)


def test_enumeration_examples():
    assert list(enumerate_subdiagrams(triangle(2, 2))) == [triangle(2, 2)]
    got = set(enumerate_subdiagrams(triangle(2, 3)))
    assert triangle(2, 3) in got and triangle(2, 2) in got


def test_enumeration_is_lexicographic_and_unique():
    ds = list(enumerate_subdiagrams(triangle(4, 8)))
    assert ds == sorted(ds)
    assert len(ds) == len(set(ds))
    assert set(ds) == hull_closure_deformations(triangle(4, 8))


def test_enumeration_rejects_non_convenient():
    with pytest.raises(ValueError):
        list(enumerate_subdiagrams(diagram_from_vertices([(1, 3), (3, 0)])))
    with pytest.raises(NotImplementedError):
        EnumerationConstraints(require_convenient=False)
    with pytest.raises(ValueError):
        EnumerationConstraints(min_total_degree=-1)


def test_spectrum_examples():
    s = attainable_spectrum(4, 6)
    assert 14 not in s.attainable
    assert {15, 13, 12, 11} <= set(s.attainable)
    assert attainable_spectrum(3, 6).attainable == [v for v in range(1, 11) if v != 9]
    assert attainable_spectrum(2, 6).attainable == [1, 2, 3, 4, 5]
    assert attainable_spectrum(4, 8).attainable == [v for v in range(1, 22) if v not in (19, 20)]


def test_find_witness_examples():
    base = triangle(4, 6)
    assert find_witness(base, 14) is None
    w = find_witness(base, 13)
    fj = first_jump_diagram(SQHParams(4, 6)).diagram
    # two diagrams reach 13; the lexicographically smaller one is returned
    assert newton_number(w) == newton_number(fj) == 13
    assert w <= fj
    assert w == attainable_spectrum(4, 6).witnesses[13]
    assert find_witness(triangle(5, 7), 24) == triangle(5, 7)


def test_witnesses_recheck():
    for p, q in [(4, 6), (5, 7), (6, 9), (3, 8)]:
        s = attainable_spectrum(p, q)
        assert check_witnesses(s) == []
        for nu, d in s.witnesses.items():
            assert pick_newton_number(d.as_tuples()) == nu


def test_witness_is_lexicographic_minimum():
    base = triangle(4, 7)
    s = spectrum_of(base)
    best = {}
    for d in hull_closure_deformations(base):
        nu = newton_number(d)
        if nu not in best or d < best[nu]:
            best[nu] = d
    assert s.witnesses == best


def test_min_degree_zero_reaches_zero():
    s = attainable_spectrum(3, 4, EnumerationConstraints(min_total_degree=0, min_nu=0))
    assert 0 in s.attainable
    assert s.attainable == list(range(0, 7))
    # no point of degree < 2 with the default constraints
    for d in enumerate_subdiagrams(triangle(3, 4)):
        assert all(v.x + v.y >= 2 for v in d.vertices)


def test_monotone_in_q():
    for p in range(2, 6):
        for q in range(p + 1, 11):
            lower = set(attainable_spectrum(p, q - 1).attainable)
            assert lower <= set(attainable_spectrum(p, q).attainable)


def test_literal_subsets_match_closure():
    for p, q in [(2, 3), (3, 3), (2, 5), (3, 4)]:
        base = triangle(p, q)
        assert subset_hull_deformations(base) == hull_closure_deformations(base) == set(enumerate_subdiagrams(base))
    with pytest.raises(BudgetExceeded):
        subset_hull_deformations(triangle(6, 8))


def test_every_deformation_is_a_hull_of_lattice_points():
    base = triangle(4, 5)
    pts = lattice_points_under(4, 5)
    for d in enumerate_subdiagrams(base):
        assert is_deformation_of(d, base)
        assert all(tuple(v) in pts for v in d.vertices)
        assert deform(base, d.vertices) == d


def test_budget():
    with pytest.raises(BudgetExceeded):
        attainable_spectrum(13, 13)
    with pytest.raises(BudgetExceeded):
        find_witness(triangle(3, 15), 1)
    s = attainable_spectrum(3, 15, budget=Budget(12, 15))
    assert max(s.attainable) == 28
    assert attainable_spectrum(3, 15, budget=None).attainable == s.attainable


def test_parallel_matches_serial():
    a = attainable_spectrum(6, 8, jobs=1)
    b = attainable_spectrum(6, 8, jobs=2)
    assert a.attainable == b.attainable and a.witnesses == b.witnesses and a.chains_seen == b.chains_seen


def test_verify_examples():
    rep = verify(4, 8)
    assert rep.passed and rep.closed_gaps == set()
    assert rep.observed_gaps == {19, 20}
    rep = verify(6, 9)
    assert rep.passed and rep.missing_guaranteed == set()
    rep = verify(2, 7)
    assert rep.predicted.applicability == "oracle-only" and rep.passed
    assert rep.observed.attainable
