import pytest
from hypothesis import given, settings, strategies as st

from frobcx.enumeration import count_basis_enumeration
from frobcx.poincare import build_table
from frobcx.transfer import (
    ComplexityReport,
    build_system,
    complexity_sequence,
    complexity_term,
    state,
)


def test_frozen_system_p2_d4():
    sys24 = build_system(2, 4)
    assert sys24.matrix == ((6, 4), (1, 4))
    assert sys24.x0 == (4, 0)
    assert sys24.weights == (1, 0)
    assert sys24.dim == 2


def test_frozen_system_p3_d3():
    sys33 = build_system(3, 3)
    # 1x1 case: the single entry is the exact growth rate p(p+1)/2
    assert sys33.matrix == ((6,),)
    assert sys33.x0 == (3,)
    assert sys33.weights == (3,)
    # weights . x0 = 9 = the level-2 count in three variables over F_3


def test_build_system_rejects_small_d():
    with pytest.raises(ValueError):
        build_system(2, 2)
    with pytest.raises(ValueError):
        build_system(2, 4, build_table(2, 5))


def test_state_iterates_matrix_powers():
    sys24 = build_system(2, 4)
    assert state(sys24, 0) == (4, 0)
    assert state(sys24, 1) == (24, 4)
    assert state(sys24, 2) == (160, 40)
    with pytest.raises(ValueError):
        state(sys24, -1)


def test_complexity_term_frozen_values():
    # independently brute-forced before implementation
    expected = {
        (2, 4, 2): 4, (2, 4, 3): 24, (2, 4, 4): 160,
        (2, 4, 5): 1120, (2, 4, 6): 8000,
        (2, 6, 6): 5937792, (3, 5, 4): 1145826, (5, 4, 3): 171500,
    }
    for (p, d, e), c in expected.items():
        assert complexity_term(p, d, e) == c


def test_complexity_term_degenerate_levels():
    for p, d in [(2, 1), (2, 2), (3, 2), (5, 1), (3, 4)]:
        assert complexity_term(p, d, 0) == 0
    # level 1 is the closed binomial count for every d
    assert complexity_term(2, 4, 1) == 4
    assert complexity_term(3, 4, 1) == 10
    assert complexity_term(5, 3, 1) == 15
    # below three variables nothing survives past level 1
    for e in (2, 3, 4):
        assert complexity_term(2, 2, e) == 0
        assert complexity_term(3, 1, e) == 0


def test_sequence_report_matches_terms():
    report = complexity_sequence(2, 4, 6)
    assert report.engine == "transfer"
    assert report.c == (0, 4, 4, 24, 160, 1120, 8000)
    assert report.k == (0, 4, 8, 32, 192, 1312, 9312)
    assert report.emax == 6


def test_sequence_agrees_with_term_calls():
    for p, d, emax in [(2, 5, 7), (3, 4, 5), (5, 3, 4), (2, 2, 4), (3, 1, 3)]:
        report = complexity_sequence(p, d, emax)
        assert report.c == tuple(complexity_term(p, d, e) for e in range(emax + 1))


def test_report_validation():
    with pytest.raises(ValueError):
        ComplexityReport(2, 4, "transfer", (1, 2), (1, 3))  # c[0] != 0
    with pytest.raises(ValueError):
        ComplexityReport(2, 4, "transfer", (0, 2), (0, 3))  # bad partial sums
    with pytest.raises(ValueError):
        ComplexityReport(2, 4, "transfer", (0, 2), (0,))  # length mismatch


def test_transfer_matches_enumeration_spot_checks():
    for p, d, e in [(2, 3, 5), (2, 5, 4), (3, 4, 3), (5, 3, 3), (2, 6, 3)]:
        assert complexity_term(p, d, e) == count_basis_enumeration(p, d, e)


@settings(max_examples=60)
@given(
    st.sampled_from([2, 3, 5, 7]),
    st.integers(min_value=1, max_value=7),
    st.integers(min_value=0, max_value=10),
)
def test_counts_nonnegative_and_sums_monotone(p, d, emax):
    report = complexity_sequence(p, d, emax)
    assert all(c >= 0 for c in report.c)
    assert all(b >= a for a, b in zip(report.k, report.k[1:]))


@settings(max_examples=40)
@given(st.sampled_from([2, 3, 5]), st.integers(min_value=3, max_value=6))
def test_census_states_stay_positive_in_first_slot(p, d):
    # the top-carry census can have zero tail slots but never an empty lead
    system = build_system(p, d)
    x = state(system, 0)
    for e in range(1, 6):
        x = state(system, e)
        assert x[0] > 0
