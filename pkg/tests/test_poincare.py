from itertools import product

import pytest
from hypothesis import given, settings, strategies as st

from frobcx.poincare import PoincareTable, build_table


def test_frozen_tables():
    assert build_table(2, 4).coeffs == (1, 4, 6, 4, 1)
    assert build_table(3, 2).coeffs == (1, 2, 3, 2, 1)
    assert build_table(2, 1).coeffs == (1, 1)
    assert build_table(5, 1).coeffs == (1, 1, 1, 1, 1)
    assert build_table(3, 3).coeffs == (1, 3, 6, 7, 6, 3, 1)


def test_coeff_outside_range_is_zero():
    t = build_table(2, 4)
    assert t.coeff(-1) == 0
    assert t.coeff(5) == 0
    assert t.coeff(4) == 1


def test_rejects_bad_arguments():
    with pytest.raises(ValueError):
        build_table(4, 3)
    with pytest.raises(ValueError):
        build_table(2, 0)
    with pytest.raises(ValueError):
        PoincareTable(2, 2, (1, 2, 1, 7))  # wrong length


def test_caching_returns_same_object():
    assert build_table(3, 4) is build_table(3, 4)


def brute_coeff(p, d, m):
    return sum(1 for t in product(range(p), repeat=d) if sum(t) == m)


def test_matches_brute_force_digit_count():
    for p, d in [(2, 1), (2, 3), (2, 5), (3, 2), (3, 4), (5, 2), (5, 3)]:
        table = build_table(p, d)
        for m in range(-1, d * (p - 1) + 2):
            assert table.coeff(m) == brute_coeff(p, d, m)


@settings(max_examples=60)
@given(st.sampled_from([2, 3, 5, 7]), st.integers(min_value=1, max_value=7))
def test_row_sum_and_symmetry(p, d):
    table = build_table(p, d)
    top = d * (p - 1)
    assert sum(table.coeffs) == p**d
    assert all(table.coeff(m) == table.coeff(top - m) for m in range(top + 1))
    assert table.coeff(0) == table.coeff(top) == 1
    assert table.top_degree == top
