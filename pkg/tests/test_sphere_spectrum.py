from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

from sphereweyl.exact_numbers import DomainError
from sphereweyl.sphere_spectrum import (
    binomial,
    counting_at,
    counting_brute,
    counting_closed_form,
    counting_product_form,
    distinct_eigenvalue,
    level_index,
    multiplicity,
    multiplicity_cases,
    spectrum,
)


@pytest.mark.parametrize("m", range(0, 40))
def test_binomial_matches_stdlib(m):
    for j in range(-3, m + 4):
        assert binomial(m, j) == (comb(m, j) if 0 <= j <= m else 0)


@pytest.mark.parametrize("n, k, expected", [(2, 0, 0), (2, 3, 12), (15, 2, 32)])
def test_distinct_eigenvalue(n, k, expected):
    assert distinct_eigenvalue(n, k) == expected


def test_eigenvalues_strictly_increasing():
    for n in range(1, 16):
        vals = [distinct_eigenvalue(n, k) for k in range(200)]
        assert all(a < b for a, b in zip(vals, vals[1:]))


@pytest.mark.parametrize("n, k, expected", [(15, 1, 16), (2, 5, 11), (1, 4, 2)])
def test_multiplicity(n, k, expected):
    assert multiplicity(n, k) == expected


def test_single_expression_reproduces_case_split():
    for n in range(1, 21):
        for k in range(0, 300):
            assert multiplicity(n, k) == multiplicity_cases(n, k)


def test_multiplicity_positive_and_counts_increasing():
    for n in range(1, 21):
        prev = 0
        for k in range(0, 2001):
            m = multiplicity(n, k)
            assert m >= 1
            total = counting_closed_form(n, k) if k % 97 == 0 else prev + m
            assert total > prev
            prev = total


def test_low_dimension_laws():
    # S^1: 1, 2, 2, ...; S^2: 2k+1
    for k in range(1, 500):
        assert multiplicity(1, k) == 2
        assert multiplicity(2, k) == 2 * k + 1


@pytest.mark.parametrize("n, k, expected", [(2, 0, 1), (2, 3, 16), (1, 7, 15)])
def test_counting_closed_form(n, k, expected):
    assert counting_closed_form(n, k) == expected


@pytest.mark.parametrize("n, k, expected", [(2, 3, 16), (1, 0, 1), (4, 2, 20)])
def test_counting_product_form(n, k, expected):
    # n=4, k=2: C(6,2) + C(5,1) = 15 + 5 = 20, also 1 + 5 + 14 by multiplicities
    assert counting_product_form(n, k) == expected
    assert counting_brute(n, k) == expected


@pytest.mark.parametrize("n, k, expected", [(2, 0, 1), (2, 3, 1 + 3 + 5 + 7), (15, 2, 1 + 16 + (comb(17, 2) - comb(15, 0)))])
def test_counting_brute(n, k, expected):
    assert counting_brute(n, k) == expected


def test_three_forms_agree_small():
    for n in range(1, 11):
        running = 0
        for k in range(0, 120):
            running += multiplicity_cases(n, k)
            assert counting_closed_form(n, k) == counting_product_form(n, k) == counting_brute(n, k) == running


def test_closed_form_low_dimensions_large_k():
    for k in range(0, 10 ** 4 + 1):
        assert counting_closed_form(2, k) == (k + 1) ** 2
        assert counting_closed_form(1, k) == 2 * k + 1


@given(st.integers(min_value=1, max_value=40), st.integers(min_value=0, max_value=10 ** 6))
def test_product_form_matches_closed_form(n, k):
    assert counting_product_form(n, k) == counting_closed_form(n, k)


@pytest.mark.parametrize("n, x, expected", [(2, 0, 1), (2, 11, 9), (2, 12, 16)])
def test_counting_at(n, x, expected):
    assert counting_at(n, x) == expected


@given(st.integers(min_value=1, max_value=30), st.integers(min_value=1, max_value=10 ** 9))
def test_counting_at_nodes(n, k):
    v = distinct_eigenvalue(n, k)
    assert counting_at(n, v) == counting_closed_form(n, k)
    assert counting_at(n, v - 1) == counting_closed_form(n, k - 1)


@given(st.integers(min_value=1, max_value=12), st.integers(min_value=0, max_value=5000))
def test_level_index_brute(n, x):
    k = 0
    while (k + 1) * (k + n) <= x:
        k += 1
    assert level_index(n, x) == k


def test_counting_at_fraction_argument():
    from fractions import Fraction

    assert counting_at(2, Fraction(23, 2)) == 9
    assert counting_at(2, Fraction(24, 2)) == 16


def test_errors():
    with pytest.raises(DomainError):
        counting_at(2, -1)
    with pytest.raises(DomainError):
        multiplicity(0, 3)
    with pytest.raises(DomainError):
        counting_closed_form(3, -1)


def test_spectrum_entries():
    entries = spectrum(3, 50)
    assert entries[0] == (0, 0, 1, 1)
    for prev, cur in zip(entries, entries[1:]):
        assert cur.eigenvalue == cur.k * (cur.k + 2)
        assert cur.cumulative == prev.cumulative + cur.multiplicity
        assert cur.cumulative == counting_closed_form(3, cur.k)
