import itertools
import math
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sphereweyl.box_baseline import (
    BoxDomain,
    BudgetExceeded,
    box_counting,
    box_eigenvalues,
    box_nodes,
    box_polya_check,
    box_weyl_decimal,
    interval_count,
    weyl_exceeds_count,
)
from sphereweyl.exact_numbers import DomainError

UNIT_INTERVAL = BoxDomain([1])
UNIT_SQUARE = BoxDomain([1, 1])
RECT_1x2 = BoxDomain([1, 2])
UNIT_CUBE = BoxDomain([1, 1, 1])


def naive_count(box, q_max):
    """Reverse loop order over a generous integer cube, independent bounds."""
    q_max = Fraction(q_max)
    top = [int(math.isqrt(int(q_max * a * a) + 1)) + 1 for a in box.sides]
    inv = [1 / (a * a) for a in box.sides]
    count = 0
    for modes in itertools.product(*[range(t, 0, -1) for t in reversed(top)]):
        modes = modes[::-1]
        if sum(m * m * c for m, c in zip(modes, inv)) <= q_max:
            count += 1
    return count


@pytest.mark.parametrize("box, q_max, expected", [
    (UNIT_SQUARE, 2, 1),
    (UNIT_SQUARE, Fraction("4.9"), 1),
    (UNIT_INTERVAL, 9, 3),
    (UNIT_SQUARE, 5, 3),
    (UNIT_CUBE, 3, 1),
])
def test_box_counting_examples(box, q_max, expected):
    assert box_counting(box, q_max) == expected


@pytest.mark.parametrize("box, q_max", [
    (UNIT_SQUARE, 60), (RECT_1x2, 45), (UNIT_CUBE, 30), (BoxDomain([Fraction(1, 2), 3]), 17),
    (BoxDomain([1, Fraction(3, 2), 2]), 12), (BoxDomain([1, 1, 1, 1]), 14),
])
def test_box_counting_matches_naive(box, q_max):
    assert box_counting(box, q_max) == naive_count(box, q_max)
    assert len(box_eigenvalues(box, q_max)) == naive_count(box, q_max)


def test_interval_closed_form():
    for q in list(range(1, 2000)) + [10 ** 6, 10 ** 6 - 1, Fraction(10 ** 6 - 1, 3)]:
        assert box_counting(UNIT_INTERVAL, q) == interval_count(q) == math.isqrt(int(q))


@settings(max_examples=100)
@given(st.fractions(min_value=Fraction(1, 100), max_value=10 ** 6, max_denominator=1000))
def test_interval_floor_sqrt(q):
    assert box_counting(UNIT_INTERVAL, q) == math.isqrt(math.floor(q))


def test_threads_do_not_change_counts():
    for t in (1, 4, 8):
        assert box_counting(UNIT_CUBE, 40, threads=t) == box_counting(UNIT_CUBE, 40)
        assert box_nodes(UNIT_SQUARE, 200, threads=t) == box_nodes(UNIT_SQUARE, 200)


def test_budget():
    with pytest.raises(BudgetExceeded):
        box_counting(UNIT_CUBE, 400, budget=1000)
    assert box_counting(UNIT_CUBE, 10, budget=1000) == naive_count(UNIT_CUBE, 10)


def test_bad_domains():
    with pytest.raises(DomainError):
        BoxDomain([1, 0])
    with pytest.raises(DomainError):
        BoxDomain([])
    with pytest.raises(DomainError):
        box_counting(UNIT_SQUARE, 0)


def test_nodes_are_cumulative():
    nodes = box_nodes(UNIT_SQUARE, 20)
    assert nodes[:4] == [(2, 1), (5, 3), (8, 4), (10, 6)]
    for q, count in nodes:
        assert count == box_counting(UNIT_SQUARE, q)


@pytest.mark.parametrize("box, q_max", [
    (UNIT_SQUARE, 100), (UNIT_INTERVAL, 10 ** 4), (UNIT_CUBE, 50), (RECT_1x2, 50),
])
def test_polya_holds_on_tiling_boxes(box, q_max):
    assert box_polya_check(box, q_max)


def test_interval_is_the_equality_case():
    # N(pi^2 m^2) = m = w(pi^2 m^2): equality at every node, never strict
    assert not box_polya_check(UNIT_INTERVAL, 100, strict=True)
    for m in range(1, 50):
        assert weyl_exceeds_count(UNIT_INTERVAL, Fraction(m * m), m)
        assert not weyl_exceeds_count(UNIT_INTERVAL, Fraction(m * m), m, strict=True)
        assert not weyl_exceeds_count(UNIT_INTERVAL, Fraction(m * m), m + 1)


@pytest.mark.parametrize("box, q_max", [(UNIT_SQUARE, 200), (UNIT_CUBE, 30), (RECT_1x2, 50)])
def test_strict_polya_on_higher_dimensional_boxes(box, q_max):
    assert box_polya_check(box, q_max, strict=True)


def test_weyl_comparison_against_float():
    # square: w(pi^2 q) = pi q / 4; cube: pi q^{3/2} / 6
    for q, count in box_nodes(UNIT_SQUARE, 300):
        assert weyl_exceeds_count(UNIT_SQUARE, q, count) == (count < math.pi * q / 4)
    for q, count in box_nodes(UNIT_CUBE, 40):
        assert weyl_exceeds_count(UNIT_CUBE, q, count) == (count < math.pi * float(q) ** 1.5 / 6)


def test_polya_detects_violation():
    # more eigenvalues than the Weyl term allows at q = 2 on the unit square
    assert not weyl_exceeds_count(UNIT_SQUARE, Fraction(2), 2)


def test_weyl_decimal():
    assert box_weyl_decimal(UNIT_SQUARE, 4, 6) == "3.141593"
    assert box_weyl_decimal(UNIT_INTERVAL, 49, 3) == "7.000"
    assert box_weyl_decimal(UNIT_CUBE, 9, 5) == f"{math.pi * 27 / 6:.5f}"
