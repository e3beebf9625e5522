from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sphereweyl.exact_numbers import (
    DomainError,
    PiPowerRational,
    decimal_string,
    floor_sqrt_rational,
    integer_pow,
    isqrt_floor,
    pi_enclosure,
    pi_mul,
    sqrt_decimal_string,
)

big = st.integers(min_value=-(2 ** 512), max_value=2 ** 512)
rationals = st.fractions(max_denominator=10 ** 6).filter(lambda q: abs(q) < 10 ** 6)
pi_values = st.builds(PiPowerRational, rationals, st.integers(min_value=0, max_value=6))


def naive_pow(base, exp):
    result = 1
    for _ in range(exp):
        result *= base
    return result


def test_integer_pow_examples():
    assert integer_pow(0, 0) == 1
    assert integer_pow(3, 4) == 81
    assert integer_pow(10 ** 6, 15) == naive_pow(10 ** 6, 15) == 10 ** 90


@given(st.integers(min_value=-(10 ** 30), max_value=10 ** 30), st.integers(min_value=0, max_value=60))
def test_integer_pow_matches_naive(base, exp):
    assert integer_pow(base, exp) == naive_pow(base, exp)


def test_integer_pow_rejects_negative_exponent():
    with pytest.raises(DomainError):
        integer_pow(2, -1)


def test_isqrt_examples():
    assert isqrt_floor(0) == 0
    assert isqrt_floor(15) == 3
    r = isqrt_floor(10 ** 40 - 1)
    assert r == 10 ** 20 - 1
    assert r * r <= 10 ** 40 - 1 < (r + 1) ** 2
    with pytest.raises(DomainError):
        isqrt_floor(-1)


@given(st.integers(min_value=1, max_value=2 ** 300))
def test_isqrt_at_squares(r):
    assert isqrt_floor(r * r) == r
    assert isqrt_floor(r * r - 1) == r - 1


@given(st.fractions(min_value=0, max_denominator=10 ** 9).filter(lambda q: q < 10 ** 12))
def test_floor_sqrt_rational(q):
    f = floor_sqrt_rational(q)
    assert f * f <= q < (f + 1) ** 2


@given(big, big, big)
def test_distributivity(a, b, c):
    assert (a + b) * c == a * c + b * c


@given(st.fractions())
def test_rational_normalization_idempotent(q):
    again = Fraction(q.numerator, q.denominator)
    assert (again.numerator, again.denominator) == (q.numerator, q.denominator)
    assert q.denominator > 0


def test_pi_mul_examples():
    one = PiPowerRational(1)
    assert pi_mul(one, one) == one
    assert pi_mul(PiPowerRational(2), PiPowerRational(2, 1)) == PiPowerRational(4, 1)
    zero = pi_mul(PiPowerRational(0), PiPowerRational(5, 3))
    assert zero == PiPowerRational(0, 0)
    assert zero.pi_power == 0


def test_canonical_zero():
    assert PiPowerRational(0, 7) == PiPowerRational(0)
    assert PiPowerRational(Fraction(0, 3), 2).pi_power == 0


@given(pi_values, pi_values, pi_values)
def test_pi_mul_associative_commutative(a, b, c):
    assert pi_mul(a, b) == pi_mul(b, a)
    assert pi_mul(pi_mul(a, b), c) == pi_mul(a, pi_mul(b, c))


def test_pi_division():
    assert PiPowerRational(4, 3) / PiPowerRational(2, 1) == PiPowerRational(2, 2)
    with pytest.raises(DomainError):
        PiPowerRational(1, 1) / PiPowerRational(1, 2)
    with pytest.raises(ZeroDivisionError):
        PiPowerRational(1, 1) / PiPowerRational(0)
    with pytest.raises(DomainError):
        PiPowerRational(3, 2).as_fraction()


@pytest.mark.parametrize("bits", [1, 8, 53, 128, 256, 1024, 4096])
def test_pi_enclosure_certified(bits):
    lo, hi = pi_enclosure(bits)
    assert hi - lo <= Fraction(1, 2 ** bits)
    with mpmath.workprec(bits + 200):
        pi = mpmath.pi
        assert mpmath.mpf(lo.numerator) / lo.denominator < pi < mpmath.mpf(hi.numerator) / hi.denominator


def test_value_enclosure():
    lo, hi = PiPowerRational(Fraction(4, 3), 1).enclosure(64)
    with mpmath.workprec(300):
        exact = mpmath.mpf(4) / 3 * mpmath.pi
        assert mpmath.mpf(lo.numerator) / lo.denominator < exact < mpmath.mpf(hi.numerator) / hi.denominator
    assert PiPowerRational(Fraction(2, 7)).enclosure() == (Fraction(2, 7), Fraction(2, 7))


@pytest.mark.parametrize(
    "value, digits, expected",
    [
        (Fraction(1, 8), 2, "0.12"),   # tie to even
        (Fraction(3, 8), 2, "0.38"),   # tie to even
        (Fraction(-1, 3), 3, "-0.333"),
        (Fraction(5), 0, "5"),
        (Fraction(5, 2), 0, "2"),
        (Fraction(1, 1000), 2, "0.00"),
    ],
)
def test_decimal_string(value, digits, expected):
    assert decimal_string(value, digits) == expected


@pytest.mark.parametrize(
    "square, digits, expected",
    [
        (2, 6, "1.414214"),
        (4, 3, "2.000"),
        (Fraction(1, 4), 0, "0"),      # sqrt = 0.5, tie to even
        (Fraction(9, 4), 0, "2"),      # sqrt = 1.5, tie to even
        (Fraction(25, 4), 0, "2"),     # sqrt = 2.5, tie to even
        (0, 4, "0.0000"),
    ],
)
def test_sqrt_decimal_string(square, digits, expected):
    assert sqrt_decimal_string(square, digits) == expected


@settings(max_examples=200)
@given(st.fractions(min_value=0, max_denominator=10 ** 6).filter(lambda q: q < 10 ** 9),
       st.integers(min_value=0, max_value=20))
def test_sqrt_decimal_matches_mpmath(square, digits):
    with mpmath.workdps(80):
        ref = mpmath.sqrt(mpmath.mpf(square.numerator) / square.denominator)
        scaled = ref * mpmath.mpf(10) ** digits
        nearest = int(mpmath.nint(scaled))
        # skip inputs within mpmath's own resolution of a tie
        if abs(abs(scaled - int(mpmath.floor(scaled))) - mpmath.mpf(0.5)) < mpmath.mpf(10) ** -60:
            return
    got = sqrt_decimal_string(square, digits)
    assert int(got.replace(".", "")) == nearest
