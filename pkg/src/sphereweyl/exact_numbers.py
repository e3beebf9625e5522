"""Exact scalars: big integers, rationals and rational multiples of powers of pi.

Integers are plain Python ``int`` and rationals are :class:`fractions.Fraction`;
both are exact at any magnitude and always normalized. This module adds the
few things the standard library does not carry:

* :class:`PiPowerRational`, a symbolic ``c * pi**m``,
* a certified rational enclosure of pi,
* correctly rounded decimal rendering of rationals and their square roots.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

__all__ = [
    "DomainError",
    "ConsistencyError",
    "PrecisionError",
    "PiPowerRational",
    "integer_pow",
    "isqrt_floor",
    "pi_mul",
    "pi_enclosure",
    "floor_sqrt_rational",
    "decimal_string",
    "sqrt_decimal_string",
]

RationalLike = Union[int, Fraction]


class DomainError(ValueError):
    """Argument outside the mathematical domain of an operation."""


class ConsistencyError(RuntimeError):
    """Two exact computations that must agree did not. Always a bug."""


class PrecisionError(ArithmeticError):
    """A certified comparison could not be decided within the precision cap."""


def integer_pow(base: int, exp: int) -> int:
    """Return ``base**exp`` exactly by repeated squaring; ``base**0 == 1``."""
    if exp < 0:
        raise DomainError(f"exponent must be non-negative, got {exp}")
    result = 1
    while exp:
        if exp & 1:
            result *= base
        base *= base
        exp >>= 1
    return result


def isqrt_floor(x: int) -> int:
    """Largest integer ``r`` with ``r*r <= x``."""
    if x < 0:
        raise DomainError(f"isqrt_floor of negative value {x}")
    return math.isqrt(x)


def floor_sqrt_rational(x: RationalLike) -> int:
    """``floor(sqrt(x))`` for a non-negative rational.

    Uses ``floor(sqrt(x)) == isqrt(floor(x))``, valid for all ``x >= 0``.
    """
    x = Fraction(x)
    if x < 0:
        raise DomainError(f"square root of negative value {x}")
    return math.isqrt(x.numerator // x.denominator)


@dataclass(frozen=True)
class PiPowerRational:
    """The real number ``coeff * pi**pi_power`` held symbolically.

    Zero is canonical: a zero coefficient forces ``pi_power == 0``, so two
    values are equal exactly when their fields are equal.
    """

    coeff: Fraction
    pi_power: int = 0

    def __post_init__(self):
        coeff = Fraction(self.coeff)
        if self.pi_power < 0:
            raise DomainError(f"pi power must be non-negative, got {self.pi_power}")
        object.__setattr__(self, "coeff", coeff)
        if coeff == 0:
            object.__setattr__(self, "pi_power", 0)

    def __mul__(self, other):
        if isinstance(other, PiPowerRational):
            return pi_mul(self, other)
        if isinstance(other, (int, Fraction)):
            return PiPowerRational(self.coeff * other, self.pi_power)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return PiPowerRational(self.coeff / Fraction(other), self.pi_power)
        if isinstance(other, PiPowerRational):
            if other.coeff == 0:
                raise ZeroDivisionError("division by symbolic zero")
            if self.coeff == 0:
                return PiPowerRational(0)
            power = self.pi_power - other.pi_power
            if power < 0:
                raise DomainError("quotient would carry a negative power of pi")
            return PiPowerRational(self.coeff / other.coeff, power)
        return NotImplemented

    def __pow__(self, exp: int):
        if exp < 0:
            raise DomainError("negative exponent")
        return PiPowerRational(self.coeff ** exp, self.pi_power * exp)

    def is_rational(self) -> bool:
        return self.pi_power == 0

    def as_fraction(self) -> Fraction:
        """The value as a Fraction; only defined once every pi has cancelled."""
        if self.pi_power != 0:
            raise DomainError(f"{self} is not rational")
        return self.coeff

    def enclosure(self, bits: int = 128) -> tuple[Fraction, Fraction]:
        """Certified rational interval ``[lo, hi]`` containing the value."""
        if self.pi_power == 0:
            return self.coeff, self.coeff
        lo, hi = pi_enclosure(bits)
        a, b = lo ** self.pi_power * self.coeff, hi ** self.pi_power * self.coeff
        return (a, b) if a <= b else (b, a)

    def __float__(self) -> float:
        return float(self.coeff) * math.pi ** self.pi_power

    def __str__(self) -> str:
        if self.pi_power == 0:
            return str(self.coeff)
        if self.pi_power == 1:
            return f"{self.coeff}*pi"
        return f"{self.coeff}*pi^{self.pi_power}"


def pi_mul(a: PiPowerRational, b: PiPowerRational) -> PiPowerRational:
    """Product of two symbolic values: coefficients multiply, powers add."""
    return PiPowerRational(a.coeff * b.coeff, a.pi_power + b.pi_power)


def _arctan_inv_scaled(x: int, scale: int) -> tuple[int, int]:
    # Alternating series for scale*atan(1/x); every term is an exact floor,
    # so the accumulated rounding error is below the number of terms.
    total = 0
    power = scale // x
    x2 = x * x
    i = 0
    while power:
        term = power // (2 * i + 1)
        total = total - term if i & 1 else total + term
        power //= x2
        i += 1
    return total, i


@functools.lru_cache(maxsize=16)
def pi_enclosure(bits: int) -> tuple[Fraction, Fraction]:
    """Rational ``lo < pi < hi`` with ``hi - lo <= 2**-bits``.

    Machin's formula ``pi = 16 atan(1/5) - 4 atan(1/239)`` in fixed point with
    an explicit error bound; no floating point is involved.
    """
    if bits < 1:
        raise DomainError("bits must be positive")
    guard = 8 + bits.bit_length()
    shift = bits + guard
    scale = 1 << shift
    a5, n5 = _arctan_inv_scaled(5, scale)
    a239, n239 = _arctan_inv_scaled(239, scale)
    approx = 16 * a5 - 4 * a239
    # per series: < n terms of floor error plus < 1 unit of truncation
    err = 16 * (n5 + 1) + 4 * (n239 + 1)
    return Fraction(approx - err, scale), Fraction(approx + err, scale)


def _digits_string(scaled: int, digits: int) -> str:
    sign = "-" if scaled < 0 else ""
    s = str(abs(scaled))
    if digits == 0:
        return sign + s
    s = s.rjust(digits + 1, "0")
    return f"{sign}{s[:-digits]}.{s[-digits:]}"


def decimal_string(value: RationalLike, digits: int) -> str:
    """Render a rational with ``digits`` places after the point, round-half-even."""
    if digits < 0:
        raise DomainError("digits must be non-negative")
    # Fraction.__round__ rounds half to even
    return _digits_string(round(Fraction(value) * 10 ** digits), digits)


def sqrt_decimal_string(square: RationalLike, digits: int) -> str:
    """Render ``sqrt(square)`` with ``digits`` places, correctly rounded half-even.

    Exact: the rounding decision compares ``square * 100**digits`` against the
    square of the candidate half-way point.
    """
    if digits < 0:
        raise DomainError("digits must be non-negative")
    r = Fraction(square) * 10 ** (2 * digits)
    f = floor_sqrt_rational(r)
    half_sq = Fraction((2 * f + 1) ** 2, 4)
    if r > half_sq or (r == half_sq and f % 2 == 1):
        f += 1
    return _digits_string(f, digits)
