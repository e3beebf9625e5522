"""Symbolic volumes of the Euclidean unit ball and the unit sphere.

``ball_volume(n)`` is the n-volume of the unit ball in R^n and
``sphere_volume(n)`` the n-volume of the unit sphere S^n in R^(n+1). They
are generated together from

    ball(0) = 1,    sphere(0) = 2,
    ball(n) = sphere(n-1) / n,    sphere(n) = 2*pi * ball(n-1),

so that ``ball(n) * sphere(n) = (2*pi/n) * ball(n-1) * sphere(n-1)``.
"""

from __future__ import annotations

import math
import threading
from fractions import Fraction
from typing import NamedTuple

from .exact_numbers import DomainError, PiPowerRational

__all__ = [
    "BallVolume",
    "SphereVolume",
    "ball_volume",
    "sphere_volume",
    "product_identity_check",
    "induction_step_check",
]

_TWO_PI = PiPowerRational(2, 1)

_lock = threading.Lock()
_balls: list[PiPowerRational] = [PiPowerRational(1)]
_spheres: list[PiPowerRational] = [PiPowerRational(2)]


class BallVolume(NamedTuple):
    n: int
    value: PiPowerRational


class SphereVolume(NamedTuple):
    n: int
    value: PiPowerRational


def _extend(n: int) -> None:
    with _lock:
        while len(_balls) <= n:
            m = len(_balls)
            ball = _spheres[m - 1] / m
            sphere = _TWO_PI * _balls[m - 1]
            # publish sphere before ball: readers check len(_balls) only
            _spheres.append(sphere)
            _balls.append(ball)


def _check(n: int) -> None:
    if n < 0:
        raise DomainError(f"dimension must be non-negative, got {n}")
    if n >= len(_balls):
        _extend(n)


def ball_volume(n: int) -> BallVolume:
    _check(n)
    return BallVolume(n, _balls[n])


def sphere_volume(n: int) -> SphereVolume:
    _check(n)
    return SphereVolume(n, _spheres[n])


def product_identity_check(n: int) -> bool:
    """True iff ball(n) * sphere(n) equals ``2**(n+1)/n! * pi**n`` symbolically."""
    lhs = ball_volume(n).value * sphere_volume(n).value
    return lhs == PiPowerRational(Fraction(2 ** (n + 1), math.factorial(n)), n)


def induction_step_check(n: int) -> bool:
    """True iff ``ball(n)*sphere(n) == (2*pi/n) * ball(n-1)*sphere(n-1)``, n >= 1."""
    if n < 1:
        raise DomainError("induction step needs n >= 1")
    lhs = ball_volume(n).value * sphere_volume(n).value
    rhs = _TWO_PI / n * ball_volume(n - 1).value * sphere_volume(n - 1).value
    return lhs == rhs
