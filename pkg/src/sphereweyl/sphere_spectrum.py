"""Laplace spectrum of the round unit sphere S^n.

The distinct eigenvalues are ``v_k = k(k+n-1)``, realized by degree-k
spherical harmonics. Everything here is exact integer arithmetic.

The counting function ``N`` is right-continuous, ``N(x) = #{eigenvalues <= x}``
counted with multiplicity; at the node ``v_k`` it is available three ways
(closed binomial form, product form, running sum of multiplicities) and the
three are kept independent so they can check each other.
"""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from .exact_numbers import ConsistencyError, DomainError, isqrt_floor

__all__ = [
    "SpectrumEntry",
    "check_dim",
    "binomial",
    "distinct_eigenvalue",
    "multiplicity",
    "multiplicity_cases",
    "counting_closed_form",
    "counting_product_form",
    "counting_brute",
    "level_index",
    "counting_at",
    "spectrum",
]


class SpectrumEntry(NamedTuple):
    """One distinct eigenvalue level of S^n."""

    k: int
    eigenvalue: int
    multiplicity: int
    cumulative: int


def check_dim(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise DomainError(f"sphere dimension must be a positive integer, got {n!r}")
    return n


def _check_k(k: int) -> int:
    if k < 0:
        raise DomainError(f"degree index must be non-negative, got {k}")
    return k


def binomial(m: int, j: int) -> int:
    """C(m, j) for m >= 0, with C(m, j) = 0 when j < 0 or j > m.

    Multiplicative formula with running exact division; each partial product
    is itself a binomial coefficient, so the division never truncates.
    """
    if j < 0 or j > m:
        return 0
    j = min(j, m - j)
    result = 1
    for i in range(1, j + 1):
        result = result * (m - j + i) // i
    return result


def distinct_eigenvalue(n: int, k: int) -> int:
    check_dim(n)
    _check_k(k)
    return k * (k + n - 1)


def multiplicity(n: int, k: int) -> int:
    """Dimension of the degree-k spherical harmonics on S^n.

    The single expression ``C(n+k, k) - C(n+k-2, k-2)`` covers k = 0 and
    k = 1 through the convention C(m, j) = 0 for j < 0.
    """
    check_dim(n)
    _check_k(k)
    return binomial(n + k, k) - binomial(n + k - 2, k - 2)


def multiplicity_cases(n: int, k: int) -> int:
    """Same value as :func:`multiplicity`, written with the explicit k = 0, 1 cases."""
    check_dim(n)
    _check_k(k)
    if k == 0:
        return 1
    if k == 1:
        return n + 1
    return binomial(n + k, k) - binomial(n + k - 2, k - 2)


def counting_closed_form(n: int, k: int) -> int:
    """N(v_k) = C(n+k, k) + C(n+k-1, k-1)."""
    check_dim(n)
    _check_k(k)
    return binomial(n + k, k) + binomial(n + k - 1, k - 1)


def node_product(n: int, k: int) -> int:
    """``(2k+n) * (k+1)(k+2)...(k+n-1)``, which equals ``n! * N(v_k)``."""
    p = 2 * k + n
    for j in range(1, n):
        p *= k + j
    return p


def counting_product_form(n: int, k: int) -> int:
    """N(v_k) as ``(2/n!)(k + n/2)(k+n-1)...(k+1)``, evaluated exactly."""
    check_dim(n)
    _check_k(k)
    fact = 1
    for i in range(2, n + 1):
        fact *= i
    value = Fraction(node_product(n, k), fact)
    if value.denominator != 1:
        raise ConsistencyError(f"product form is not an integer for n={n}, k={k}: {value}")
    return value.numerator


def counting_brute(n: int, k: int) -> int:
    """Sum of the case-split multiplicities over degrees 0..k."""
    check_dim(n)
    _check_k(k)
    return sum(multiplicity_cases(n, j) for j in range(k + 1))


def level_index(n: int, x) -> int:
    """Largest k with ``k(k+n-1) <= x``, for real ``x >= 0`` given as int or Fraction.

    Eigenvalues are integers, so only ``floor(x)`` matters. Solving the
    quadratic, ``2k + n - 1 <= isqrt((n-1)**2 + 4x)``.
    """
    check_dim(n)
    if x < 0:
        raise DomainError(f"counting function argument must be non-negative, got {x}")
    xi = x if isinstance(x, int) else int(Fraction(x).__floor__())
    s = isqrt_floor((n - 1) ** 2 + 4 * xi)
    return (s - n + 1) // 2


def counting_at(n: int, x) -> int:
    """N(x) for real ``x >= 0`` (int or Fraction); eigenvalue ``x`` itself is counted."""
    return counting_closed_form(n, level_index(n, x))


def spectrum(n: int, k_max: int) -> list[SpectrumEntry]:
    """Levels k = 0..k_max with their cumulative counts."""
    check_dim(n)
    entries = []
    total = 0
    for k in range(k_max + 1):
        m = multiplicity(n, k)
        total += m
        entries.append(SpectrumEntry(k, k * (k + n - 1), m, total))
    return entries
