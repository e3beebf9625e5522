"""Weyl function of S^n and exact comparisons against the counting function.

On the unit sphere the Weyl term is ``w(x) = (2/n!) x**(n/2)``. Every
comparison between ``w`` and ``N`` is decided on integers: the common factor
``2/n!`` is cleared and both sides are squared, which removes the half-integer
power for odd ``n``. Floats only appear in :func:`weyl_value` and
:func:`two_term_weyl`, which exist for reporting.
"""

from __future__ import annotations

import math
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Callable, Iterable, Optional, TypeVar

from .euclidean_geometry import ball_volume, sphere_volume
from .exact_numbers import ConsistencyError, DomainError, PiPowerRational
from .sphere_spectrum import check_dim, counting_closed_form, node_product

__all__ = [
    "ComparisonSign",
    "CrossingRecord",
    "RegimeReport",
    "weyl_coefficient",
    "weyl_squared",
    "weyl_value",
    "compare_w_vs_N_at_node",
    "compare_N_vs_w_next_node",
    "compare_w_to_level",
    "crossing_in_interval",
    "verify_crossing",
    "paper_bound",
    "regime_report",
    "crossing_count",
    "two_term_coefficient",
    "two_term_weyl",
]

T = TypeVar("T")


class ComparisonSign(IntEnum):
    """Sign of ``lhs - rhs`` from an exact comparison."""

    BELOW = -1
    EQUAL = 0
    ABOVE = 1


def _sign(a: int, b: int) -> ComparisonSign:
    return ComparisonSign((a > b) - (a < b))


def parallel_map(fn: Callable[[int], T], items: Iterable[int], threads: int = 1) -> list[T]:
    """Ordered map; the result never depends on ``threads``."""
    items = list(items)
    if threads <= 1 or len(items) < 2:
        return [fn(i) for i in items]
    chunk = max(1, len(items) // (4 * threads))
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def weyl_coefficient(n: int) -> Fraction:
    """``2/n!``: the Weyl function of S^n is this times ``x**(n/2)``."""
    check_dim(n)
    return Fraction(2, math.factorial(n))


def weyl_squared(n: int, x) -> Fraction:
    """``w(x)**2 = 4 x**n / (n!)**2``, exact for rational ``x >= 0``."""
    check_dim(n)
    x = Fraction(x)
    if x < 0:
        raise DomainError(f"Weyl function needs x >= 0, got {x}")
    return Fraction(4, math.factorial(n) ** 2) * x ** n


def weyl_value(n: int, x) -> float:
    check_dim(n)
    return 2.0 / math.factorial(n) * float(x) ** (n / 2)


def compare_w_vs_N_at_node(n: int, k: int) -> ComparisonSign:
    """Sign of ``w(v_k) - N(v_k)``.

    Equivalent integer test: ``4 * v_k**n`` against ``(n! N(v_k))**2``.
    """
    check_dim(n)
    v = k * (k + n - 1)
    return _sign(4 * v ** n, node_product(n, k) ** 2)


def compare_N_vs_w_next_node(n: int, k: int) -> ComparisonSign:
    """Sign of ``N(v_k) - w(v_{k+1})``, i.e. whether N stays above w across the gap."""
    check_dim(n)
    v_next = (k + 1) * (k + n)
    return _sign(node_product(n, k) ** 2, 4 * v_next ** n)


def compare_w_to_level(n: int, x, level: int) -> ComparisonSign:
    """Sign of ``w(x) - level`` for rational ``x >= 0`` and integer ``level >= 0``."""
    x = Fraction(x)
    p, q = x.numerator, x.denominator
    return _sign(4 * p ** n, (math.factorial(n) * level) ** 2 * q ** n)


@dataclass(frozen=True)
class CrossingRecord:
    """Certified location of the point where ``w`` reaches the level ``N(v_k)``.

    The crossing point ``x*`` satisfies ``w(x*) = level`` and lies in
    ``[enclosure_lo, enclosure_hi]``, strictly inside ``(lower, upper)``.
    """

    k: int
    lower: int
    upper: int
    level: int
    enclosure_lo: Fraction
    enclosure_hi: Fraction

    @property
    def width(self) -> Fraction:
        return self.enclosure_hi - self.enclosure_lo

    @property
    def midpoint(self) -> Fraction:
        return (self.enclosure_lo + self.enclosure_hi) / 2


def crossing_in_interval(n: int, k: int, tol=Fraction(1, 100)) -> Optional[CrossingRecord]:
    """Enclose the crossing of ``w`` with the step ``N(v_k)`` on ``(v_k, v_{k+1})``.

    Returns None when there is no crossing there, which happens exactly when
    ``N(v_k) >= w(v_{k+1})``. Bisection at dyadic points, each step decided by
    :func:`compare_w_to_level`.
    """
    check_dim(n)
    if k < 0:
        raise DomainError(f"k must be non-negative, got {k}")
    tol = Fraction(tol)
    if tol <= 0:
        raise DomainError("tolerance must be positive")
    at_node = compare_w_vs_N_at_node(n, k)
    next_node = compare_N_vs_w_next_node(n, k)
    if at_node == ComparisonSign.EQUAL or next_node == ComparisonSign.EQUAL:
        warnings.warn(f"exact equality between N and w near node k={k} on S^{n}", RuntimeWarning)
    if at_node != ComparisonSign.BELOW or next_node != ComparisonSign.BELOW:
        return None

    lower = k * (k + n - 1)
    upper = (k + 1) * (k + n)
    level = counting_closed_form(n, k)
    lo, hi = Fraction(lower), Fraction(upper)
    # endpoints must also leave the nodes so the enclosure is strictly inside
    while hi - lo > tol or lo == lower or hi == upper:
        mid = (lo + hi) / 2
        s = compare_w_to_level(n, mid, level)
        if s == ComparisonSign.BELOW:
            lo = mid
        elif s == ComparisonSign.ABOVE:
            hi = mid
        else:
            lo = hi = mid
            break
    return CrossingRecord(k, lower, upper, level, lo, hi)


def verify_crossing(n: int, rec: CrossingRecord, tol=None) -> bool:
    """Re-check a record's invariants with plain Fraction arithmetic."""
    if not rec.lower < rec.enclosure_lo <= rec.enclosure_hi < rec.upper:
        return False
    if rec.lower != rec.k * (rec.k + n - 1) or rec.upper != (rec.k + 1) * (rec.k + n):
        return False
    level_sq = Fraction(rec.level) ** 2
    if not weyl_squared(n, rec.enclosure_lo) <= level_sq <= weyl_squared(n, rec.enclosure_hi):
        return False
    return tol is None or rec.width <= Fraction(tol)


def paper_bound(n: int) -> int:
    """Smallest ``k >= 0`` with ``k > n**2/4 - n``; from there on N(v_k) < w(v_{k+1})."""
    check_dim(n)
    return max(0, (n * n - 4 * n) // 4 + 1)


@dataclass(frozen=True)
class RegimeReport:
    """Where N stays at or above w across a whole eigenvalue gap.

    ``exceptional_set`` holds every scanned k with ``N(v_k) >= w(v_{k+1})``;
    ``stable_threshold`` is the least K with no exceptional k in
    ``[K, scan_limit]``.
    """

    dim: int
    scan_limit: int
    exceptional_set: tuple[int, ...]
    stable_threshold: int
    paper_bound: int

    def to_dict(self) -> dict:
        return {
            "dim": self.dim,
            "scan_limit": self.scan_limit,
            "exceptional_set": list(self.exceptional_set),
            "stable_threshold": self.stable_threshold,
            "paper_bound": self.paper_bound,
        }


def regime_report(n: int, scan_limit: int, threads: int = 1) -> RegimeReport:
    check_dim(n)
    bound = paper_bound(n)
    if scan_limit < bound:
        raise DomainError(f"scan_limit {scan_limit} is below the guaranteed bound {bound} for S^{n}")
    signs = parallel_map(lambda k: compare_N_vs_w_next_node(n, k), range(scan_limit + 1), threads)
    exceptional = tuple(k for k, s in enumerate(signs) if s != ComparisonSign.BELOW)
    threshold = exceptional[-1] + 1 if exceptional else 0
    if threshold > bound:
        raise ConsistencyError(f"exceptional k={exceptional[-1]} above the proven bound {bound} on S^{n}")
    return RegimeReport(n, scan_limit, exceptional, threshold, bound)


def crossing_count(n: int, k_max: int, tol=Fraction(1, 10), threads: int = 1) -> tuple[int, list[CrossingRecord]]:
    """Number of gaps ``(v_k, v_{k+1})``, ``k <= k_max``, in which w crosses N."""
    check_dim(n)
    if k_max < 0:
        raise DomainError("k_max must be non-negative")
    found = parallel_map(lambda k: crossing_in_interval(n, k, tol), range(k_max + 1), threads)
    bound = paper_bound(n)
    for k, rec in enumerate(found):
        if rec is None and k >= bound:
            raise ConsistencyError(f"no crossing in gap k={k} on S^{n} despite k >= {bound}")
    records = [rec for rec in found if rec is not None]
    return len(records), records


def two_term_coefficient(n: int) -> Fraction:
    """Coefficient of ``x**(n/2 - 1)`` in the two-term Weyl expansion of S^n.

    ``ball(n-2) / (6 (2 pi)**(n-1)) * total_curvature`` with the scalar
    curvature ``n(n-1)`` integrated over the sphere. The pi powers cancel
    symbolically and the result is rational.
    """
    check_dim(n)
    if n < 2:
        raise DomainError("two-term expansion needs n >= 2")
    total_curvature = sphere_volume(n).value * (n * (n - 1))
    denom = PiPowerRational(6 * 2 ** (n - 1), n - 1)
    return (ball_volume(n - 2).value * total_curvature / denom).as_fraction()


def two_term_weyl(n: int, x) -> float:
    """``w(x) + c2 * x**(n/2 - 1)`` as a float."""
    c2 = two_term_coefficient(n)
    if x < 0:
        raise DomainError(f"x must be non-negative, got {x}")
    return weyl_value(n, x) + float(c2) * float(x) ** (n / 2 - 1)
