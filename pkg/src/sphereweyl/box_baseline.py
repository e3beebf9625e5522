"""Dirichlet spectrum of rectangular boxes, a tiling baseline for Weyl comparisons.

A box with sides ``a_1..a_n`` has Dirichlet eigenvalues ``pi**2 * q`` with
``q = sum(m_i**2 / a_i**2)`` over all ``m_i >= 1``. Counting reduces to lattice
points in an ellipsoid octant, and the Weyl term at ``pi**2 q`` is

    ball(n) * vol * q**(n/2) / 2**n,

which for n >= 2 carries a power of pi. Those comparisons are decided with a
certified rational enclosure of pi whose precision doubles until the answer
is forced.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .euclidean_geometry import ball_volume
from .exact_numbers import (
    DomainError,
    PrecisionError,
    floor_sqrt_rational,
    pi_enclosure,
    sqrt_decimal_string,
)

__all__ = [
    "BoxDomain",
    "BoxEigenvalue",
    "BudgetExceeded",
    "DEFAULT_BUDGET",
    "box_eigenvalues",
    "box_counting",
    "box_nodes",
    "box_polya_check",
    "weyl_exceeds_count",
    "interval_count",
    "box_weyl_decimal",
]

DEFAULT_BUDGET = 10 ** 8
PI_BITS_START = 128
PI_BITS_CAP = 4096


class BudgetExceeded(RuntimeError):
    """Lattice enumeration would visit more points than allowed."""


@dataclass(frozen=True)
class BoxDomain:
    sides: tuple[Fraction, ...]

    def __init__(self, sides: Sequence):
        sides = tuple(Fraction(a) for a in sides)
        if not sides:
            raise DomainError("a box needs at least one side")
        if any(a <= 0 for a in sides):
            raise DomainError(f"box sides must be positive, got {sides}")
        object.__setattr__(self, "sides", sides)

    @property
    def dim(self) -> int:
        return len(self.sides)

    @property
    def volume(self) -> Fraction:
        return math.prod(self.sides, start=Fraction(1))


class BoxEigenvalue(NamedTuple):
    """Eigenvalue ``pi**2 * value_over_pi_sq`` with mode numbers ``modes``."""

    modes: tuple[int, ...]
    value_over_pi_sq: Fraction


def _mode_bound(side: Fraction, budget_q: Fraction) -> int:
    # largest m with m**2 / side**2 <= budget_q
    if budget_q < 0:
        return 0
    return floor_sqrt_rational(budget_q * side * side)


class _Counter:
    def __init__(self, budget: int):
        self.budget = budget
        self.visited = 0

    def tick(self, n: int = 1) -> None:
        self.visited += n
        if self.visited > self.budget:
            raise BudgetExceeded(f"lattice enumeration exceeded budget of {self.budget} points")


def _walk(inv_sq: Sequence[Fraction], sides: Sequence[Fraction], remaining: Fraction,
          prefix: tuple, out: list | None, counter: _Counter) -> int:
    """Count (and optionally collect) mode tuples for the trailing axes."""
    if not inv_sq:
        counter.tick()
        if out is not None:
            out.append(prefix)
        return 1
    top = _mode_bound(sides[0], remaining)
    if len(inv_sq) == 1 and out is None:
        counter.tick(top)
        return top
    total = 0
    for m in range(1, top + 1):
        total += _walk(inv_sq[1:], sides[1:], remaining - m * m * inv_sq[0], prefix + (m,), out, counter)
    return total


def _outer_partitions(box: BoxDomain, q_max: Fraction) -> list[int]:
    return list(range(1, _mode_bound(box.sides[0], q_max) + 1))


def _enumerate(box: BoxDomain, q_max: Fraction, collect: bool, budget: int, threads: int):
    inv_sq = [1 / (a * a) for a in box.sides]
    counter = _Counter(budget)

    def run(m1: int):
        out = [] if collect else None
        rem = q_max - m1 * m1 * inv_sq[0]
        # each worker gets its own counter; the shared budget is re-checked on merge
        local = _Counter(budget)
        c = _walk(inv_sq[1:], box.sides[1:], rem, (m1,), out, local)
        return c, local.visited, out

    outer = _outer_partitions(box, q_max)
    counter.tick(len(outer))
    if threads > 1 and len(outer) > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            parts = list(pool.map(run, outer))
    else:
        parts = [run(m) for m in outer]
    total = 0
    modes = []
    for c, visited, out in parts:
        counter.tick(visited)
        total += c
        if out:
            modes.extend(out)
    return total, modes


def box_counting(box: BoxDomain, q_max, budget: int = DEFAULT_BUDGET, threads: int = 1) -> int:
    """Number of Dirichlet eigenvalues ``pi**2 q`` with ``q <= q_max``, with multiplicity."""
    q_max = Fraction(q_max)
    if q_max <= 0:
        raise DomainError("q_max must be positive")
    return _enumerate(box, q_max, False, budget, threads)[0]


def box_eigenvalues(box: BoxDomain, q_max, budget: int = DEFAULT_BUDGET, threads: int = 1) -> list[BoxEigenvalue]:
    """All eigenvalues up to ``pi**2 q_max``, sorted by value then modes."""
    q_max = Fraction(q_max)
    if q_max <= 0:
        raise DomainError("q_max must be positive")
    _, modes = _enumerate(box, q_max, True, budget, threads)
    inv_sq = [1 / (a * a) for a in box.sides]
    eigs = [BoxEigenvalue(m, sum((mi * mi * c for mi, c in zip(m, inv_sq)), Fraction(0))) for m in modes]
    eigs.sort(key=lambda e: (e.value_over_pi_sq, e.modes))
    return eigs


def box_nodes(box: BoxDomain, q_max, budget: int = DEFAULT_BUDGET, threads: int = 1) -> list[tuple[Fraction, int]]:
    """Distinct ``q`` up to ``q_max`` paired with ``N(pi**2 q)``."""
    values = [e.value_over_pi_sq for e in box_eigenvalues(box, q_max, budget, threads)]
    nodes = []
    for i, q in enumerate(values):
        if i + 1 == len(values) or values[i + 1] != q:
            nodes.append((q, i + 1))
    return nodes


def weyl_exceeds_count(box: BoxDomain, q: Fraction, count: int, strict: bool = False) -> bool:
    """Decide ``count < w(pi**2 q)`` (or ``<=`` unless ``strict``), certified.

    Squared form: ``count**2`` against ``A**2 * pi**(2p) * q**n`` where
    ``ball(n) = c * pi**p`` and ``A = c * vol / 2**n``.
    """
    n = box.dim
    ball = ball_volume(n).value
    a = ball.coeff * box.volume / 2 ** n
    rhs_rational = a * a * Fraction(q) ** n
    lhs = Fraction(count) ** 2
    power = 2 * ball.pi_power
    if power == 0:
        return lhs < rhs_rational if strict else lhs <= rhs_rational
    bits = PI_BITS_START
    while bits <= PI_BITS_CAP:
        lo, hi = pi_enclosure(bits)
        rhs_lo, rhs_hi = rhs_rational * lo ** power, rhs_rational * hi ** power
        if lhs < rhs_lo:
            return True
        if lhs > rhs_hi:
            return False
        # lhs inside the enclosure: a rational cannot equal a nonzero rational
        # times a positive power of pi, so more precision must separate them
        bits *= 2
    raise PrecisionError(f"could not separate N={count} from w at q={q} with {PI_BITS_CAP} bits of pi")


def box_polya_check(box: BoxDomain, q_max, strict: bool = False,
                    budget: int = DEFAULT_BUDGET, threads: int = 1) -> bool:
    """True iff ``N <= w`` (``N < w`` when ``strict``) at every eigenvalue node up to ``q_max``.

    Nodes suffice: N is constant between them while w increases. On the unit
    interval ``N(pi**2 m**2) == w(pi**2 m**2) == m``, so only the non-strict
    form can hold there.
    """
    return all(weyl_exceeds_count(box, q, count, strict) for q, count in box_nodes(box, q_max, budget, threads))


def interval_count(q) -> int:
    """Closed form for the unit interval: ``N(pi**2 q) = floor(sqrt(q))``."""
    return floor_sqrt_rational(q)



def box_weyl_decimal(box: BoxDomain, q, digits: int = 6) -> str:
    """``w(pi**2 q)`` rendered with ``digits`` places, correctly rounded.

    Refines the pi enclosure until both ends round to the same string.
    """
    n = box.dim
    ball = ball_volume(n).value
    a = ball.coeff * box.volume / 2 ** n
    w_sq = a * a * Fraction(q) ** n
    power = 2 * ball.pi_power
    if power == 0:
        return sqrt_decimal_string(w_sq, digits)
    bits = PI_BITS_START
    while bits <= PI_BITS_CAP:
        lo, hi = pi_enclosure(bits)
        s_lo = sqrt_decimal_string(w_sq * lo ** power, digits)
        if s_lo == sqrt_decimal_string(w_sq * hi ** power, digits):
            return s_lo
        bits *= 2
    raise PrecisionError(f"could not round w at q={q} to {digits} digits")
