"""Three independent routes to the generic Tjurina number.

tau counts mu minus the size of (value set minus semigroup).  The routes:

* staircase: write each minimal generator outside the semigroup in standard
  form pm - a*m - b*p.  Sorted by increasing a the b's strictly decrease,
  and the dominated lattice rectangles enumerate the value set off the
  semigroup exactly once, so tau = mu - sum of rectangle areas.
* closed form: mu - floor(m/p)*floor((p-1)^2/4) + floor((p-1)/2)
  + floor(p_1/2) - sum over 1 <= i <= s-1 of k_i * floor(p_i^2 / 4),
  straight from the Euclidean data.
* oracle: count the elements of the computed value set that are not in the
  semigroup and subtract from mu.

All three must agree; the verification sweep enforces that.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .delorme import OracleTrace
from .euclid import EuclidData
from .semigroup import Semigroup


@dataclass(frozen=True)
class Staircase:
    """Standard-form pairs of the non-semigroup generators, sorted by
    increasing first coordinate, and the total dominated area."""

    pairs: tuple[tuple[int, int], ...]
    area: int


def build_staircase(sg: Semigroup, generators: Iterable[int]) -> Staircase:
    pairs = sorted(
        (f.a, f.b)
        for f in (sg.to_standard_form(g) for g in generators if not sg.contains(g))
    )
    area = 0
    prev_a, prev_b = 0, None
    for a, b in pairs:
        if prev_b is not None and b >= prev_b:
            raise AssertionError("staircase second coordinates must decrease")
        area += (a - prev_a) * b
        prev_a, prev_b = a, b
    return Staircase(pairs=tuple(pairs), area=area)


def tau_staircase(sg: Semigroup, generators: Iterable[int]) -> int:
    """Rectangle count under the staircase of minimal generators."""
    return sg.mu - build_staircase(sg, generators).area


def tau_abm(sg: Semigroup, eu: EuclidData) -> int:
    """Floor-function formula over the Euclidean divisors; needs p >= 3."""
    if sg.p < 3:
        raise ValueError("the closed-form tau needs p >= 3")
    p = sg.p
    correction = (
        (sg.m // p) * ((p - 1) ** 2 // 4)
        - (p - 1) // 2
        - eu.p_seq[1] // 2
        + sum(eu.k_seq[i] * (eu.p_seq[i] ** 2 // 4) for i in range(1, eu.s))
    )
    return sg.mu - correction


def tau_oracle(sg: Semigroup, trace: OracleTrace) -> int:
    """Direct count over the oracle's value set."""
    extra = trace.kernel.count_and_not(trace.lambda_table, trace.gamma_table)
    return sg.mu - extra
