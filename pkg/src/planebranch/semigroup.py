"""Exact arithmetic for the numerical semigroup generated by two coprime integers.

A coprime pair (p, m) with 2 <= p < m generates the semigroup of all
nonnegative combinations a*p + b*m.  Its complement in the positive
integers is finite: there are exactly mu/2 gaps, where mu = (p-1)*(m-1)
is the conductor (every integer >= mu belongs to the semigroup).  Each
gap g can be written uniquely in the standard form

    g = p*m - a*m - b*p,   0 < a < p,  0 < b < m,

and that representation is the backbone of the staircase counting used
for the Tjurina number.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd
from typing import Iterator

from .kernels import pure as _purebits

MAX_M = 10**6


@dataclass(frozen=True)
class StandardForm:
    """Coefficients (a, b) of the decomposition g = p*m - a*m - b*p."""

    a: int
    b: int


@dataclass(frozen=True)
class Semigroup:
    """The semigroup of nonnegative combinations of p and m, with p < m coprime."""

    p: int
    m: int

    def __post_init__(self):
        if self.m > MAX_M:
            raise ValueError(f"m = {self.m} exceeds the supported bound {MAX_M}")
        if not 2 <= self.p < self.m:
            raise ValueError(f"need 2 <= p < m, got p = {self.p}, m = {self.m}")
        if gcd(self.p, self.m) != 1:
            raise ValueError(f"p = {self.p} and m = {self.m} must be coprime")

    @property
    def pm(self) -> int:
        return self.p * self.m

    @property
    def mu(self) -> int:
        """Conductor: least x such that every integer >= x is a member."""
        return (self.p - 1) * (self.m - 1)

    @cached_property
    def _m_inv(self) -> int:
        return pow(self.m, -1, self.p)

    def contains(self, x: int) -> bool:
        """Membership test in O(1) arithmetic.

        x = a*p + b*m is solvable with a, b >= 0 iff the least b >= 0 with
        b*m congruent to x mod p leaves a nonnegative p-part.
        """
        if x < 0:
            raise ValueError("membership is defined for nonnegative integers")
        b = (x * self._m_inv) % self.p
        return x >= b * self.m

    @cached_property
    def _member_table(self):
        # bitset over [0, mu); cached since gap scans and oracle checks reuse it
        return _purebits.semigroup_table(self.p, self.m, self.mu)

    def gaps(self) -> tuple[int, ...]:
        """All positive non-members, increasing.  Materializes O(mu) state."""
        table01 = _purebits.to_bytes01(self._member_table)
        return tuple(x for x in range(1, self.mu) if not table01[x])

    def to_standard_form(self, g: int) -> StandardForm:
        """The unique (a, b) with g = p*m - a*m - b*p, 0 < a < p, 0 < b < m.

        Defined exactly for gaps; raises ValueError for members or g <= 0
        since no such decomposition exists there.
        """
        if g <= 0 or self.contains(g):
            raise ValueError(f"{g} is not a gap of <{self.p},{self.m}>")
        a = (-g * self._m_inv) % self.p
        b = (self.pm - a * self.m - g) // self.p
        assert 0 < a < self.p and 0 < b < self.m
        return StandardForm(a, b)

    def from_standard_form(self, f: StandardForm) -> int:
        """Value p*m - a*m - b*p; may be nonpositive for out-of-range pairs."""
        return self.pm - f.a * self.m - f.b * self.p

    def elements(self) -> Iterator[int]:
        """Members in increasing order, by merging the +p and +m streams."""
        vals = [0]
        ip = im = 0
        yield 0
        while True:
            cand_p = vals[ip] + self.p
            cand_m = vals[im] + self.m
            v = min(cand_p, cand_m)
            if cand_p == v:
                ip += 1
            if cand_m == v:
                im += 1
            vals.append(v)
            yield v
