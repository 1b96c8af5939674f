"""Euclidean-algorithm data that drives the generator recursion.

Running the Euclidean algorithm on (m, p) until the remainder hits 1 gives
the level s, divisors p_0 > p_1 > ... > p_s = 1 (with sentinel p_{s+1} = 0)
and quotients k_0, ..., k_s where k_s = p_{s-1} by convention.  From the
quotients come the convergents A_i, B_i satisfying

    A_{i+1} = A_{i-1} + k_i * A_i,   B_{i+1} = B_{i-1} + k_i * B_i,
    p_i = (-1)^i * B_i * p + (-1)^(i-1) * A_i * m,

extended by A_{s+1} = p and B_{s+1} = m.  On top of these sit the step
counts n_l and their tails N_l = n_l + ... + n_s: descending from
n_s = k_s, a level contributes nothing (n_l = 0) exactly when the tail
above it is even and nonempty at l+1, otherwise it contributes k_l steps.
Index i of the recursion belongs to level j when N_{j+1} <= i <= N_j - 1.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .semigroup import Semigroup


@dataclass(frozen=True)
class EuclidData:
    """Divisors, quotients, convergents and step counts for one pair (p, m).

    Sequences are stored with their sentinels so formulas never special-case
    the boundary: p_seq runs to p_{s+1} = 0 and A/B run to A_{s+1} = p,
    B_{s+1} = m.  The step counts are paper-indexed through the accessors
    n(l) and N(l); n_seq holds n_1..n_s and N_seq holds N_1..N_{s+1}.
    """

    p: int
    m: int
    s: int
    p_seq: tuple[int, ...]
    k_seq: tuple[int, ...]
    A: tuple[int, ...]
    B: tuple[int, ...]
    n_seq: tuple[int, ...]
    N_seq: tuple[int, ...]
    _level_table: tuple[int, ...] = field(repr=False)

    def n(self, l: int) -> int:
        """Step count n_l for 1 <= l <= s+1 (the sentinel n_{s+1} is 0)."""
        if not 1 <= l <= self.s + 1:
            raise ValueError(f"level {l} outside [1, {self.s + 1}]")
        return 0 if l == self.s + 1 else self.n_seq[l - 1]

    def N(self, l: int) -> int:
        """Tail sum N_l = n_l + ... + n_s for 1 <= l <= s+1."""
        if not 1 <= l <= self.s + 1:
            raise ValueError(f"level {l} outside [1, {self.s + 1}]")
        return self.N_seq[l - 1]

    def level_of_index(self, i: int) -> int:
        """The unique level j with N_{j+1} <= i <= N_j - 1.

        Defined for 1 <= i <= N_1 - 1; levels with n_j = 0 have empty index
        ranges and are never returned.
        """
        if not 1 <= i <= self.N(1) - 1:
            raise ValueError(f"index {i} outside [1, {self.N(1) - 1}]")
        return self._level_table[i]


def compute_euclid(sg: Semigroup) -> EuclidData:
    """All Euclidean data for sg.  Requires p >= 3.

    The p = 2 case has no level structure to speak of and is handled by the
    oracle bypass in the recursion module.
    """
    p, m = sg.p, sg.m
    if p < 3:
        raise ValueError("Euclidean data needs p >= 3")

    k_seq: list[int] = []
    p_seq: list[int] = [p]
    a, b = m, p
    while True:
        k, r = divmod(a, b)
        k_seq.append(k)
        p_seq.append(r)
        a, b = b, r
        if r == 1:
            break
        if r == 0:  # unreachable for coprime input, kept as a guard
            raise ValueError(f"gcd({p}, {m}) != 1")
    s = len(p_seq) - 1
    k_seq.append(p_seq[s - 1])  # k_s = p_{s-1}
    p_seq.append(0)             # p_{s+1} = 0

    A = [0, 1]
    B = [1, k_seq[0]]
    for i in range(1, s + 1):
        A.append(A[i - 1] + k_seq[i] * A[i])
        B.append(B[i - 1] + k_seq[i] * B[i])
    if A[s + 1] != p or B[s + 1] != m:
        raise AssertionError(f"convergent extension failed for ({p}, {m})")

    n = [0] * (s + 2)  # n[l] for l = 1..s, sentinel at s+1
    N = [0] * (s + 2)
    n[s] = k_seq[s]
    N[s] = n[s]
    for l in range(s - 1, 0, -1):
        n[l] = 0 if (N[l + 1] % 2 == 0 and n[l + 1] != 0) else k_seq[l]
        N[l] = n[l] + N[l + 1]

    level_table = [0] * max(N[1], 1)
    for j in range(1, s + 1):
        for i in range(max(N[j + 1], 1), N[j]):
            level_table[i] = j

    return EuclidData(
        p=p,
        m=m,
        s=s,
        p_seq=tuple(p_seq),
        k_seq=tuple(k_seq),
        A=tuple(A),
        B=tuple(B),
        n_seq=tuple(n[1 : s + 1]),
        N_seq=tuple(N[1 : s + 2]),
        _level_table=tuple(level_table),
    )
