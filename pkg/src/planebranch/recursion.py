"""Closed-form recursion for the minimal generators of the generic value set.

The recursion starts from g_{-1} = p, g_0 = m, g_1 = p + m + 1 and advances

    g_{i+1} = g_i + gamma_i + p_j      for 1 <= i <= N_1 - 1,

where j is the Euclidean level of the index i and gamma_i depends only on
the parities of j and i:

    j odd,  i odd   ->  (B_j - 1) * p        j odd,  i even  ->  p
    j even, i odd   ->  (A_j - 1) * m        j even, i even  ->  m

The trace also carries u_i = g_i + gamma_i and the offsets
c_i = -(gamma_1 + ... + gamma_i).  When n_1 = 0 one extra step beyond
N_1 - 1 is emitted with gamma = (k_0 - 1) * p, solely so that c_n exists
at n = N_1.

The recursion by itself does not know where to stop or which of its
outputs are genuine minimal generators:

* stopping: the underlying algorithm halts at the first index with
  u_i - c_i >= mu.  When k_0 and k_1 both differ from 1 this lands on
  N_1 (if n_1 = 0) or N_1 - 2 (otherwise), which ``stopping_index``
  encodes directly.
* minimality: a step with gamma_i = 0 (possible only when k_0 = 1 or
  k_1 = 1, where B_1 = 1 or A_2 = 1) marks a non-minimal generator.
  ``extreme_case_filter`` removes those and cross-checks the removal
  against the tabulated index-set predictions.

The conductor of the value set is mu + c_n.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import delorme
from .euclid import EuclidData, compute_euclid
from .semigroup import Semigroup


@dataclass
class GenStep:
    """One index of the recursion: gamma_i, the jump r_i = p_j, and the
    running values g_i, u_i = g_i + gamma_i, c_i.  The level and jump are
    None on the n_1 = 0 extension step, which exists only to define c_n."""

    i: int
    level: Optional[int]
    gamma: int
    jump: Optional[int]
    g: int
    u: int
    c: int
    minimal: Optional[bool] = None


@dataclass
class LambdaSummary:
    """Minimal generators and invariants of the generic value set."""

    sg: Semigroup
    euclid: Optional[EuclidData]
    steps: list[GenStep]
    generators: list[int]
    n: int
    cardinality: int
    conductor: int
    tau_gen: Optional[int] = None


def run_recursion(sg: Semigroup, eu: EuclidData) -> list[GenStep]:
    """All steps i = 1..N_1-1, plus the extension step when n_1 = 0."""
    if sg.p < 3:
        raise ValueError("the closed-form recursion needs p >= 3")
    p, m = sg.p, sg.m
    steps: list[GenStep] = []
    g = p + m + 1
    c = 0
    for i in range(1, eu.N(1)):
        j = eu.level_of_index(i)
        if j % 2 == 1:
            gam = (eu.B[j] - 1) * p if i % 2 == 1 else p
        else:
            gam = (eu.A[j] - 1) * m if i % 2 == 1 else m
        u = g + gam
        c -= gam
        steps.append(GenStep(i=i, level=j, gamma=gam, jump=eu.p_seq[j], g=g, u=u, c=c))
        g = u + eu.p_seq[j]
    if eu.n(1) == 0:
        gam = (eu.k_seq[0] - 1) * p
        u = g + gam
        c -= gam
        steps.append(GenStep(i=eu.N(1), level=None, gamma=gam, jump=None, g=g, u=u, c=c))
    return steps


def first_stop(sg: Semigroup, steps: list[GenStep]) -> int:
    """Index of the last generator: the first i with u_i - c_i >= mu.

    The i = 0 collision u_0 = p + m with c_0 = 0 is checked first, so tiny
    pairs whose value set is the semigroup itself stop at n = 0.
    """
    mu = sg.mu
    if sg.p + sg.m >= mu:
        return 0
    for st in steps:
        if st.u - st.c >= mu:
            return st.i
    raise AssertionError(f"recursion trace for ({sg.p},{sg.m}) never stopped")


def stopping_index(eu: EuclidData) -> int:
    """Last-generator index when k_0 != 1 and k_1 != 1: N_1 if n_1 = 0,
    else N_1 - 2."""
    if eu.k_seq[0] == 1 or eu.k_seq[1] == 1:
        raise ValueError("use extreme_case_filter when k_0 = 1 or k_1 = 1")
    return eu.N(1) if eu.n(1) == 0 else eu.N(1) - 2


def table1_prediction(eu: EuclidData) -> tuple[int, set[int]]:
    """Closed-form (cardinality, non-minimal index set) for the extreme cases.

    One case per configuration of (k_0, k_1) and the relevant parity or
    emptiness split.  An index set is empty whenever its upper bound falls
    below its lower bound, and floors of negative arguments are
    mathematical floors.  These predictions exist independently of the
    step trace, which is exactly what makes them a useful cross-check of
    the zero-gamma rule in extreme_case_filter.
    """
    k0, k1 = eu.k_seq[0], eu.k_seq[1]
    N1 = eu.N(1)
    if k0 == 1 and k1 > 1:
        n1 = eu.n(1)
        if eu.N(2) % 2 == 0:
            card = N1 - (n1 - 1) // 2
            nonmin = {eu.N(2) + 2 * j - 1 for j in range(1, (n1 - 2) // 2 + 1)}
        else:
            card = N1 - n1 // 2
            nonmin = {eu.N(2) + 2 * j for j in range(0, (n1 - 3) // 2 + 1)}
    elif k0 == 1 and k1 == 1:
        n2, N3 = eu.n(2), eu.N(3)
        if eu.n(3) == 0:
            card = N1 - (n2 - 1) // 2
            nonmin = {N3 + 2 * j - 1 for j in range(1, (n2 - 1) // 2 + 1)}
        else:
            card = N1 - n2 // 2
            nonmin = {N3 + 2 * j for j in range(0, (n2 - 2) // 2 + 1)}
    elif k0 > 1 and k1 == 1:
        n2, N3 = eu.n(2), eu.N(3)
        if eu.n(1) == 0:
            # n_1 = 0 shifts every zero-gamma step onto the level-2 block;
            # (3,8), (5,14), (7,18) witness the bounds
            if N3 % 2 == 0:
                nonmin = {N3 + 2 * j - 1 for j in range(1, n2 // 2 + 1)}
            else:
                nonmin = {N3 + 2 * j for j in range(0, (n2 - 1) // 2 + 1)}
            card = N1 + 2 - len(nonmin)
        else:
            card = N1 - n2 // 2
            if N3 % 2 == 0:
                nonmin = {N3 + 2 * j - 1 for j in range(1, (n2 - 1) // 2 + 1)}
            else:
                nonmin = {N3 + 2 * j for j in range(0, (n2 - 2) // 2 + 1)}
    else:
        raise ValueError("table applies only when k_0 = 1 or k_1 = 1")
    return card, {i for i in nonmin if i >= 1}


def extreme_case_filter(
    sg: Semigroup, eu: EuclidData, steps: list[GenStep]
) -> tuple[set[int], int, int]:
    """Non-minimal indices, cardinality and last index when k_0 or k_1 is 1.

    The authoritative rule is that a generator is non-minimal exactly when
    its gamma_i vanishes; the stopping index comes from the first
    u_i - c_i >= mu.  The tabulated prediction must agree, and a mismatch
    raises, since it would mean the two redundant descriptions of the
    extreme cases have diverged.
    """
    if eu.k_seq[0] != 1 and eu.k_seq[1] != 1:
        raise ValueError("not an extreme case; use stopping_index")
    n = first_stop(sg, steps)
    nonmin = {st.i for st in steps if st.i <= n and st.gamma == 0}
    card = n + 2 - len(nonmin)
    predicted = table1_prediction(eu)
    if predicted != (card, nonmin):
        raise AssertionError(
            f"extreme-case bookkeeping diverged for ({sg.p},{sg.m}): "
            f"gamma rule gives {(card, nonmin)}, table gives {predicted}"
        )
    if nonmin and n != max(nonmin) + 1:
        raise AssertionError(f"stop index {n} does not trail {max(nonmin)}")
    return nonmin, card, n


def conductor_lambda(
    steps: list[GenStep], n: int, sg: Semigroup, eu: Optional[EuclidData] = None
) -> int:
    """Conductor of the value set, mu + c_n with c_n = -(sum of gamma_i).

    Away from the extreme cases the identity g_n - c_n = pm - m pins the
    same value as g_n - (p - 1), which is asserted when eu is supplied.
    """
    c_n = 0
    g_n = sg.m
    for st in steps:
        if st.i <= n:
            c_n = st.c
            g_n = st.g
    result = sg.mu + c_n
    if eu is not None and eu.k_seq[0] != 1 and eu.k_seq[1] != 1 and n >= 1:
        assert g_n - c_n == sg.pm - sg.m, f"conductor identity failed for ({sg.p},{sg.m})"
        assert result == g_n - (sg.p - 1)
    return result


def summarize(sg: Semigroup) -> LambdaSummary:
    """Minimal generators, cardinality, stop index and conductor for sg.

    p = 2 bypasses the recursion entirely (the value set is the punctured
    semigroup, computed through the oracle); otherwise the closed form is
    used and the Euclidean data is attached to the summary.
    """
    if sg.p == 2:
        trace = delorme.run_accelerated(sg)
        return LambdaSummary(
            sg=sg,
            euclid=None,
            steps=[],
            generators=list(trace.generators),
            n=trace.n,
            cardinality=len(trace.generators),
            conductor=trace.conductor,
        )
    eu = compute_euclid(sg)
    steps = run_recursion(sg, eu)
    if eu.k_seq[0] == 1 or eu.k_seq[1] == 1:
        nonmin, card, n = extreme_case_filter(sg, eu, steps)
    else:
        nonmin, n = set(), stopping_index(eu)
        scan = first_stop(sg, steps)
        if scan != n:
            raise AssertionError(
                f"stop scan {scan} disagrees with closed form {n} for ({sg.p},{sg.m})"
            )
        card = eu.N(1) + 2 if eu.n(1) == 0 else eu.N(1)
    for st in steps:
        st.minimal = st.i <= n and st.gamma != 0
    generators = [sg.p, sg.m] + [st.g for st in steps if st.minimal]
    if len(generators) != card:
        raise AssertionError(f"cardinality bookkeeping broke for ({sg.p},{sg.m})")
    cond = conductor_lambda(steps, n, sg, eu)
    return LambdaSummary(
        sg=sg,
        euclid=eu,
        steps=steps,
        generators=generators,
        n=n,
        cardinality=card,
        conductor=cond,
    )
