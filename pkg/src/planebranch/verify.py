"""Cross-validation of the closed form against the oracle for one pair.

This is the differential-testing core: both oracle variants, the closed
form, the three tau routes and the per-step minimum-term rule all run on
the same pair, and every disagreement is recorded as a human-readable
mismatch line.  A clean pair has ok = True and an empty mismatch list.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from . import delorme, recursion, tjurina
from .semigroup import Semigroup


@dataclass
class PairCheck:
    p: int
    m: int
    summary: recursion.LambdaSummary
    naive: delorme.OracleTrace
    accelerated: delorme.OracleTrace
    tau_staircase: int
    tau_abm: Optional[int]
    tau_oracle: int
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    @property
    def tau(self) -> int:
        return self.tau_staircase


def _check_min_term_rule(sg: Semigroup, summary: recursion.LambdaSummary, out: list[str]):
    # gamma_i must equal min(a*m, b*p) for the standard form of g_i - c_{i-1},
    # or the difference must lie in the semigroup when gamma_i = 0
    c_prev = 0
    for st in summary.steps:
        if st.i <= summary.n:
            d = st.g - c_prev
            if st.gamma == 0:
                if not sg.contains(d):
                    out.append(f"step {st.i}: gamma = 0 but {d} is not a member")
            else:
                f = sg.to_standard_form(d)
                expect = min(f.a * sg.m, f.b * sg.p)
                if st.gamma != expect:
                    out.append(
                        f"step {st.i}: gamma {st.gamma} != min-term rule {expect}"
                    )
        c_prev = st.c


def verify_pair(p: int, m: int, kernel=None) -> PairCheck:
    """Run every implementation on (p, m) and collect disagreements."""
    sg = Semigroup(p, m)
    naive = delorme.run_naive(sg, kernel=kernel)
    accel = delorme.run_accelerated(sg, kernel=kernel)
    summary = recursion.summarize(sg)

    mism: list[str] = []
    if naive.generators != accel.generators:
        mism.append(f"generators: naive {naive.generators} != accelerated {accel.generators}")
    if naive.collisions != accel.collisions:
        mism.append(f"collisions: naive {naive.collisions} != accelerated {accel.collisions}")
    if naive.offsets != accel.offsets:
        mism.append(f"offsets: naive {naive.offsets} != accelerated {accel.offsets}")
    if naive.conductor != accel.conductor:
        mism.append(f"conductor: naive {naive.conductor} != accelerated {accel.conductor}")
    if summary.generators != naive.generators:
        mism.append(
            f"generators: closed form {summary.generators} != oracle {naive.generators}"
        )
    if summary.conductor != naive.conductor:
        mism.append(
            f"conductor: closed form {summary.conductor} != oracle {naive.conductor}"
        )

    t_stair = tjurina.tau_staircase(sg, summary.generators)
    t_oracle = tjurina.tau_oracle(sg, naive)
    t_abm = tjurina.tau_abm(sg, summary.euclid) if summary.euclid is not None else None
    if t_stair != t_oracle:
        mism.append(f"tau: staircase {t_stair} != oracle {t_oracle}")
    if t_abm is not None and t_abm != t_stair:
        mism.append(f"tau: closed form {t_abm} != staircase {t_stair}")

    if sg.p >= 3:
        _check_min_term_rule(sg, summary, mism)

    summary.tau_gen = t_stair
    return PairCheck(
        p=p,
        m=m,
        summary=summary,
        naive=naive,
        accelerated=accel,
        tau_staircase=t_stair,
        tau_abm=t_abm,
        tau_oracle=t_oracle,
        mismatches=mism,
    )
