"""Delorme's algorithm for the generic value set of a plane branch.

Ground truth for everything else in this package.  Starting from the
semigroup generators g_{-1} = p and g_0 = m, the algorithm grows the sets

    E_i = union of (Gamma + g_j) for j <= i,

finding at each step the collision u_i = min((Gamma + g_i) cap E_{i-1})
and the next generator g_{i+1} = min((N + u_i) \\ E_i), until no integer
above u_n escapes E_n.  The g_i are then the minimal generators of the
generic value set Lambda_gen = E_n.

Two implementations are provided.  ``run_naive`` materializes every E_i as
a boolean table over [0, H) and takes the minima by direct scans.
``run_accelerated`` replaces E_i by the translate Gamma + c_i, where the
offsets satisfy c_0 = 0 and c_{i+1} = c_i + g_{i+1} - u_{i+1}; this turns
each step into two membership scans and stops when u_i - c_i >= mu.  Both
must produce identical traces, which the test suite checks exhaustively.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from . import kernels
from .semigroup import Semigroup

# Guard for the table allocations; H = pm + m + p must stay below this.
MAX_HORIZON = 1 << 27


def horizon(sg: Semigroup) -> int:
    """Table size H = pm + m + p.

    Every generator and collision lies below pm (the offsets are
    nonpositive and u_n - c_n < pm), and membership probes reach at most
    one p- or m-step past that; the assertions in the runs guard the bound.
    """
    return sg.pm + sg.m + sg.p


@dataclass
class OracleTrace:
    """Full record of one run: generators g_{-1}..g_n, collisions u_0..u_n,
    offsets c_0..c_n, and the value set over [0, horizon)."""

    sg: Semigroup
    generators: list[int]
    collisions: list[int]
    offsets: list[int]
    horizon: int
    conductor: int
    kernel: Any = field(repr=False)
    lambda_table: Any = field(repr=False)
    gamma_table: Any = field(repr=False)
    snapshots: list[Any] | None = field(default=None, repr=False)

    @property
    def n(self) -> int:
        """Index of the last generator."""
        return len(self.generators) - 2

    def lambda_contains(self, x: int) -> bool:
        return bool(self.kernel.get(self.lambda_table, x))

    def lambda_bytes01(self) -> bytes:
        """The value set as one byte per integer in [0, horizon)."""
        return self.kernel.to_bytes01(self.lambda_table)

    def gamma_bytes01(self) -> bytes:
        return self.kernel.to_bytes01(self.gamma_table)


def _gamma_table(sg: Semigroup, kern, H: int):
    if H > MAX_HORIZON:
        raise ValueError(
            f"oracle horizon {H} exceeds {MAX_HORIZON}; "
            "this pair is out of oracle range"
        )
    return kern.semigroup_table(sg.p, sg.m, H)


def _offsets(generators: list[int], collisions: list[int]) -> list[int]:
    # c_0 = 0, c_{i+1} = c_i + g_{i+1} - u_{i+1}
    cs = [0]
    for i in range(1, len(generators) - 1):
        cs.append(cs[-1] + generators[i + 1] - collisions[i])
    return cs


def run_naive(sg: Semigroup, kernel=None, keep_sets: bool = False) -> OracleTrace:
    """Literal set-based run over boolean tables.

    With keep_sets=True the E_i snapshots (i = 0..n) are retained so the
    acceleration window identity can be checked against them.
    """
    kern = kernel if kernel is not None else kernels.active
    H = horizon(sg)
    gamma = _gamma_table(sg, kern, H)

    e_prev = kern.make(H)
    kern.or_shift(e_prev, gamma, sg.p)  # E_{-1} = Gamma + p
    generators = [sg.p]
    collisions: list[int] = []
    snapshots: list[Any] | None = [] if keep_sets else None

    g = sg.m
    while True:
        e_cur = kern.copy(e_prev)
        kern.or_shift(e_cur, gamma, g)  # E_i = E_{i-1} | (Gamma + g_i)
        generators.append(g)
        if snapshots is not None:
            snapshots.append(e_cur)
        u = kern.min_common_shift(e_prev, gamma, g)
        assert u >= 0, f"collision scan hit the horizon for ({sg.p},{sg.m})"
        collisions.append(u)
        nxt = kern.first_clear(e_cur, u)
        if nxt < 0:
            lam = e_cur
            break
        g = nxt
        e_prev = e_cur

    cond = kern.last_clear(lam) + 1
    assert cond <= sg.mu, "conductor scan escaped the table"
    return OracleTrace(
        sg=sg,
        generators=generators,
        collisions=collisions,
        offsets=_offsets(generators, collisions),
        horizon=H,
        conductor=cond,
        kernel=kern,
        lambda_table=lam,
        gamma_table=gamma,
        snapshots=snapshots,
    )


def run_accelerated(sg: Semigroup, kernel=None) -> OracleTrace:
    """Offset-based run; same trace as run_naive without materializing E_i.

    For each step the collision increment is the least gamma in Gamma with
    g_i + gamma - c_{i-1} in Gamma, i.e. the least element of
    Gamma cap (Gamma - d) for d = g_i - c_{i-1}, and the jump to the next
    generator is the least r > 0 with u_i - c_i + r outside Gamma.  The run
    stops as soon as u_i - c_i >= mu.  The value set is reconstructed at
    the end by closing the generators under the semigroup action.
    """
    kern = kernel if kernel is not None else kernels.active
    H = horizon(sg)
    gamma = _gamma_table(sg, kern, H)
    mu = sg.mu

    generators = [sg.p, sg.m]
    collisions = [sg.p + sg.m]  # u_0, minimal in (Gamma+p) cap (Gamma+m)
    offsets = [0]
    u, c = collisions[0], 0
    while u - c < mu:
        w = u - c  # in Gamma, and < mu, so a later non-member exists
        nxt = kern.first_clear(gamma, w + 1)
        assert nxt > 0, f"jump scan hit the horizon for ({sg.p},{sg.m})"
        g = u + (nxt - w)
        d = g - c
        x = kern.min_common_shift(gamma, gamma, d)
        assert x >= 0, f"collision scan hit the horizon for ({sg.p},{sg.m})"
        gam = x - d
        u = g + gam
        c = c - gam
        generators.append(g)
        collisions.append(u)
        offsets.append(c)

    lam = kern.make(H)
    for g in generators:
        kern.or_shift(lam, gamma, g)
    cond = kern.last_clear(lam) + 1
    return OracleTrace(
        sg=sg,
        generators=generators,
        collisions=collisions,
        offsets=offsets,
        horizon=H,
        conductor=cond,
        kernel=kern,
        lambda_table=lam,
        gamma_table=gamma,
        snapshots=None,
    )


def gamma_window_check(sg: Semigroup, trace: OracleTrace, i: int) -> bool:
    """Does E_i agree with Gamma + c_i from the window point on?

    The window point is u_i + mu - pm.  Valid for 0 < i < n on a trace from
    run_naive(keep_sets=True); endpoint behavior is deliberately untested.
    """
    if not 0 < i < trace.n:
        raise ValueError(f"window index {i} outside (0, {trace.n})")
    if trace.snapshots is None:
        raise ValueError("trace has no E_i snapshots; rerun with keep_sets=True")
    H = trace.horizon
    e01 = trace.kernel.to_bytes01(trace.snapshots[i])
    g01 = trace.kernel.to_bytes01(trace.gamma_table)
    off = -trace.offsets[i]  # c_i <= 0
    start = max(trace.collisions[i] + sg.mu - sg.pm, 0)
    # entries past H - off translate above the horizon, where membership
    # is certain (those values exceed mu)
    head = max(H - off, start)
    return e01[start:head] == g01[start + off : head + off] and all(
        e01[head:H]
    )
