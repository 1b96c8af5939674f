from math import gcd

import pytest

from planebranch.delorme import run_naive
from planebranch.euclid import compute_euclid
from planebranch.recursion import summarize
from planebranch.semigroup import Semigroup
from planebranch.tjurina import build_staircase, tau_abm, tau_oracle, tau_staircase


def test_staircase_10_23():
    sg = Semigroup(10, 23)
    G = [10, 23, 34, 81, 105, 118]
    stair = build_staircase(sg, G)
    assert stair.pairs == ((2, 15), (3, 8), (4, 2), (5, 1))
    assert stair.area == 41
    assert tau_staircase(sg, G) == 198 - 41 == 157


def test_staircase_122_281_pairs_and_area():
    sg = Semigroup(122, 281)
    s = summarize(sg)
    stair = build_staircase(sg, s.generators)
    assert stair.pairs == (
        (22, 151), (23, 98), (25, 91), (26, 84),
        (27, 78), (28, 77), (55, 76), (88, 75),
    )
    assert sg.mu - tau_staircase(sg, s.generators) == 8368
    assert tau_staircase(sg, s.generators) == 25512


def test_abm_values():
    assert tau_abm(Semigroup(10, 23), compute_euclid(Semigroup(10, 23))) == 157
    assert tau_abm(Semigroup(122, 281), compute_euclid(Semigroup(122, 281))) == 25512
    assert tau_abm(Semigroup(5, 12), compute_euclid(Semigroup(5, 12))) == 37


def test_abm_rejects_p2():
    sg = Semigroup(2, 9)
    with pytest.raises(ValueError):
        tau_abm(sg, None)


def test_oracle_values():
    sg = Semigroup(10, 23)
    assert tau_oracle(sg, run_naive(sg)) == 157
    sg = Semigroup(2, 9)
    assert tau_oracle(sg, run_naive(sg)) == sg.mu == 8
    sg = Semigroup(122, 281)
    assert tau_oracle(sg, run_naive(sg)) == 25512


def test_p2_staircase_is_empty():
    for m in (3, 9, 25):
        sg = Semigroup(2, m)
        G = summarize(sg).generators
        stair = build_staircase(sg, G)
        assert stair.pairs == () and stair.area == 0
        assert tau_staircase(sg, G) == sg.mu


@pytest.mark.parametrize("p_max,m_max", [(40, 41)])
def test_three_way_agreement_small_sweep(p_max, m_max):
    for p in range(3, p_max):
        for m in range(p + 1, m_max):
            if gcd(p, m) != 1:
                continue
            sg = Semigroup(p, m)
            s = summarize(sg)
            t1 = tau_staircase(sg, s.generators)
            t2 = tau_abm(sg, s.euclid)
            t3 = tau_oracle(sg, run_naive(sg))
            assert t1 == t2 == t3, (p, m)
            assert sg.mu // 2 <= t1 <= sg.mu, (p, m)


@pytest.mark.parametrize("p,m", [(10, 23), (10, 19), (5, 14), (7, 18), (12, 29)])
def test_staircase_rectangles_enumerate_offsemigroup_values(p, m):
    # the dominated rectangle points correspond, via the standard form, to
    # exactly the value-set elements outside the semigroup
    sg = Semigroup(p, m)
    s = summarize(sg)
    stair = build_staircase(sg, s.generators)
    dominated = set()
    for a_i, b_i in stair.pairs:
        for a in range(1, a_i + 1):
            for b in range(1, b_i + 1):
                dominated.add((a, b))
    from_rectangles = {
        sg.pm - a * sg.m - b * sg.p for (a, b) in dominated
    }
    trace = run_naive(sg)
    lam = trace.lambda_bytes01()
    gam = trace.gamma_bytes01()
    off_semigroup = {x for x in range(1, sg.mu) if lam[x] and not gam[x]}
    assert from_rectangles == off_semigroup
    assert len(dominated) == stair.area
