from math import gcd

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from planebranch.semigroup import Semigroup, StandardForm


def brute_members(p, m, limit):
    out = set()
    for a in range(0, limit // p + 1):
        for b in range(0, (limit - a * p) // m + 1):
            out.add(a * p + b * m)
    return out


# ----------------------------- construction -----------------------------

@pytest.mark.parametrize("p,m", [(2, 3), (10, 23), (122, 281), (7, 10**6)])
def test_valid_construction(p, m):
    sg = Semigroup(p, m)
    assert sg.pm == p * m
    assert sg.mu == (p - 1) * (m - 1)


@pytest.mark.parametrize("p,m", [(10, 20), (4, 10), (1, 5), (5, 5), (7, 3), (3, 10**6 + 3)])
def test_invalid_construction(p, m):
    with pytest.raises(ValueError):
        Semigroup(p, m)


# ----------------------------- membership -----------------------------

def test_contains_examples():
    sg = Semigroup(10, 23)
    assert sg.contains(33)          # 10 + 23
    assert not sg.contains(34)      # the first generator beyond the semigroup
    assert sg.contains(198)         # the conductor itself
    assert not Semigroup(5, 12).contains(1)


def test_contains_rejects_negative():
    with pytest.raises(ValueError):
        Semigroup(5, 12).contains(-1)


@pytest.mark.parametrize("p,m", [(2, 3), (3, 5), (5, 12), (10, 23), (12, 35)])
def test_contains_vs_bruteforce(p, m):
    sg = Semigroup(p, m)
    members = brute_members(p, m, 2 * p * m)
    for x in range(0, 2 * p * m + 1):
        assert sg.contains(x) == (x in members), x


@pytest.mark.parametrize("p,m", [(3, 7), (10, 23), (17, 19)])
def test_contains_above_conductor(p, m):
    sg = Semigroup(p, m)
    for x in range(sg.mu, sg.mu + 3 * m):
        assert sg.contains(x)


@given(st.integers(2, 1000), st.integers(3, 1000), st.integers(0, 10**6))
def test_contains_agrees_with_residue_definition(p, m, x):
    if not (p < m and gcd(p, m) == 1):
        return
    sg = Semigroup(p, m)
    expected = any((x - b * m) % p == 0 for b in range(0, min(x // m, p - 1) + 1))
    assert sg.contains(x) == expected


# ----------------------------- gaps -----------------------------

def test_gaps_examples():
    assert Semigroup(2, 3).gaps() == (1,)
    assert len(Semigroup(5, 12).gaps()) == 22
    assert len(Semigroup(10, 23).gaps()) == 99


@pytest.mark.parametrize("p,m", [(3, 4), (5, 12), (10, 23), (10, 19)])
def test_gaps_vs_bruteforce(p, m):
    sg = Semigroup(p, m)
    members = brute_members(p, m, sg.mu)
    assert sg.gaps() == tuple(x for x in range(1, sg.mu) if x not in members)


def test_gap_count_is_half_mu():
    for p in range(2, 201):
        for m in range(p + 1, 201):
            if gcd(p, m) == 1:
                sg = Semigroup(p, m)
                assert len(sg.gaps()) == sg.mu // 2, (p, m)


# ----------------------------- standard form -----------------------------

def test_standard_form_paper_values():
    sg = Semigroup(122, 281)
    assert sg.to_standard_form(404) == StandardForm(88, 75)
    assert sg.to_standard_form(9555) == StandardForm(55, 76)
    assert sg.from_standard_form(StandardForm(88, 75)) == 404


def test_standard_form_frobenius():
    for p, m in [(5, 12), (10, 23), (122, 281)]:
        sg = Semigroup(p, m)
        frob = p * m - m - p
        assert sg.to_standard_form(frob) == StandardForm(1, 1)


def test_standard_form_bruteforce_oracle():
    sg = Semigroup(10, 23)
    found = [
        (a, b)
        for a in range(1, 10)
        for b in range(1, 23)
        if sg.pm - a * 23 - b * 10 == 34
    ]
    assert found == [(2, 15)]
    assert sg.to_standard_form(34) == StandardForm(2, 15)
    assert sg.from_standard_form(StandardForm(2, 15)) == 34
    assert sg.from_standard_form(StandardForm(1, 1)) == 197


def test_standard_form_rejects_members_and_nonpositive():
    sg = Semigroup(10, 23)
    for bad in (0, -5, 10, 33, 198, 500):
        with pytest.raises(ValueError):
            sg.to_standard_form(bad)


@pytest.mark.parametrize("p,m", [(5, 12), (10, 23), (10, 19), (7, 11)])
def test_standard_form_bijection_with_gaps(p, m):
    # distinct in-range (a, b) hit distinct values, the positive ones are
    # exactly the gaps, and the round trip is the identity on them
    sg = Semigroup(p, m)
    values = {}
    for a in range(1, p):
        for b in range(1, m):
            v = sg.from_standard_form(StandardForm(a, b))
            assert v not in values
            values[v] = (a, b)
    positives = {v for v in values if v > 0}
    assert positives == set(sg.gaps())
    for g in sg.gaps():
        f = sg.to_standard_form(g)
        assert (f.a, f.b) == values[g]
        assert sg.from_standard_form(f) == g


@given(st.integers(3, 10**6), st.integers(4, 10**6), st.data())
@settings(max_examples=200)
def test_standard_form_roundtrip_random(p, m, data):
    if not (p < m and gcd(p, m) == 1):
        return
    sg = Semigroup(p, m)
    a = data.draw(st.integers(1, p - 1))
    b = data.draw(st.integers(1, m - 1))
    v = sg.from_standard_form(StandardForm(a, b))
    if v > 0:
        assert not sg.contains(v)
        assert sg.to_standard_form(v) == StandardForm(a, b)


# ----------------------------- element stream -----------------------------

@pytest.mark.parametrize("p,m", [(2, 3), (5, 12), (10, 23)])
def test_elements_stream_increasing(p, m):
    sg = Semigroup(p, m)
    members = sorted(brute_members(p, m, max(3 * p * m, 200)))
    stream = sg.elements()
    got = [next(stream) for _ in range(60)]
    assert got == members[:60]
