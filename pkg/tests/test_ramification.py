from __future__ import annotations

import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aswram.ramification import (LOWER, UPPER, InvalidJumps, JumpSequence, different_degree,
                                 enumerate_upper_sequences, essential_decomposition, herbrand,
                                 kato_check, kg_genus, validate_jumps)


def group_order_different(lower: JumpSequence) -> int:
    """sum_{i >= 0} (|G_i| - 1) straight from the lower filtration."""
    p, e = lower.p, lower.e
    total = 0
    for i in range(lower.jumps[-1] + 1):
        passed = sum(1 for j in lower.jumps if j < i)
        total += p ** (e - passed) - 1
    return total


@st.composite
def upper_sequences(draw, primes=(2, 3, 5), max_e=4, max_jump=300):
    p = draw(st.sampled_from(primes))
    e = draw(st.integers(1, max_e))
    first = draw(st.integers(1, 40).filter(lambda j: j % p))
    jumps = [first]
    for _ in range(e - 1):
        base = p * jumps[-1]
        extra = draw(st.integers(0, 30))
        j = base + extra
        while j > base and j % p == 0:
            j += 1
        jumps.append(j)
    return JumpSequence(p, tuple(jumps))


def test_validate_examples():
    assert validate_jumps(3, (1, 7)) is None
    bad = validate_jumps(3, (1, 6))
    assert bad.index == 2 and "divisible" in bad.clause
    assert validate_jumps(2, (1, 2)) is None
    assert validate_jumps(3, (3,)).index == 1
    assert validate_jumps(2, (1, 1)).index == 2
    assert validate_jumps(2, ()).index == 0


def test_construction_raises():
    with pytest.raises(InvalidJumps) as info:
        JumpSequence(3, (1, 6))
    assert info.value.index == 2


def test_herbrand_examples():
    assert herbrand(JumpSequence(5, (7,)), LOWER).jumps == (7,)
    assert herbrand(JumpSequence(2, (1, 3)), LOWER).jumps == (1, 5)
    assert herbrand(JumpSequence(3, (2, 7)), LOWER).jumps == (2, 17)
    with pytest.raises(InvalidJumps):
        JumpSequence(3, (2, 6), LOWER)        # 4 is not divisible by 3


def test_different_examples():
    assert different_degree(JumpSequence(3, (2,))) == 6
    assert different_degree(JumpSequence(3, (1, 4))) == 34
    assert different_degree(JumpSequence(3, (1, 10), LOWER)) == 34
    assert different_degree(JumpSequence(3, (1, 7))) == 52


@settings(max_examples=300, deadline=None)
@given(upper_sequences())
def test_herbrand_roundtrip_and_formulas(seq):
    lower = herbrand(seq, LOWER)
    assert herbrand(lower, UPPER) == seq
    assert all(a < b for a, b in zip(lower.jumps, lower.jumps[1:]))
    d = different_degree(seq)
    assert d == different_degree(lower) == group_order_different(lower)
    assert d % 2 == 0


@settings(max_examples=300, deadline=None)
@given(upper_sequences())
def test_decomposition_invariants(seq):
    dec = essential_decomposition(seq)
    p = seq.p
    for rho in range(1, seq.e + 1):
        q, eps = dec.q[rho - 1], dec.eps[rho - 1]
        assert seq[rho] - p * seq[rho - 1] == p * q + eps and 0 <= eps < p
        assert (eps > 0) == (seq[rho] % p != 0) == (p * seq[rho - 1] < seq[rho])
    assert sum(dec.q) == dec.N - 1
    if dec.has_essential:
        assert dec.d[-1] == dec.N


def test_decomposition_examples():
    dec = essential_decomposition(JumpSequence(3, (1, 7)))
    assert (dec.q, dec.eps, dec.r, dec.d, dec.N) == ((0, 1), (1, 1), (2,), (1, 2), 2)
    assert essential_decomposition(JumpSequence(3, (1, 4))).N == 1
    dec = essential_decomposition(JumpSequence(2, (1, 2)))
    assert (dec.q, dec.eps, dec.N) == ((0, 0), (1, 0), 1)


def test_genus_examples():
    assert kg_genus(JumpSequence(2, (1,))) == 0
    assert kg_genus(JumpSequence(3, (2,))) == 1
    assert kg_genus(JumpSequence(2, (1, 2))) == 1


def test_kato_examples():
    assert kato_check(52, [34, 18]).kato_equal
    assert kato_check(14, [10, 4]).kato_equal
    assert kato_check(6, [6]).kato_equal
    assert not kato_check(6, [4]).kato_equal


def test_enumerator_matches_brute_force():
    p, max_e, max_jump = 3, 3, 40
    brute = {t for e in range(1, max_e + 1) for t in itertools.product(range(1, max_jump + 1), repeat=e)
             if validate_jumps(p, t) is None}
    listed = list(enumerate_upper_sequences(p, max_e, max_jump))
    assert len(listed) == len(set(listed))
    assert set(listed) == brute


def test_json_roundtrip():
    seq = JumpSequence(2, (1, 5), LOWER)
    assert JumpSequence.from_json(seq.to_json()) == seq
