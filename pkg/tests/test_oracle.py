from __future__ import annotations

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aswram.asw import AswClass, standard_form, upper_jumps
from aswram.fields import GF, FieldSpec, prime_field
from aswram.oracle import DegenerateInput, default_precision, oracle_e1
from aswram.polys import PolyU
from aswram.series import PrecisionError
from aswram.sweeps import random_standard_poly
from aswram.witt import WittVector

from conftest import mono, poly


def test_examples(F2, F3):
    r = oracle_e1(mono(F2, 3))
    assert (r.jump, r.different) == (3, 4) and r.trusted
    r = oracle_e1(mono(F3, 1))
    assert (r.jump, r.different) == (1, 4) and r.sigma_valuations == (2, 2)
    r = oracle_e1(poly(F2, 0, 1, 0, 1))
    assert r.jump == 3


def test_residuals_reach_precision(F3):
    r = oracle_e1(poly(F3, 2, 1, 0, 0, 2))
    assert r.precision == default_precision(4, 3) == 56
    assert r.equation_residual >= r.precision and r.invariance_residual >= r.precision


def test_non_prime_field(F9):
    r = oracle_e1(PolyU(F9, [0, 5, 7, 0, 3]))
    assert (r.jump, r.different) == (4, 10)


def test_refuses_degenerate(F2, F3):
    with pytest.raises(DegenerateInput):
        oracle_e1(poly(F2, 0, 0, 1))          # u^2 is not standard
    with pytest.raises(DegenerateInput):
        oracle_e1(PolyU.constant(F3, 1))
    with pytest.raises(DegenerateInput):
        oracle_e1(PolyU.zero(F3))


def test_precision_exhaustion_is_reported(F2):
    with pytest.raises(PrecisionError):
        oracle_e1(mono(F2, 9), precision=6)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([2, 3, 5]), st.integers(1, 7), st.integers(0, 10 ** 9))
def test_matches_jump_formula(p, m, seed):
    if m % p == 0:
        m += 1
    F = prime_field(p)
    f = random_standard_poly(F, m, random.Random(seed))
    r = oracle_e1(f)
    formula = upper_jumps(standard_form(AswClass(WittVector((f,))))[0])
    assert r.jump == formula.jumps[0] == m
    assert r.different == (m + 1) * (p - 1)
    assert r.trusted


@settings(max_examples=15, deadline=None)
@given(st.sampled_from([2, 3]), st.integers(1, 7), st.integers(0, 10 ** 9))
def test_wp_equivalence_and_rescale(p, m, seed):
    if m % p == 0:
        m += 1
    F = prime_field(p)
    rng = random.Random(seed)
    f = random_standard_poly(F, m, rng)
    c = PolyU(F, [F.random_element(rng) for _ in range(4)])
    g = standard_form(AswClass(WittVector((f + c.frobenius() - c,))))[0].generator.coords[0]
    r, r2, r3 = oracle_e1(f), oracle_e1(g), oracle_e1(f, rescale=True)
    assert (r.jump, r.different) == (r2.jump, r2.different) == (r3.jump, r3.different)
    assert r3.uniformizer == "s(1+s)" and r3.trusted


def test_json(F2):
    js = oracle_e1(mono(F2, 1)).to_json()
    assert js["jump"] == 1 and js["different"] == 2 and js["trusted"] is True
    assert GF(FieldSpec(2)) == F2
