from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from aswram.fields import (GF, FieldError, FieldSpec, default_modulus, is_irreducible_mod_p, is_prime,
                           prime_factors, prime_field, solve_linear_mod_p)

SPECS = [FieldSpec(2), FieldSpec(3), FieldSpec(5), FieldSpec(2, 2), FieldSpec(2, 3), FieldSpec(3, 2),
         FieldSpec(5, 2), FieldSpec(2, 5), FieldSpec(7, 3)]


def test_primes():
    assert [n for n in range(30) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
    assert prime_factors(360) == [2, 3, 5]


def test_rabin_matches_brute_force_root_free_cubics():
    # a cubic over F_p is irreducible iff it has no root
    p = 5
    for a, b, c in itertools.product(range(p), repeat=3):
        f = (c, b, a, 1)
        has_root = any((x ** 3 + a * x * x + b * x + c) % p == 0 for x in range(p))
        assert is_irreducible_mod_p(f, p) == (not has_root)


def test_default_modulus_f4():
    assert default_modulus(2, 2) == (1, 1, 1)
    assert default_modulus(3, 1) == (0, 1)


def test_fieldspec_validation():
    with pytest.raises(FieldError):
        FieldSpec(4)
    with pytest.raises(FieldError):
        FieldSpec(101)
    with pytest.raises(FieldError):
        FieldSpec(2, 2, (1, 0, 1))      # u^2 + 1 = (u + 1)^2 over F_2
    with pytest.raises(FieldError):
        FieldSpec(3, 2, (1, 0, 2))      # not monic after reduction
    spec = FieldSpec(3, 2)
    assert FieldSpec.from_json(spec.to_json()) == spec


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_field_axioms_exhaustive_small(spec):
    F = GF(spec)
    rng = random.Random(spec.order)
    elems = list(F.elements())
    assert len(elems) == F.q
    sample = elems if F.q <= 9 else rng.sample(elems, 9)
    for a in sample:
        assert F.add(a, F.neg(a)) == 0
        assert F.frob(F.pth_root(a)) == a
        if a:
            assert F.mul(a, F.inv(a)) == 1
            assert F.pow(a, F.q - 1) == 1
        for b in sample:
            assert F.mul(a, b) == F.mul(b, a)
            assert F.add(F.frob(a), F.frob(b)) == F.frob(F.add(a, b))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SPECS), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6), st.integers(0, 10 ** 6))
def test_distributive(spec, x, y, z):
    F = GF(spec)
    a, b, c = x % F.q, y % F.q, z % F.q
    assert F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c))
    assert F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c))


@pytest.mark.parametrize("spec", SPECS, ids=str)
def test_artin_schreier_solvable_iff_trace_zero(spec):
    F = GF(spec)
    rng = random.Random(1)
    for _ in range(20):
        c = F.random_element(rng)
        b = F.solve_artin_schreier(c)
        if F.trace(c) == 0:
            assert b is not None and F.sub(F.frob(b), b) == c
        else:
            assert b is None


def test_trace_of_one_over_f2():
    assert prime_field(2).trace(1) == 1
    assert prime_field(2).solve_artin_schreier(1) is None


def test_vector_roundtrip():
    F = GF(FieldSpec(3, 2))
    for a in F.elements():
        assert F.from_vector(F.to_vector(a)) == a


def test_solve_linear():
    A = [[1, 2], [3, 4]]
    x = solve_linear_mod_p(A, [5, 6], 7)
    assert [(A[i][0] * x[0] + A[i][1] * x[1]) % 7 for i in range(2)] == [5, 6]
    assert solve_linear_mod_p([[1, 1], [1, 1]], [0, 1], 2) is None
