"""Acceptance criteria, one test per criterion.

Each test records a single PASS/FAIL line that is printed in the terminal
summary (and directly when this file is run as a script).
"""
from __future__ import annotations

import time

import pytest

from aswram.ow import star_condition
from aswram.ramification import JumpSequence, kg_genus
from aswram.splitting import split_plan
from aswram.sweeps import (sweep_oracle, sweep_ow_implication, sweep_sequences, sweep_star_equivalence,
                           sweep_witt_ghost, sweep_wp_additive)

from conftest import ACCEPTANCE_LINES

pytestmark = pytest.mark.slow


def record(n: int, title: str, ok: bool, detail: str) -> None:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n} {title}: {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)


@pytest.fixture(scope="module")
def sequence_sweep():
    t0 = time.perf_counter()
    res = sweep_sequences(primes=(2, 3, 5), max_e=4, max_jump=200)
    return res, time.perf_counter() - t0


def test_criterion_1_witt():
    ghost = sweep_witt_ghost(samples=1200, primes=(2, 3, 5), max_e=4)
    additive = sweep_wp_additive(samples=1200, primes=(2, 3, 5), max_e=4)
    elapsed = ghost.elapsed + additive.elapsed
    ok = (ghost.passed and additive.passed and ghost.checked >= 1000 and additive.checked >= 1000
          and elapsed < 60)
    record(1, "Witt arithmetic", ok, f"{ghost.checked} ghost samples, {additive.checked} wp samples, "
           f"{ghost.failure_count + additive.failure_count} failures, {elapsed:.1f}s (limit 60s)")
    assert ok, (ghost.failures, additive.failures)


def test_criterion_2_combinatorial_identity(sequence_sweep):
    res, elapsed = sequence_sweep
    main, prefix = res["combinatorial_identity"], res["prefix_identity"]
    ok = main.passed and prefix.passed and elapsed < 300
    record(2, "combinatorial identity", ok, f"{main.checked} sequences, {main.failure_count} failures "
           f"(prefix rows: {prefix.failure_count} failures), {elapsed:.1f}s (limit 300s)")
    assert ok, (main.failures, prefix.failures)


def test_criterion_3_different_conservation(sequence_sweep):
    res, elapsed = sequence_sweep
    kato = res["kato_ledger"]
    a = split_plan(JumpSequence(3, (1, 7)))
    b = split_plan(JumpSequence(2, (1, 5)))
    spots = (a.branch_different == (34, 18) and a.special_different == 52
             and b.branch_different == (10, 4) and b.special_different == 14)
    ok = kato.passed and spots and elapsed < 300
    record(3, "different conservation", ok, f"{kato.checked} sequences, {kato.failure_count} failures; "
           f"p=3 (1,7): {'+'.join(map(str, a.branch_different))}={a.special_different}; "
           f"p=2 (1,5): {'+'.join(map(str, b.branch_different))}={b.special_different}")
    assert ok, kato.failures


def test_criterion_4_branches_have_no_essential(sequence_sweep):
    res, elapsed = sequence_sweep
    r = res["no_essential_branches"]
    ok = r.passed and elapsed < 300
    record(4, "no-essential branch profiles", ok, f"{r.checked} plans, {r.failure_count} failures")
    assert ok, r.failures


def test_criterion_5_herbrand(sequence_sweep):
    res, elapsed = sequence_sweep
    r = res["herbrand"]
    ok = r.passed and elapsed < 300
    record(5, "Herbrand round trip and different agreement", ok,
           f"{r.checked} sequences, {r.failure_count} failures")
    assert ok, r.failures


def test_criterion_6_oracle():
    r = sweep_oracle(primes=(2, 3), max_m=9, per_degree=20)
    ok = r.passed and r.elapsed < 120
    record(6, "oracle equivalence", ok, f"{r.checked} polynomials, {r.failure_count} failures, "
           f"{r.elapsed:.1f}s (limit 120s)")
    assert ok, r.failures


def test_criterion_7_ow_implication():
    r = sweep_ow_implication(primes=(2, 3, 5, 7), max_e=4, max_jump=500)
    witness = star_condition(JumpSequence(2, (3, 11)), 1)
    spot = not witness.holds and witness.witness == 3
    ok = r.passed and spot
    record(7, "Obus-Wewers implication", ok, f"{r.checked} essential-free sequences, "
           f"{r.failure_count} exceptions; p=2 (3,11) witness m={witness.witness}")
    assert ok, r.failures


def test_criterion_8_star_equivalence():
    r = sweep_star_equivalence(primes=(2, 3, 5, 7), max_e=4, max_jump=500)
    ok = r.passed
    record(8, "(*) iff (*)'", ok, f"{r.checked} distinct (nu, i_nu, i_nu+1) cases, "
           f"{r.failure_count} exceptions")
    assert ok, r.failures


def test_criterion_9_genus(sequence_sweep):
    res, _ = sequence_sweep
    r = res["kg_genus"]
    spots = (kg_genus(JumpSequence(2, (1,))), kg_genus(JumpSequence(3, (2,))), kg_genus(JumpSequence(2, (1, 2))))
    ok = r.passed and spots == (0, 1, 1)
    record(9, "KG genus", ok, f"{r.checked} sequences, {r.failure_count} failures; spot genera {spots}")
    assert ok, r.failures


if __name__ == "__main__":
    import sys
    sys.exit(pytest.main([__file__, "-q", "-s"]))
