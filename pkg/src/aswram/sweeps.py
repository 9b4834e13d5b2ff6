"""Exhaustive and randomized property sweeps.

Each sweep returns a :class:`SweepResult` with a count of checked instances
and the first few counterexamples.  The CLI ``sweep`` verb and the acceptance
tests both run these.
"""
from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .asw import AswClass, standard_form, upper_jumps
from .fields import prime_field
from .oracle import oracle_e1
from .ow import star_condition, star_from_pair, star_prime_from_delta
from .polys import PolyU
from .ramification import (LOWER, UPPER, JumpSequence, different_degree, enumerate_upper_sequences,
                           essential_decomposition, herbrand, kg_genus)
from .splitting import split_plan
from .universal import ghost, witt_universal_polys
from .witt import WittVector, witt_add, wp

MAX_FAILURES = 10


@dataclass
class SweepResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)
    failure_count: int = 0
    elapsed: float = 0.0
    params: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0 and self.checked > 0

    def fail(self, payload: dict):
        self.failure_count += 1
        if len(self.failures) < MAX_FAILURES:
            self.failures.append(payload)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} {self.name}: {self.checked} checked, {self.failure_count} failures, {self.elapsed:.1f}s"

    def to_json(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "failure_count": self.failure_count, "failures": self.failures,
                "elapsed_seconds": round(self.elapsed, 3), "params": self.params}


def _timed(fn: Callable[..., SweepResult]) -> Callable[..., SweepResult]:
    def run(*args, **kwargs) -> SweepResult:
        t0 = time.perf_counter()
        res = fn(*args, **kwargs)
        res.elapsed = time.perf_counter() - t0
        return res
    run.__name__ = fn.__name__
    run.__doc__ = fn.__doc__
    return run


# -- Witt arithmetic --------------------------------------------------------------

@_timed
def sweep_witt_ghost(samples: int = 1200, primes: Sequence[int] = (2, 3, 5), max_e: int = 4,
                     seed: int = 0, bound: int = 50) -> SweepResult:
    """ghost(S(x, y)) = ghost(x) + ghost(y) and ghost(I(x)) = -ghost(x) on random integer vectors."""
    res = SweepResult("witt_ghost", params={"samples": samples, "primes": list(primes), "max_e": max_e,
                                            "seed": seed})
    rng = random.Random(seed)
    shapes = [(p, e) for p in primes for e in range(1, max_e + 1)]
    for k in range(samples):
        p, e = shapes[k % len(shapes)]
        polys = witt_universal_polys(p, e)
        x = [rng.randint(-bound, bound) for _ in range(e)]
        y = [rng.randint(-bound, bound) for _ in range(e)]
        s = polys.eval_add(x, y)
        gx, gy = ghost(x, p), ghost(y, p)
        if ghost(s, p) != [a + b for a, b in zip(gx, gy)]:
            res.fail({"p": p, "e": e, "x": x, "y": y, "op": "add"})
        if ghost(polys.eval_neg(x), p) != [-a for a in gx]:
            res.fail({"p": p, "e": e, "x": x, "op": "neg"})
        res.checked += 1
    return res


def random_witt(F, e: int, max_deg: int, rng: random.Random) -> WittVector:
    coords = []
    for _ in range(e):
        d = rng.randint(-1, max_deg)
        coords.append(PolyU(F, [F.random_element(rng) for _ in range(d + 1)]))
    return WittVector(tuple(coords))


@_timed
def sweep_wp_additive(samples: int = 1200, primes: Sequence[int] = (2, 3, 5), max_e: int = 4,
                      seed: int = 1, max_deg: int = 4) -> SweepResult:
    """wp(x + y) = wp(x) + wp(y) in characteristic p."""
    res = SweepResult("wp_additive", params={"samples": samples, "primes": list(primes), "max_e": max_e,
                                             "seed": seed})
    rng = random.Random(seed)
    shapes = [(p, e) for p in primes for e in range(1, max_e + 1)]
    for k in range(samples):
        p, e = shapes[k % len(shapes)]
        F = prime_field(p)
        x, y = random_witt(F, e, max_deg, rng), random_witt(F, e, max_deg, rng)
        if wp(witt_add(x, y)) != witt_add(wp(x), wp(y)):
            res.fail({"p": p, "x": x.to_json(), "y": y.to_json()})
        res.checked += 1
    return res


# -- jump sequences ---------------------------------------------------------------

def _check_sequence(p: int, jumps: tuple[int, ...], res: dict[str, SweepResult]):
    seq = JumpSequence(p, jumps)
    plan = split_plan(seq)
    report = plan.report
    tag = {"p": p, "jumps": list(jumps)}
    for name, check in (("combinatorial_identity", report["combinatorial_identity"]),
                        ("prefix_identity", report["prefix_identity"])):
        r = res[name]
        r.checked += 1
        if not check.passed:
            r.fail({**tag, "failures": list(check.failures)})
    r = res["kato_ledger"]
    r.checked += 1
    if not report["kato_ledger"].passed:
        r.fail({**tag, "branch_different": list(plan.branch_different),
                "special": plan.special_different})
    r = res["no_essential_branches"]
    r.checked += 1
    for name in ("no_essential_branches", "lengths_non_increasing", "branch_recursions"):
        if not report[name].passed:
            r.fail({**tag, "check": name, "failures": list(report[name].failures)})
            break
    r = res["herbrand"]
    r.checked += 1
    lower = herbrand(seq, LOWER)
    back = herbrand(lower, UPPER)
    d_up, d_low = different_degree(seq), different_degree(lower)
    if back != seq or d_up != d_low or any(b <= a for a, b in zip(lower.jumps, lower.jumps[1:])):
        r.fail({**tag, "lower": list(lower.jumps), "back": list(back.jumps),
                "different_upper": d_up, "different_lower": d_low})
    r = res["kg_genus"]
    r.checked += 1
    try:
        kg_genus(seq)
    except ArithmeticError as exc:
        r.fail({**tag, "error": str(exc)})


def sweep_sequences(primes: Sequence[int] = (2, 3, 5), max_e: int = 4, max_jump: int = 200
                    ) -> dict[str, SweepResult]:
    """Plan verification, Herbrand round trip and genus integrality on every valid sequence."""
    names = ("combinatorial_identity", "prefix_identity", "kato_ledger", "no_essential_branches",
             "herbrand", "kg_genus")
    params = {"primes": list(primes), "max_e": max_e, "max_jump": max_jump}
    res = {n: SweepResult(n, params=params) for n in names}
    t0 = time.perf_counter()
    for p in primes:
        for jumps in enumerate_upper_sequences(p, max_e, max_jump):
            _check_sequence(p, jumps, res)
    for r in res.values():
        r.elapsed = time.perf_counter() - t0
    return res


# -- Obus-Wewers --------------------------------------------------------------------

def _successors(p: int, prev: int, max_jump: int, essential_free: bool = False) -> Iterable[int]:
    base = p * prev
    if base <= max_jump:
        yield base
    top = min(max_jump, base + p - 1) if essential_free else max_jump
    for j in range(base + 1, top + 1):
        if j % p:
            yield j


def essential_free_sequences(p: int, max_e: int, max_jump: int) -> Iterable[tuple[int, ...]]:
    """Valid upper sequences without essential jumps (i_rho <= p i_{rho-1} + p - 1)."""

    def extend(prefix):
        yield prefix
        if len(prefix) < max_e:
            for j in _successors(p, prefix[-1], max_jump, essential_free=True):
                yield from extend(prefix + (j,))

    for first in range(1, min(p - 1, max_jump) + 1):
        yield from extend((first,))


@_timed
def sweep_ow_implication(primes: Sequence[int] = (2, 3, 5, 7), max_e: int = 4,
                         max_jump: int = 500) -> SweepResult:
    """No essential jumps implies (*) at every nu."""
    res = SweepResult("ow_implication", params={"primes": list(primes), "max_e": max_e,
                                                "max_jump": max_jump})
    for p in primes:
        for jumps in essential_free_sequences(p, max_e, max_jump):
            seq = JumpSequence(p, jumps)
            if essential_decomposition(seq).has_essential:
                res.fail({"p": p, "jumps": list(jumps), "error": "enumerator produced an essential jump"})
                continue
            for nu in range(1, seq.e):
                entry = star_condition(seq, nu)
                if not entry.holds:
                    res.fail({"p": p, "jumps": list(jumps), "nu": nu, "witness": entry.witness})
            res.checked += 1
    return res


def reachable_pairs(p: int, max_e: int, max_jump: int) -> dict[int, set[tuple[int, int]]]:
    """For each nu, all (i_nu, i_{nu+1}) occurring in valid sequences of length <= max_e."""
    reach = {1: {j for j in range(1, max_jump + 1) if j % p}}
    pairs: dict[int, set[tuple[int, int]]] = {}
    for nu in range(1, max_e):
        pairs[nu] = {(a, b) for a in reach[nu] for b in _successors(p, a, max_jump)}
        reach[nu + 1] = {b for _, b in pairs[nu]}
    return pairs


@_timed
def sweep_star_equivalence(primes: Sequence[int] = (2, 3, 5, 7), max_e: int = 4,
                           max_jump: int = 500) -> SweepResult:
    """(*) iff (*)' at 1 < nu < e with i_nu >= p^2.

    Both conditions depend only on (p, i_nu, i_{nu+1}), so every distinct pair
    occurring at such a nu in the sweep range is checked once.
    """
    res = SweepResult("star_equivalence", params={"primes": list(primes), "max_e": max_e,
                                                  "max_jump": max_jump, "unit": "distinct (nu, i_nu, i_nu+1)"})
    for p in primes:
        pairs = reachable_pairs(p, max_e, max_jump)
        for nu in range(2, max_e):
            for lo, hi in sorted(pairs[nu]):
                if lo < p * p:
                    continue
                delta, _, witness = star_from_pair(p, lo, hi)
                prime_holds = star_prime_from_delta(p, delta)[2]
                if (witness is None) != prime_holds:
                    res.fail({"p": p, "nu": nu, "i_nu": lo, "i_next": hi, "star": witness is None,
                              "star_prime": prime_holds})
                res.checked += 1
    return res


# -- oracle -----------------------------------------------------------------------------

def random_standard_poly(F, m: int, rng: random.Random) -> PolyU:
    """Random f of degree m with no positive exponent divisible by p."""
    p = F.p
    coeffs = [0] * (m + 1)
    for k in range(m):
        if k == 0 or k % p:
            coeffs[k] = F.random_element(rng)
    coeffs[m] = F.random_nonzero(rng)
    return PolyU(F, coeffs)


@_timed
def sweep_oracle(primes: Sequence[int] = (2, 3), max_m: int = 9, per_degree: int = 20,
                 seed: int = 0) -> SweepResult:
    """Oracle jump and different against the formulas, with equivalence and rescale checks."""
    res = SweepResult("oracle", params={"primes": list(primes), "max_m": max_m,
                                        "per_degree": per_degree, "seed": seed})
    rng = random.Random(seed)
    for p in primes:
        F = prime_field(p)
        for m in range(1, max_m + 1):
            if m % p == 0:
                continue
            for _ in range(per_degree):
                f = random_standard_poly(F, m, rng)
                tag = {"p": p, "m": m, "f": f.to_json()}
                r = oracle_e1(f)
                formula = upper_jumps(standard_form(AswClass(WittVector((f,))))[0])
                expected_diff = different_degree(JumpSequence(p, (m,)))
                if not (r.jump == m == formula.jumps[0] and r.different == expected_diff == (m + 1) * (p - 1)):
                    res.fail({**tag, "jump": r.jump, "different": r.different})
                if not r.trusted:
                    res.fail({**tag, "residuals": [r.equation_residual, r.invariance_residual]})
                # wp-equivalent presentation
                c = PolyU(F, [F.random_element(rng) for _ in range(rng.randint(1, max(1, m // p) + 1))])
                g = f + c.frobenius() - c
                g_std = standard_form(AswClass(WittVector((g,))))[0].generator.coords[0]
                r2 = oracle_e1(g_std)
                if (r2.jump, r2.different) != (r.jump, r.different):
                    res.fail({**tag, "equivalent": g.to_json(), "jump2": r2.jump})
                r3 = oracle_e1(f, rescale=True)
                if (r3.jump, r3.different) != (r.jump, r.different) or not r3.trusted:
                    res.fail({**tag, "rescaled_jump": r3.jump, "rescaled_different": r3.different})
                res.checked += 1
    return res
