"""The Obus-Wewers numerical condition (*) on consecutive upper jumps.

For 1 <= nu < e put delta = i_{nu+1} - p i_nu.  Condition (*) at nu says that
no integer m satisfies

    delta < p m <= delta * i_{nu+1} / (i_{nu+1} - i_nu).

Writing delta = p r - eta with 0 <= eta < p, the reformulation (*)' reads
0 <= r <= eta; the two agree whenever i_nu >= p^2.  Everything here is exact
integer and rational arithmetic.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .ramification import JumpSequence, essential_decomposition


class OWInconsistency(AssertionError):
    """A sequence without essential jumps violates (*); this cannot happen."""


@dataclass(frozen=True)
class StarEntry:
    nu: int
    delta: int
    bound: Fraction
    witness: Optional[int]
    r: int
    eta: int
    star_prime: Optional[bool]     # None outside 1 < nu < e
    equivalence_regime: bool       # 1 < nu < e and i_nu >= p^2

    @property
    def holds(self) -> bool:
        return self.witness is None

    def to_json(self) -> dict:
        return {"nu": self.nu, "delta": self.delta,
                "bound": {"num": self.bound.numerator, "den": self.bound.denominator},
                "holds": self.holds, "witness": self.witness, "r": self.r, "eta": self.eta,
                "star_prime": self.star_prime, "equivalence_regime": self.equivalence_regime}


def star_from_pair(p: int, lo: int, hi: int) -> tuple[int, Fraction, Optional[int]]:
    """(delta, bound, witness) for consecutive jumps lo = i_nu < hi = i_{nu+1}."""
    delta = hi - p * lo
    bound = Fraction(delta * hi, hi - lo)
    # smallest m with p m > delta; any witness exists iff this one does
    m = delta // p + 1
    return delta, bound, (m if p * m <= bound else None)


def star_prime_from_delta(p: int, delta: int) -> tuple[int, int, bool]:
    """(r, eta, holds) with delta = p r - eta, 0 <= eta < p; holds iff 0 <= r <= eta."""
    r = -(-delta // p)
    eta = r * p - delta
    return r, eta, 0 <= r <= eta


def _check_nu(seq: JumpSequence, nu: int):
    if not 1 <= nu < seq.e:
        raise ValueError(f"nu must satisfy 1 <= nu < e={seq.e}, got {nu}")


def star_condition(seq: JumpSequence, nu: int) -> StarEntry:
    seq = seq.upper()
    _check_nu(seq, nu)
    p = seq.p
    lo, hi = seq[nu], seq[nu + 1]
    delta, bound, witness = star_from_pair(p, lo, hi)
    r, eta, sp = star_prime_from_delta(p, delta)
    inside = 1 < nu < seq.e
    return StarEntry(nu, delta, bound, witness, r, eta, sp if inside else None,
                     inside and lo >= p * p)


def star_prime_condition(seq: JumpSequence, nu: int) -> bool:
    seq = seq.upper()
    _check_nu(seq, nu)
    if not 1 < nu < seq.e:
        raise ValueError(f"(*)' is stated for 1 < nu < e; got nu={nu}, e={seq.e}")
    return star_prime_from_delta(seq.p, seq[nu + 1] - seq.p * seq[nu])[2]


def star_report(seq: JumpSequence) -> list[StarEntry]:
    return [star_condition(seq, nu) for nu in range(1, seq.e)]


def ow_liftable_no_essential(seq: JumpSequence) -> bool:
    """True iff there are no essential jumps; then (*) is checked at every nu."""
    seq = seq.upper()
    if essential_decomposition(seq).has_essential:
        return False
    for entry in star_report(seq):
        if not entry.holds:
            raise OWInconsistency(
                f"{seq.jumps} has no essential jump but (*) fails at nu={entry.nu}, m={entry.witness}")
    return True


def ow_theorem_hypothesis(seq: JumpSequence) -> bool:
    """(*) at every 3 <= nu < e, the numerical input of the Obus-Wewers theorem."""
    seq = seq.upper()
    return all(star_condition(seq, nu).holds for nu in range(3, seq.e))
