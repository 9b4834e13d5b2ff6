"""Artin-Schreier-Witt presentations: standard form, normalization, jumps.

Generators are Witt vectors whose coordinates are polynomials in u = 1/t over a
finite field.  Only polynomial coordinates are accepted: a tail of positive
t-valuation is always in the image of the ASW operator, but that reduction is
not implemented and such input cannot be expressed in :class:`PolyU`.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional, Sequence

from .fields import FieldError, FieldSpec, FiniteField, GF
from .polys import NEG_INF, PolyU, extend_field
from .ramification import JumpSequence
from .witt import WittVector, witt_add, witt_sum, wp

DEFAULT_RETRIES = 64
YES = "yes"
NO = "no"
YES_AFTER_EXTENSION = "yes-after-extension"


class DegeneratePresentation(ValueError):
    """First coordinate zero: the class does not give a totally ramified degree-p^e extension."""


class NotStandardForm(ValueError):
    pass


class FieldTooSmall(FieldError):
    def __init__(self, msg: str, required_extension: Optional[int] = None):
        super().__init__(msg)
        self.required_extension = required_extension


@dataclass(frozen=True)
class AswClass:
    generator: WittVector
    standard_form: bool = False
    normalized: bool = False
    separable: bool = False
    seed: Optional[int] = None

    @property
    def field(self) -> FiniteField:
        return self.generator.field

    @property
    def field_spec(self) -> FieldSpec:
        return self.field.spec

    @property
    def p(self) -> int:
        return self.generator.p

    @property
    def e(self) -> int:
        return self.generator.length

    @classmethod
    def from_coords(cls, field: FiniteField, coords: Sequence[Sequence[int]]) -> "AswClass":
        return cls(WittVector.from_ints(field, coords))

    def flags(self) -> dict:
        return {"standard_form": self.standard_form, "normalized": self.normalized,
                "separable": self.separable}

    def to_json(self) -> dict:
        out = self.generator.to_json()
        out["field"] = self.field_spec.to_json()
        out["flags"] = self.flags()
        if self.seed is not None:
            out["seed"] = self.seed
        return out

    @classmethod
    def from_json(cls, data: dict) -> "AswClass":
        F = GF(FieldSpec.from_json(data["field"]))
        flags = data.get("flags", {})
        return cls(WittVector.from_json(F, data), bool(flags.get("standard_form", False)),
                   bool(flags.get("normalized", False)), bool(flags.get("separable", False)),
                   data.get("seed"))


@dataclass(frozen=True)
class ReductionCertificate:
    """a = a_std + wp(c) + residual (Witt sums), exactly."""

    c: WittVector
    residual: WittVector
    needs_extension: bool

    @property
    def residual_constants(self) -> list[int]:
        return [r.coeff(0) for r in self.residual.coords]

    def verify(self, original: WittVector, reduced: WittVector) -> bool:
        return witt_sum([(1, reduced), (1, wp(self.c)), (1, self.residual)]) == original

    def to_json(self) -> dict:
        return {"c": self.c.to_json(), "residual_constants": self.residual_constants,
                "needs_extension": self.needs_extension}


def _is_standard(gen: WittVector) -> bool:
    p = gen.p
    return all(not (k > 0 and k % p == 0) for c in gen.coords for k, _ in c.terms())


def _top_p_divisible(f: PolyU, p: int) -> Optional[tuple[int, int]]:
    for k in range(len(f.coeffs) - 1, 0, -1):
        if k % p == 0 and f.coeffs[k]:
            return k, f.coeffs[k]
    return None


def _reduce(gen: WittVector) -> tuple[WittVector, ReductionCertificate]:
    F, e, p = gen.field, gen.length, gen.p
    rem = gen
    C = WittVector.zero(F, e)
    R = WittVector.zero(F, e)
    for i in range(1, e + 1):
        while True:
            top = _top_p_divisible(rem.coords[i - 1], p)
            if top is None:
                break
            k, c = top
            x = WittVector.single(F, e, i, PolyU.monomial(F, F.pth_root(c), k // p))
            rem = witt_sum([(1, rem), (-1, wp(x))])
            C = witt_add(C, x)
        c0 = rem.coords[i - 1].coeff(0)
        if c0:
            b = F.solve_artin_schreier(c0)
            if b is not None:
                x = WittVector.single(F, e, i, PolyU.constant(F, b))
                rem = witt_sum([(1, rem), (-1, wp(x))])
                C = witt_add(C, x)
            else:
                r = WittVector.single(F, e, i, PolyU.constant(F, c0))
                rem = witt_sum([(1, rem), (-1, r)])
                R = witt_add(R, r)
    return rem, ReductionCertificate(C, R, not R.is_zero())


def _jumps_of(gen: WittVector) -> list:
    out = []
    prev = 0
    for c in gen.coords:
        prev = max(gen.p * prev, c.degree)
        out.append(prev)
    return out


def _normalized_flag(gen: WittVector) -> bool:
    if gen.coords[0].is_zero():
        return False
    return [c.degree for c in gen.coords] == _jumps_of(gen)


def standard_form(a: AswClass, extend: bool = False,
                  max_extension: int = 24) -> tuple[AswClass, ReductionCertificate]:
    """Reduce to standard form, slot 1 to e, highest p-divisible exponent first.

    Constants whose Artin-Schreier equation has no root in the current field
    are recorded in the certificate.  With ``extend=True`` the generator is
    moved to the smallest extension in which no such constant remains.
    """
    gen = a.generator
    reduced, cert = _reduce(gen)
    if cert.needs_extension and extend:
        F = gen.field
        for k in range(2, max_extension // F.n + 1):
            emb = extend_field(F, k)
            big = gen.map(emb)
            r2, c2 = _reduce(big)
            if not c2.needs_extension:
                gen, reduced, cert = big, r2, c2
                break
        else:
            raise FieldTooSmall(f"no extension of degree <= {max_extension} absorbs the residual constants")
    out = AswClass(reduced, standard_form=True, normalized=_normalized_flag(reduced),
                   separable=all(c.is_zero() or c.is_separable() for c in reduced.coords),
                   seed=a.seed)
    return out, cert


def in_image_wp(a: AswClass) -> str:
    std, cert = standard_form(a)
    if not std.generator.is_zero():
        return NO
    return YES_AFTER_EXTENSION if cert.needs_extension else YES


def extension_degree(a: AswClass) -> tuple[int, Optional[WittVector]]:
    """Return (m, b) with [K_a : K] = p^m over an algebraically closed constant field.

    b is the tail of the standard-form representative after its zero prefix
    (None when m = 0).  Constants of nonzero trace are absorbed, as they only
    generate constant-field extensions.
    """
    std, _ = standard_form(a)
    coords = std.generator.coords
    k = 0
    while k < len(coords) and coords[k].is_zero():
        k += 1
    m = len(coords) - k
    if m == 0:
        return 0, None
    return m, WittVector(coords[k:])


def upper_jumps(a: AswClass) -> JumpSequence:
    if not a.standard_form:
        raise NotStandardForm("upper_jumps needs a standard-form generator; call standard_form first")
    gen = a.generator
    if not _is_standard(gen):
        raise NotStandardForm("generator is flagged standard but has p-divisible exponents")
    if gen.coords[0].is_zero():
        raise DegeneratePresentation("first coordinate is zero; use extension_degree first")
    return JumpSequence(gen.p, tuple(int(j) for j in _jumps_of(gen)))


def artin_conductor(a: AswClass) -> int:
    """max over rho of p^(e-rho) deg p_rho, equal to the last upper jump."""
    gen = a.generator
    e, p = gen.length, gen.p
    return int(max(p ** (e - r) * c.degree for r, c in enumerate(gen.coords, start=1)))


def _random_poly(F: FiniteField, degree: int, rng: random.Random) -> PolyU:
    if degree == 0:
        return PolyU.constant(F, F.random_nonzero(rng))
    return PolyU(F, [F.random_element(rng) for _ in range(degree)] + [F.random_nonzero(rng)])


def _passes(q: WittVector, jumps: JumpSequence) -> bool:
    for rho, c in enumerate(q.coords, start=1):
        if c.degree != jumps[rho] or not c.is_separable():
            return False
    return True


def _try_normalize(gen: WittVector, jumps: JumpSequence, rng: random.Random,
                   retries: int) -> Optional[WittVector]:
    F, e = gen.field, gen.length
    if _passes(gen, jumps):
        return gen
    for _ in range(retries):
        # h_1 is a constant (deg i_0 = 0); it only moves the constant term of q_1.
        hs = [PolyU.constant(F, F.random_element(rng))]
        hs += [_random_poly(F, jumps[rho - 1], rng) for rho in range(2, e + 1)]
        q = witt_add(gen, wp(WittVector(tuple(hs))))
        if _passes(q, jumps):
            return q
    return None


def normalize_generator(a: AswClass, seed: int = 0, retries: int = DEFAULT_RETRIES,
                        extend: bool = False, max_extension: int = 24) -> AswClass:
    """Separable normalized generator a + wp(c) with deg h_rho = i_(rho-1).

    Coefficients of c come from ``random.Random(seed)``.  If the field is too
    small for any draw to pass, the smallest working extension degree is
    reported (or used, with ``extend=True``).
    """
    jumps = upper_jumps(a)
    gen = a.generator
    if gen.coords[0].degree % a.p == 0:
        raise NotStandardForm("deg p_1 must be prime to p")
    q = _try_normalize(gen, jumps, random.Random(seed), retries)
    if q is None:
        F = gen.field
        for k in range(2, max_extension // F.n + 1):
            big = gen.map(extend_field(F, k))
            q = _try_normalize(big, jumps, random.Random(seed), retries)
            if q is not None:
                break
        if q is None:
            raise FieldTooSmall(f"no separable normalized generator within degree {max_extension}")
        if not extend:
            raise FieldTooSmall(
                f"field {F} too small for a separable normalized generator; "
                f"extension of degree {k} suffices", required_extension=k)
    out = AswClass(q, standard_form=_is_standard(q), normalized=True, separable=True, seed=seed)
    if [int(j) for j in _jumps_of(q)] != list(jumps.jumps):  # pragma: no cover - guarded by _passes
        raise AssertionError("normalization changed the upper jumps")
    return out


@dataclass(frozen=True)
class InertiaBounds:
    """p^lower G is contained in T_v, and T_v is contained in p^upper G."""

    e: int
    lower: int
    upper: int

    @property
    def exact(self) -> bool:
        return self.lower == self.upper

    @property
    def verdict(self) -> str:
        if self.exact and self.upper == self.e:
            return "unramified"
        if self.exact and self.upper == 0:
            return "totally ramified"
        if self.exact:
            return f"T_v = p^{self.upper} G"
        return f"p^{self.lower} G <= T_v <= p^{self.upper} G"

    def to_json(self) -> dict:
        return {"e": self.e, "lower": self.lower, "upper": self.upper, "exact": self.exact,
                "verdict": self.verdict}


def inertia_bounds(valuations: Sequence[float], p: int) -> InertiaBounds:
    """Bounds on the inertia group from the valuations v(a_1), ..., v(a_e).

    Zero coordinates have valuation +inf (use ``math.inf``).
    """
    e = len(valuations)
    upper = 0
    while upper < e and valuations[upper] >= 0:
        upper += 1
    lower = e
    for m, v in enumerate(valuations, start=1):
        if v < 0 and v != -math.inf and int(v) % p != 0:
            lower = m - 1
            break
    return InertiaBounds(e, lower, upper)


def t_valuation(f: PolyU) -> float:
    """v_t of a polynomial in u = 1/t."""
    return math.inf if f.is_zero() else -f.degree


def generator_valuations(gen: WittVector) -> list[float]:
    return [t_valuation(c) for c in gen.coords]


__all__ = [
    "AswClass", "ReductionCertificate", "DegeneratePresentation", "NotStandardForm", "FieldTooSmall",
    "InertiaBounds", "standard_form", "in_image_wp", "extension_degree", "upper_jumps",
    "artin_conductor", "normalize_generator", "inertia_bounds", "t_valuation", "generator_valuations",
    "YES", "NO", "YES_AFTER_EXTENSION", "NEG_INF",
]
