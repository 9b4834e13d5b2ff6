"""Truncated Witt vectors over F_q[u] and the Artin-Schreier-Witt operator.

Ring operations are computed through ghost components of a lift: coordinates
are lifted to (Z/p^e)[w][u] (w generating the Galois ring over Z/p^e), the
ghost sums are formed there, and the Witt coordinates recovered by the
recursion that defines the universal polynomials.  Working modulo p^e is
enough: coordinate n is recovered modulo p^(e-n) and only its residue mod p is
kept.  :mod:`aswram.universal` provides the explicit polynomials themselves,
which the tests use as an independent route.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .fields import FieldError, FiniteField
from .polys import Embedding, PolyU
from .universal import IntPoly, ghost, witt_universal_polys  # noqa: F401  (re-export ghost)


class WittShapeError(ValueError):
    """Operands of different characteristic, length or coefficient field."""


@dataclass(frozen=True)
class WittVector:
    coords: tuple[PolyU, ...]

    def __post_init__(self):
        if not self.coords:
            raise WittShapeError("Witt vectors have length >= 1")
        F = self.coords[0].field
        if any(c.field != F for c in self.coords):
            raise WittShapeError("all coordinates must lie over the same field")
        object.__setattr__(self, "coords", tuple(self.coords))

    @classmethod
    def zero(cls, field: FiniteField, length: int) -> "WittVector":
        return cls(tuple(PolyU.zero(field) for _ in range(length)))

    @classmethod
    def single(cls, field: FiniteField, length: int, slot: int, value: PolyU) -> "WittVector":
        """Vector with ``value`` at 1-based ``slot`` and zeros elsewhere."""
        coords = [PolyU.zero(field) for _ in range(length)]
        coords[slot - 1] = value
        return cls(tuple(coords))

    @classmethod
    def from_ints(cls, field: FiniteField, coords: Sequence[Sequence[int]]) -> "WittVector":
        return cls(tuple(PolyU.from_ints(field, c) for c in coords))

    @property
    def field(self) -> FiniteField:
        return self.coords[0].field

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def length(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return all(c.is_zero() for c in self.coords)

    def degrees(self) -> list:
        return [c.degree for c in self.coords]

    def __repr__(self):
        return "(" + ", ".join(map(repr, self.coords)) + ")"

    def __add__(self, other: "WittVector") -> "WittVector":
        return witt_add(self, other)

    def __sub__(self, other: "WittVector") -> "WittVector":
        return witt_sum([(1, self), (-1, other)])

    def __neg__(self) -> "WittVector":
        return witt_neg(self)

    def frobenius(self) -> "WittVector":
        return WittVector(tuple(c.frobenius() for c in self.coords))

    def prefix(self, m: int) -> "WittVector":
        return WittVector(self.coords[:m])

    def map(self, emb: Embedding) -> "WittVector":
        return WittVector(tuple(emb.poly(c) for c in self.coords))

    def to_json(self) -> dict:
        return {"p": self.p, "e": self.length, "coords": [c.to_json() for c in self.coords]}

    @classmethod
    def from_json(cls, field: FiniteField, data: dict) -> "WittVector":
        coords = tuple(PolyU.from_json(field, c) for c in data["coords"])
        if "e" in data and int(data["e"]) != len(coords):
            raise WittShapeError(f"declared length {data['e']} but {len(coords)} coordinates given")
        if "p" in data and int(data["p"]) != field.p:
            raise WittShapeError(f"declared p={data['p']} but field has p={field.p}")
        return cls(coords)


# -- Galois-ring lift -----------------------------------------------------------

class _LiftRing:
    """Polynomials in u over GR(p^N, n) = (Z/p^N)[w]/(lifted modulus).

    Elements are flat int lists: coefficient of u^b w^a sits at index b*n + a.
    """

    def __init__(self, field: FiniteField, N: int):
        self.field = field
        self.p = field.p
        self.n = field.n
        self.M = field.p ** N
        self.mod = list(field.modulus)

    def lift(self, f: PolyU) -> list[int]:
        out = []
        for c in f.coeffs:
            out.extend(self.field.to_vector(c))
        return out

    def reduce(self, a: list[int]) -> PolyU:
        F, n, p = self.field, self.n, self.p
        return PolyU(F, [F.from_vector([x % p for x in a[b * n:(b + 1) * n]]) for b in range(len(a) // n)])

    def add(self, a: list[int], b: list[int], sign: int = 1) -> list[int]:
        if len(a) < len(b):
            a = a + [0] * (len(b) - len(a))
        out = list(a)
        M = self.M
        for i, x in enumerate(b):
            out[i] = (out[i] + sign * x) % M
        return out

    def scale(self, a: list[int], k: int) -> list[int]:
        M = self.M
        return [x * k % M for x in a]

    def exact_div(self, a: list[int], d: int) -> list[int]:
        out = []
        for x in a:
            q, r = divmod(x, d)
            if r:
                raise ArithmeticError(f"inexact division by {d} in the Witt recursion")
            out.append(q)
        return out

    def mul(self, a: list[int], b: list[int]) -> list[int]:
        n, M = self.n, self.M
        if not a or not b:
            return []
        A, B = len(a) // n, len(b) // n
        stride = 2 * n - 1
        bound = M * M * n * min(A, B) + 1
        width = (bound.bit_length() + 8) // 8

        def pack(x: list[int], count: int) -> int:
            if n == 1:
                slots = x
            else:
                slots = [0] * (count * stride)
                for i in range(count):
                    slots[i * stride:i * stride + n] = x[i * n:(i + 1) * n]
            return int.from_bytes(b"".join(v.to_bytes(width, "little") for v in slots), "little")

        prod = pack(a, A) * pack(b, B)
        total = (A + B - 1) * stride
        raw = prod.to_bytes(total * width + width, "little")
        slots = [int.from_bytes(raw[k * width:(k + 1) * width], "little") for k in range(total)]
        if n == 1:
            return [v % M for v in slots]
        out = []
        mod = self.mod
        for bdeg in range(A + B - 1):
            c = slots[bdeg * stride:(bdeg + 1) * stride]
            for k in range(stride - 1, n - 1, -1):
                t = c[k]
                if t:
                    for j in range(n):
                        c[k - n + j] -= t * mod[j]
            out.extend(v % M for v in c[:n])
        return out

    def pow(self, a: list[int], k: int) -> list[int]:
        result = None
        base = a
        while k:
            if k & 1:
                result = base if result is None else self.mul(result, base)
            k >>= 1
            if k:
                base = self.mul(base, base)
        if result is None:
            return self.one()
        return result

    def one(self) -> list[int]:
        return [1] + [0] * (self.n - 1)


def _check_shapes(vectors: Sequence[WittVector]):
    first = vectors[0]
    for v in vectors[1:]:
        if v.field != first.field:
            raise WittShapeError(f"field mismatch: {first.field} vs {v.field}")
        if v.length != first.length:
            raise WittShapeError(f"length mismatch: {first.length} vs {v.length}")


def witt_sum(terms: Iterable[tuple[int, WittVector]]) -> WittVector:
    """Signed Witt sum of the given vectors (each sign +1 or -1)."""
    terms = list(terms)
    vectors = [v for _, v in terms]
    _check_shapes(vectors)
    F, e, p = vectors[0].field, vectors[0].length, vectors[0].p
    if len(terms) == 1 and terms[0][0] == 1:
        return vectors[0]
    R = _LiftRing(F, e)
    lifts = [[R.lift(c) for c in v.coords] for v in vectors]
    # powers[k][i] holds lift_k[i]^(p^j) for the largest j computed so far
    powers = [list(lv) for lv in lifts]
    out: list[list[int]] = []
    out_powers: list[list[int]] = []
    for n in range(e):
        num: list[int] = []
        for k, (sign, _) in enumerate(terms):
            for i in range(n + 1):
                if i < n:
                    powers[k][i] = R.pow(powers[k][i], p)
                num = R.add(num, R.scale(powers[k][i], p ** i), sign)
        for i in range(n):
            out_powers[i] = R.pow(out_powers[i], p)
            num = R.add(num, R.scale(out_powers[i], p ** i), -1)
        c = R.exact_div(num, p ** n)
        out.append(c)
        out_powers.append(c)
    return WittVector(tuple(R.reduce(c) for c in out))


def witt_add(x: WittVector, y: WittVector) -> WittVector:
    return witt_sum([(1, x), (1, y)])


def witt_neg(x: WittVector) -> WittVector:
    if x.p != 2:
        # [-1] is (-1, 0, 0, ...) for odd p, so negation is coordinatewise.
        return WittVector(tuple(-c for c in x.coords))
    return witt_sum([(-1, x)])


def witt_sub(x: WittVector, y: WittVector) -> WittVector:
    return witt_sum([(1, x), (-1, y)])


def frobenius(x: WittVector) -> WittVector:
    return x.frobenius()


def wp(x: WittVector) -> WittVector:
    """Artin-Schreier-Witt operator Frob - Id."""
    return witt_add(frobenius(x), witt_neg(x))


# -- evaluation of the explicit universal polynomials (independent route) ------

def _eval_mod_p(poly: IntPoly, point: Sequence[PolyU]) -> PolyU:
    F = point[0].field
    cache: dict[tuple[int, int], PolyU] = {}
    total = PolyU.zero(F)
    for mono, c in poly.terms.items():
        c %= F.p
        if not c:
            continue
        term = PolyU.constant(F, F.from_int(c))
        for i, k in enumerate(mono):
            if k:
                key = (i, k)
                if key not in cache:
                    cache[key] = point[i] ** k
                term = term * cache[key]
        total = total + term
    return total


def witt_add_universal(x: WittVector, y: WittVector) -> WittVector:
    """Addition by direct evaluation of S_0..S_{e-1} reduced mod p (slow; for checking)."""
    _check_shapes([x, y])
    polys = witt_universal_polys(x.p, x.length)
    pt = list(x.coords) + list(y.coords)
    return WittVector(tuple(_eval_mod_p(s, pt) for s in polys.add))


def witt_neg_universal(x: WittVector) -> WittVector:
    polys = witt_universal_polys(x.p, x.length)
    pt = list(x.coords) + [PolyU.zero(x.field)] * x.length
    return WittVector(tuple(_eval_mod_p(s, pt) for s in polys.neg))


def same_shape(x: WittVector, y: WittVector) -> bool:
    try:
        _check_shapes([x, y])
    except (WittShapeError, FieldError):
        return False
    return True
