"""Univariate polynomials in u = 1/t over a finite field, and root splitting."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Sequence, Union

from .fields import GF, FieldError, FieldSpec, FiniteField

# deg(0); compares below every integer and is never confused with one.
NEG_INF = float("-inf")

Degree = Union[int, float]


class SplittingFieldTooLarge(FieldError):
    pass


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


class PolyU:
    """Immutable polynomial sum(coeffs[k] * u^k) over ``field``."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: Sequence[int] = ()):
        self.field = field
        self.coeffs = _strip(coeffs)

    @classmethod
    def zero(cls, field: FiniteField) -> "PolyU":
        return cls(field, ())

    @classmethod
    def constant(cls, field: FiniteField, c: int) -> "PolyU":
        return cls(field, (c,))

    @classmethod
    def monomial(cls, field: FiniteField, c: int, k: int) -> "PolyU":
        return cls(field, (0,) * k + (c,))

    @classmethod
    def from_ints(cls, field: FiniteField, ints: Sequence[int]) -> "PolyU":
        """Coefficients given as integers, reduced into the prime field."""
        return cls(field, [field.from_int(c) for c in ints])

    @property
    def degree(self) -> Degree:
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def terms(self) -> Iterator[tuple[int, int]]:
        for k, c in enumerate(self.coeffs):
            if c:
                yield k, c

    def __eq__(self, other):
        if not isinstance(other, PolyU):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __repr__(self):
        if not self.coeffs:
            return "0"
        parts = []
        F = self.field
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if not c:
                continue
            cs = str(c) if F.n == 1 else f"[{','.join(map(str, F.to_vector(c)))}]"
            if k == 0:
                parts.append(cs)
            else:
                mono = "u" if k == 1 else f"u^{k}"
                parts.append(mono if c == 1 else f"{cs}*{mono}")
        return " + ".join(parts)

    def _check(self, other: "PolyU"):
        if self.field != other.field:
            raise FieldError(f"field mismatch: {self.field} vs {other.field}")

    def __add__(self, other: "PolyU") -> "PolyU":
        self._check(other)
        F = self.field
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] = F.add(out[i], c)
        return PolyU(F, out)

    def __neg__(self) -> "PolyU":
        F = self.field
        return PolyU(F, [F.neg(c) for c in self.coeffs])

    def __sub__(self, other: "PolyU") -> "PolyU":
        return self + (-other)

    def __mul__(self, other: "PolyU") -> "PolyU":
        self._check(other)
        return PolyU(self.field, _mul(self.field, self.coeffs, other.coeffs))

    def scale(self, c: int) -> "PolyU":
        F = self.field
        return PolyU(F, [F.mul(c, x) for x in self.coeffs])

    def __pow__(self, k: int) -> "PolyU":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result = PolyU.constant(self.field, 1)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __call__(self, x: int) -> int:
        F = self.field
        acc = 0
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def frobenius(self) -> "PolyU":
        """self^p, computed as coefficient Frobenius with exponents scaled by p."""
        F = self.field
        p = F.p
        out = [0] * (p * (len(self.coeffs) - 1) + 1) if self.coeffs else []
        for k, c in self.terms():
            out[p * k] = F.frob(c)
        return PolyU(F, out)

    def derivative(self) -> "PolyU":
        F = self.field
        return PolyU(F, [F.scale(k, c) for k, c in enumerate(self.coeffs)][1:])

    def monic(self) -> "PolyU":
        if not self.coeffs:
            return self
        return self.scale(self.field.inv(self.leading))

    def divmod(self, other: "PolyU") -> tuple["PolyU", "PolyU"]:
        self._check(other)
        q, r = _divmod(self.field, self.coeffs, other.coeffs)
        return PolyU(self.field, q), PolyU(self.field, r)

    def __mod__(self, other: "PolyU") -> "PolyU":
        return self.divmod(other)[1]

    def __floordiv__(self, other: "PolyU") -> "PolyU":
        return self.divmod(other)[0]

    def gcd(self, other: "PolyU") -> "PolyU":
        a, b = self, other
        while not b.is_zero():
            a, b = b, a % b
        return a.monic()

    def is_separable(self) -> bool:
        """Square-free in u (over an algebraic closure)."""
        if self.is_zero():
            return False
        if self.is_constant():
            return True
        return self.gcd(self.derivative()).is_constant()

    def map_coeffs(self, fn: Callable[[int], int], field: FiniteField) -> "PolyU":
        return PolyU(field, [fn(c) for c in self.coeffs])

    def to_json(self) -> dict:
        return {"coeffs": [self.field.to_vector(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, field: FiniteField, data) -> "PolyU":
        raw = data["coeffs"] if isinstance(data, dict) else data
        out = []
        for c in raw:
            out.append(field.from_vector(c) if isinstance(c, (list, tuple)) else field.from_int(int(c)))
        return cls(field, out)


# -- dense kernels on coefficient tuples --------------------------------------

def _mul(F: FiniteField, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    if F.n == 1:
        p = F.p
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return [c % p for c in out]
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = F.add(out[i + j], F.mul(x, y))
    return out


def _divmod(F: FiniteField, a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    b = list(_strip(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    r = list(_strip(a))
    db = len(b) - 1
    if len(r) - 1 < db:
        return [], r
    inv_lead = F.inv(b[-1])
    q = [0] * (len(r) - db)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        c = F.mul(r[-1], inv_lead)
        q[shift] = c
        for i, bc in enumerate(b):
            if bc:
                r[shift + i] = F.sub(r[shift + i], F.mul(c, bc))
        r = list(_strip(r))
    return q, r


def _powmod(F: FiniteField, base: PolyU, e: int, m: PolyU) -> PolyU:
    result = PolyU.constant(F, 1) % m
    b = base % m
    while e:
        if e & 1:
            result = (result * b) % m
        e >>= 1
        if e:
            b = (b * b) % m
    return result


def _pth_root_poly(f: PolyU) -> PolyU:
    """g with g^p = f, for f whose exponents are all divisible by p."""
    F = f.field
    p = F.p
    return PolyU(F, [F.pth_root(f.coeff(k)) for k in range(0, len(f.coeffs), p)])


def radical(f: PolyU) -> PolyU:
    """Monic product of the distinct irreducible factors of f."""
    f = f.monic()
    if f.is_constant():
        return PolyU.constant(f.field, 1)
    d = f.derivative()
    if d.is_zero():
        return radical(_pth_root_poly(f))
    g = f.gcd(d)
    if g.is_constant():
        return f
    w = f // g
    r = radical(g)
    return ((w * r) // w.gcd(r)).monic()


def factor_degrees(f: PolyU) -> list[int]:
    """Sorted distinct degrees of the irreducible factors of f (distinct-degree factorization)."""
    F = f.field
    r = radical(f)
    x = PolyU.monomial(F, 1, 1)
    out = []
    d = 0
    h = x
    while r.degree >= 1:
        d += 1
        if 2 * d > r.degree:
            out.append(int(r.degree))
            break
        h = _powmod(F, h, F.q, r)
        g = r.gcd(h - x)
        if g.degree >= 1:
            out.append(d)
            r = r // g
            h = h % r if r.degree >= 1 else h
    return sorted(set(out))


@dataclass(frozen=True)
class Embedding:
    """Field embedding source -> target, determined by the image of the generator w."""

    source: FiniteField
    target: FiniteField
    image_of_w: int

    def __call__(self, a: int) -> int:
        S, T = self.source, self.target
        if S.n == 1:
            return a
        acc = 0
        for c in reversed(S.to_vector(a)):
            acc = T.add(T.mul(acc, self.image_of_w), c)
        return acc

    def poly(self, f: PolyU) -> PolyU:
        return f.map_coeffs(self, self.target)


def identity_embedding(F: FiniteField) -> Embedding:
    return Embedding(F, F, F.from_vector([0, 1]) if F.n > 1 else 0)


def roots_in_field(f: PolyU, rng: random.Random | None = None) -> list[int]:
    """Distinct roots of f lying in its own coefficient field."""
    F = f.field
    if f.is_zero():
        raise ValueError("roots of the zero polynomial")
    rng = rng or random.Random(0)
    f = f.monic()
    if f.is_constant():
        return []
    x = PolyU.monomial(F, 1, 1)
    g = f.gcd(_powmod(F, x, F.q, f) - x)
    return sorted(_split_linear(g, rng))


def _split_linear(g: PolyU, rng: random.Random) -> list[int]:
    F = g.field
    if g.degree < 1:
        return []
    if g.degree == 1:
        return [F.neg(g.monic().coeff(0))]
    x = PolyU.monomial(F, 1, 1)
    while True:
        a = F.random_element(rng)
        if F.p == 2:
            # absolute trace polynomial of (c*x + a) splits g for random c, a
            c = F.random_nonzero(rng)
            t = PolyU(F, [a, c]) % g
            acc = t
            for _ in range(F.n - 1):
                t = (t * t) % g
                acc = acc + t
            h = g.gcd(acc)
        else:
            t = _powmod(F, PolyU(F, [a, 1]), (F.q - 1) // 2, g)
            h = g.gcd(t - PolyU.constant(F, 1))
        if 1 <= h.degree < g.degree:
            return _split_linear(h, rng) + _split_linear(g // h, rng)


def extend_field(F: FiniteField, k: int) -> Embedding:
    """Embedding of F into its degree-k extension (default modulus)."""
    if k == 1:
        return identity_embedding(F)
    big = GF(FieldSpec(F.p, F.n * k))
    if F.n == 1:
        return Embedding(F, big, 0)
    mod = PolyU(big, list(F.modulus))
    roots = roots_in_field(mod)
    if not roots:  # pragma: no cover
        raise FieldError("modulus has no root in the extension")
    return Embedding(F, big, roots[0])


@dataclass(frozen=True)
class SplitResult:
    embedding: Embedding
    roots: tuple[int, ...]
    leading: int

    @property
    def field(self) -> FiniteField:
        return self.embedding.target

    @property
    def extended(self) -> bool:
        return self.embedding.target != self.embedding.source


DEFAULT_MAX_EXTENSION = 24


def splitting_degree(polys: Sequence[PolyU]) -> int:
    L = 1
    for f in polys:
        if f.degree >= 1:
            for d in factor_degrees(f):
                L = L * d // math.gcd(L, d)
    return L


def poly_split_roots(f: PolyU, max_degree: int = DEFAULT_MAX_EXTENSION,
                     embedding: Embedding | None = None) -> SplitResult:
    """Split f over its splitting field and return the multiset of roots.

    ``embedding`` forces the target field (it must contain the splitting
    field); otherwise the minimal splitting field is constructed.
    """
    F = f.field
    if f.is_zero():
        raise ValueError("cannot split the zero polynomial")
    if embedding is None:
        L = splitting_degree([f])
        if F.n * L > max_degree:
            raise SplittingFieldTooLarge(
                f"splitting field has degree {F.n * L} over F_{F.p}, above the bound {max_degree}")
        embedding = extend_field(F, L)
    g = embedding.poly(f)
    E = g.field
    roots = []
    rest = g.monic()
    for r in roots_in_field(radical(g)):
        lin = PolyU(E, [E.neg(r), 1])
        while True:
            q, rem = rest.divmod(lin)
            if not rem.is_zero():
                break
            roots.append(r)
            rest = q
    if rest.degree >= 1:
        raise FieldError("target field does not split the polynomial")
    return SplitResult(embedding, tuple(roots), g.leading)


def product_of_linear(E: FiniteField, roots: Sequence[int], lead: int = 1) -> PolyU:
    out = PolyU.constant(E, lead)
    for r in roots:
        out = out * PolyU(E, [E.neg(r), 1])
    return out
