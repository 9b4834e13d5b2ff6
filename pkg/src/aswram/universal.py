"""Universal Witt addition and negation polynomials over the integers.

S_n and I_n are defined by the ghost identities

    w_n(S(X, Y)) = w_n(X) + w_n(Y),    w_n(I(X)) = -w_n(X),

with w_n(X) = sum_{i <= n} p^i X_i^(p^(n-i)).  They are built once per
(p, length) by the usual recursion and cached.  Variables are ordered
X_0..X_{e-1}, Y_0..Y_{e-1}.
"""
from __future__ import annotations

import functools
import random
import warnings
from dataclasses import dataclass
from typing import Mapping, Sequence

from .fields import is_prime

MAX_LENGTH = 5

Monomial = tuple[int, ...]


class WittPolynomialError(ArithmeticError):
    """Inexact division or failed ghost identity while building Witt polynomials."""


class IntPoly:
    """Sparse multivariate polynomial with integer coefficients."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, int] | None = None):
        self.nvars = nvars
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def var(cls, nvars: int, i: int) -> "IntPoly":
        e = [0] * nvars
        e[i] = 1
        return cls(nvars, {tuple(e): 1})

    @classmethod
    def const(cls, nvars: int, c: int) -> "IntPoly":
        return cls(nvars, {(0,) * nvars: c})

    def __len__(self):
        return len(self.terms)

    def __eq__(self, other):
        return isinstance(other, IntPoly) and self.terms == other.terms

    def __add__(self, other: "IntPoly") -> "IntPoly":
        out = dict(self.terms)
        for m, c in other.terms.items():
            out[m] = out.get(m, 0) + c
        return IntPoly(self.nvars, out)

    def __neg__(self) -> "IntPoly":
        return IntPoly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "IntPoly") -> "IntPoly":
        return self + (-other)

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        if isinstance(other, int):
            return IntPoly(self.nvars, {m: c * other for m, c in self.terms.items()})
        out: dict[Monomial, int] = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                m = tuple(x + y for x, y in zip(ma, mb))
                out[m] = out.get(m, 0) + ca * cb
        return IntPoly(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        if len(self.terms) == 1:
            (m, c), = self.terms.items()
            return IntPoly(self.nvars, {tuple(x * k for x in m): c ** k})
        # Repeated multiplication by a small base beats squaring a large result.
        out = IntPoly.const(self.nvars, 1)
        for _ in range(k):
            out = out * self
        return out

    def exact_div(self, d: int) -> "IntPoly":
        out = {}
        for m, c in self.terms.items():
            q, r = divmod(c, d)
            if r:
                raise WittPolynomialError(f"coefficient {c} of {m} not divisible by {d}")
            out[m] = q
        return IntPoly(self.nvars, out)

    def reduce_mod(self, p: int) -> "IntPoly":
        return IntPoly(self.nvars, {m: c % p for m, c in self.terms.items()})

    def degree_in(self, i: int) -> int:
        return max((m[i] for m in self.terms), default=0)

    def evaluate(self, point: Sequence, one=1):
        """Evaluate at ``point``; entries may be ints or any commutative ring values."""
        cache: dict[tuple[int, int], object] = {}

        def power(i: int, k: int):
            key = (i, k)
            if key not in cache:
                cache[key] = point[i] ** k
            return cache[key]

        total = None
        for m, c in self.terms.items():
            term = c * one
            for i, k in enumerate(m):
                if k:
                    term = term * power(i, k)
            total = term if total is None else total + term
        return 0 * one if total is None else total

    def __repr__(self):
        names = [f"X{i}" for i in range(self.nvars // 2)] + [f"Y{i}" for i in range(self.nvars // 2)]
        parts = []
        for m, c in sorted(self.terms.items(), reverse=True):
            mono = "*".join(n if k == 1 else f"{n}^{k}" for n, k in zip(names, m) if k)
            parts.append(f"{c}" if not mono else (mono if c == 1 else f"{c}*{mono}"))
        return " + ".join(parts) if parts else "0"


def ghost(coords: Sequence, p: int) -> list:
    """Ghost components w_0..w_{e-1} of an integer (or characteristic 0) Witt vector."""
    out = []
    for n in range(len(coords)):
        w = 0
        for i in range(n + 1):
            w = w + p ** i * coords[i] ** (p ** (n - i))
        out.append(w)
    return out


@dataclass(frozen=True)
class UniversalPolySet:
    p: int
    length: int
    add: tuple[IntPoly, ...]
    neg: tuple[IntPoly, ...]

    def add_mod_p(self) -> tuple[IntPoly, ...]:
        return tuple(s.reduce_mod(self.p) for s in self.add)

    def neg_mod_p(self) -> tuple[IntPoly, ...]:
        return tuple(s.reduce_mod(self.p) for s in self.neg)

    def eval_add(self, x: Sequence[int], y: Sequence[int]) -> list[int]:
        pt = list(x) + list(y)
        return [s.evaluate(pt) for s in self.add]

    def eval_neg(self, x: Sequence[int]) -> list[int]:
        pt = list(x) + [0] * self.length
        return [s.evaluate(pt) for s in self.neg]


def _ghost_poly(coords: Sequence[IntPoly], p: int, n: int, upto: int | None = None) -> IntPoly:
    nv = coords[0].nvars
    upto = n if upto is None else upto
    w = IntPoly(nv)
    for i in range(upto + 1):
        w = w + (coords[i] ** (p ** (n - i))) * (p ** i)
    return w


def _solve_recursion(targets: list[IntPoly], p: int) -> list[IntPoly]:
    """Coordinates C with w_n(C) = targets[n] for every n."""
    out: list[IntPoly] = []
    for n, target in enumerate(targets):
        rest = _ghost_poly(out, p, n, n - 1) if n else IntPoly(target.nvars)
        out.append((target - rest).exact_div(p ** n))
    return out


@functools.lru_cache(maxsize=None)
def witt_universal_polys(p: int, length: int, max_length: int = MAX_LENGTH) -> UniversalPolySet:
    """Addition polynomials S_n and negation polynomials I_n for W_length over Z."""
    if not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")
    if not 1 <= length <= max_length:
        raise ValueError(f"length must be in [1, {max_length}], got {length}")
    if length == MAX_LENGTH and p > 2:
        warnings.warn(f"universal Witt polynomials for p={p}, length={length} are very large",
                      RuntimeWarning, stacklevel=2)
    nv = 2 * length
    X = [IntPoly.var(nv, i) for i in range(length)]
    Y = [IntPoly.var(nv, length + i) for i in range(length)]
    S = _solve_recursion([_ghost_poly(X, p, n) + _ghost_poly(Y, p, n) for n in range(length)], p)
    I = _solve_recursion([-_ghost_poly(X, p, n) for n in range(length)], p)
    _check_ghost_identities(p, length, S, I)
    return UniversalPolySet(p, length, tuple(S), tuple(I))


def _check_ghost_identities(p: int, length: int, S: list[IntPoly], I: list[IntPoly], samples: int = 4):
    rng = random.Random(p * 1000 + length)
    for _ in range(samples):
        x = [rng.randint(-9, 9) for _ in range(length)]
        y = [rng.randint(-9, 9) for _ in range(length)]
        pt = x + y
        s = [f.evaluate(pt) for f in S]
        i = [f.evaluate(pt) for f in I]
        gx, gy = ghost(x, p), ghost(y, p)
        if ghost(s, p) != [a + b for a, b in zip(gx, gy)]:
            raise WittPolynomialError(f"addition ghost identity fails at {pt}")
        if ghost(i, p) != [-a for a in gx]:
            raise WittPolynomialError(f"negation ghost identity fails at {x}")
