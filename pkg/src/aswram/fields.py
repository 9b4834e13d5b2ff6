"""Finite fields F_{p^n} with elements encoded as small integers.

An element of F_{p^n} = F_p[w]/(modulus) is stored as the integer whose
base-p digits are its coefficients on 1, w, ..., w^(n-1).  Elements of the
prime field are therefore exactly the integers 0..p-1, which keeps the common
n = 1 case on plain modular arithmetic.
"""
from __future__ import annotations

import functools
import random
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

MAX_PRIME = 97
# Fields up to this order get exp/log tables; larger ones use digit arithmetic.
TABLE_LIMIT = 1 << 16


class FieldError(ValueError):
    """Invalid field data (non-prime characteristic, reducible modulus, ...)."""


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# -- dense polynomials over the prime field (ascending lists of ints) --------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _fp_mul(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim([c % p for c in out])


def _fp_mod(a: Sequence[int], m: Sequence[int], p: int) -> list[int]:
    a = [c % p for c in a]
    _trim(a)
    dm = len(m) - 1
    inv_lead = pow(m[-1], p - 2, p)
    while len(a) - 1 >= dm:
        c = a[-1] * inv_lead % p
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] = (a[shift + i] - c * mc) % p
        _trim(a)
    return a


def _fp_gcd(a: Sequence[int], b: Sequence[int], p: int) -> list[int]:
    a, b = _trim(list(a)), _trim(list(b))
    while b:
        a, b = b, _fp_mod(a, b, p)
    if a:
        inv = pow(a[-1], p - 2, p)
        a = [c * inv % p for c in a]
    return a


def _fp_powmod(base: Sequence[int], e: int, m: Sequence[int], p: int) -> list[int]:
    result = [1]
    b = _fp_mod(base, m, p)
    while e:
        if e & 1:
            result = _fp_mod(_fp_mul(result, b, p), m, p)
        e >>= 1
        if e:
            b = _fp_mod(_fp_mul(b, b, p), m, p)
    return result


def is_irreducible_mod_p(f: Sequence[int], p: int) -> bool:
    """Rabin's irreducibility test for a monic polynomial over F_p."""
    f = _trim([c % p for c in f])
    n = len(f) - 1
    if n < 1 or f[-1] != 1:
        return False
    if n == 1:
        return True
    x = [0, 1]

    def frob_iter(k: int) -> list[int]:
        h = x
        for _ in range(k):
            h = _fp_powmod(h, p, f, p)
        return h

    h = frob_iter(n)
    if _trim([(a - b) % p for a, b in _zip_pad(h, x)]):
        return False
    for r in prime_factors(n):
        h = frob_iter(n // r)
        g = _fp_gcd(f, _trim([(a - b) % p for a, b in _zip_pad(h, x)]), p)
        if len(g) != 1:
            return False
    return True


def _zip_pad(a: Sequence[int], b: Sequence[int]):
    n = max(len(a), len(b))
    return zip(list(a) + [0] * (n - len(a)), list(b) + [0] * (n - len(b)))


@functools.lru_cache(maxsize=None)
def default_modulus(p: int, n: int) -> tuple[int, ...]:
    """First monic irreducible of degree n over F_p in lexicographic order."""
    if n == 1:
        return (0, 1)
    for code in range(p ** n):
        low = [(code // p ** i) % p for i in range(n)]
        if low[0] == 0:
            continue
        f = low + [1]
        if is_irreducible_mod_p(f, p):
            return tuple(f)
    raise FieldError(f"no irreducible polynomial of degree {n} over F_{p}")  # pragma: no cover


@dataclass(frozen=True)
class FieldSpec:
    p: int
    n: int = 1
    modulus: Optional[tuple[int, ...]] = None

    def __post_init__(self):
        if not is_prime(self.p) or self.p > MAX_PRIME:
            raise FieldError(f"characteristic must be a prime in [2, {MAX_PRIME}], got {self.p}")
        if self.n < 1:
            raise FieldError(f"extension degree must be >= 1, got {self.n}")
        if self.modulus is None:
            object.__setattr__(self, "modulus", default_modulus(self.p, self.n))
        else:
            m = tuple(int(c) % self.p for c in self.modulus)
            object.__setattr__(self, "modulus", m)
            if len(m) != self.n + 1 or m[-1] != 1:
                raise FieldError(f"modulus must be monic of degree {self.n}: {list(m)}")
            if not is_irreducible_mod_p(m, self.p):
                raise FieldError(f"modulus {list(m)} is reducible over F_{self.p}")

    @property
    def order(self) -> int:
        return self.p ** self.n

    def to_json(self) -> dict:
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_json(cls, data: dict) -> "FieldSpec":
        mod = data.get("modulus")
        return cls(int(data["p"]), int(data.get("n", 1)), tuple(mod) if mod is not None else None)


class FiniteField:
    """Arithmetic in F_{p^n}; obtain instances through :func:`GF`."""

    def __init__(self, spec: FieldSpec):
        self.spec = spec
        self.p = spec.p
        self.n = spec.n
        self.q = spec.order
        self.modulus = spec.modulus
        self._exp: Optional[list[int]] = None
        self._log: Optional[list[int]] = None
        if self.n > 1 and self.q <= TABLE_LIMIT:
            self._build_tables()

    def __repr__(self):
        if self.n == 1:
            return f"GF({self.p})"
        return f"GF({self.p}^{self.n}, modulus={list(self.modulus)})"

    def __eq__(self, other):
        return isinstance(other, FiniteField) and self.spec == other.spec

    def __hash__(self):
        return hash(self.spec)

    zero = 0
    one = 1

    # -- encoding -------------------------------------------------------

    def to_vector(self, a: int) -> list[int]:
        p = self.p
        out = []
        for _ in range(self.n):
            a, r = divmod(a, p)
            out.append(r)
        return out

    def from_vector(self, vec: Sequence[int]) -> int:
        if len(vec) > self.n:
            raise FieldError(f"vector {list(vec)} too long for {self}")
        a = 0
        for c in reversed(list(vec)):
            a = a * self.p + (int(c) % self.p)
        return a

    def from_int(self, k: int) -> int:
        """Image of an integer under Z -> F_p -> F_q."""
        return k % self.p

    def elements(self) -> Iterator[int]:
        return iter(range(self.q))

    def random_element(self, rng: random.Random) -> int:
        return rng.randrange(self.q)

    def random_nonzero(self, rng: random.Random) -> int:
        return rng.randrange(1, self.q)

    # -- arithmetic -------------------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a + b) % self.p
        if self.p == 2:
            return a ^ b
        va, vb = self.to_vector(a), self.to_vector(b)
        return self.from_vector([x + y for x, y in zip(va, vb)])

    def neg(self, a: int) -> int:
        if self.n == 1:
            return (-a) % self.p
        if self.p == 2:
            return a
        return self.from_vector([-x for x in self.to_vector(a)])

    def sub(self, a: int, b: int) -> int:
        if self.n == 1:
            return (a - b) % self.p
        if self.p == 2:
            return a ^ b
        va, vb = self.to_vector(a), self.to_vector(b)
        return self.from_vector([x - y for x, y in zip(va, vb)])

    def mul(self, a: int, b: int) -> int:
        if self.n == 1:
            return a * b % self.p
        if a == 0 or b == 0:
            return 0
        if self._exp is not None:
            return self._exp[self._log[a] + self._log[b]]
        return self._mul_digits(a, b)

    def _mul_digits(self, a: int, b: int) -> int:
        prod = _fp_mul(self.to_vector(a), self.to_vector(b), self.p)
        return self.from_vector(_fp_mod(prod, self.modulus, self.p))

    def scale(self, k: int, a: int) -> int:
        return self.mul(k % self.p, a)

    def pow(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv(a), -e
        if self.n == 1:
            return pow(a, e, self.p)
        if a == 0:
            return 1 if e == 0 else 0
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        result, base = 1, a
        while e:
            if e & 1:
                result = self._mul_digits(result, base)
            e >>= 1
            if e:
                base = self._mul_digits(base, base)
        return result

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inverse of zero in a finite field")
        if self.n == 1:
            return pow(a, self.p - 2, self.p)
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def frob(self, a: int) -> int:
        return self.pow(a, self.p)

    def pth_root(self, a: int) -> int:
        # Frobenius has order n on F_{p^n}, so its inverse is Frob^(n-1).
        return self.pow(a, self.q // self.p)

    def trace(self, a: int) -> int:
        """Absolute trace to F_p, returned as a prime-field element."""
        t, x = 0, a
        for _ in range(self.n):
            t = self.add(t, x)
            x = self.frob(x)
        return t

    def solve_artin_schreier(self, c: int) -> Optional[int]:
        """Some b with b^p - b = c, or None when c has nonzero trace."""
        if self.trace(c) != 0:
            return None
        if self.q <= 4096:
            for b in range(self.q):
                if self.sub(self.frob(b), b) == c:
                    return b
            raise AssertionError("trace-zero element outside the Artin-Schreier image")  # pragma: no cover
        # b -> b^p - b is F_p-linear; solve on the power basis.
        basis = [self.from_vector([0] * j + [1]) for j in range(self.n)]
        cols = [self.to_vector(self.sub(self.frob(e), e)) for e in basis]
        sol = solve_linear_mod_p([[cols[j][i] for j in range(self.n)] for i in range(self.n)],
                                 self.to_vector(c), self.p)
        if sol is None:  # pragma: no cover
            raise AssertionError("trace-zero element outside the Artin-Schreier image")
        return self.from_vector(sol)

    # -- tables -----------------------------------------------------------

    def _build_tables(self):
        q1 = self.q - 1
        factors = prime_factors(q1)
        for g in range(2, self.q):
            if all(self.pow(g, q1 // r) != 1 for r in factors):
                break
        else:  # pragma: no cover
            raise FieldError("no primitive element found")
        exp = [0] * (2 * q1)
        log = [0] * self.q
        x = 1
        for i in range(q1):
            exp[i] = x
            log[x] = i
            x = self._mul_digits(x, g)
        for i in range(q1, 2 * q1):
            exp[i] = exp[i - q1]
        self._exp, self._log = exp, log
        self.generator = g


def solve_linear_mod_p(A: list[list[int]], b: Sequence[int], p: int) -> Optional[list[int]]:
    """One solution of A x = b over F_p (Gaussian elimination), or None."""
    rows, cols = len(A), len(A[0]) if A else 0
    M = [[A[i][j] % p for j in range(cols)] + [b[i] % p] for i in range(rows)]
    pivots = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if M[i][c]), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = pow(M[r][c], p - 2, p)
        M[r] = [v * inv % p for v in M[r]]
        for i in range(rows):
            if i != r and M[i][c]:
                f = M[i][c]
                M[i] = [(vi - f * vr) % p for vi, vr in zip(M[i], M[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(M[i][cols] for i in range(r, rows)):
        return None
    x = [0] * cols
    for i, c in enumerate(pivots):
        x[c] = M[i][cols]
    return x


@functools.lru_cache(maxsize=64)
def GF(spec: FieldSpec) -> FiniteField:
    return FiniteField(spec)


def prime_field(p: int) -> FiniteField:
    return GF(FieldSpec(p))


def field_pth_root(a: int, field: FiniteField) -> int:
    """The unique b in the field with b^p = a."""
    return field.pth_root(a)
