"""Jump-profile arithmetic for totally ramified cyclic extensions of degree p^e.

Jumps are indexed from 1 as in the usual notation; index 0 carries the
convention i_0 = j_0 = 0.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterator, Optional, Sequence

UPPER = "upper"
LOWER = "lower"


class InvalidJumps(ValueError):
    def __init__(self, index: int, clause: str):
        super().__init__(f"jump {index}: {clause}")
        self.index = index
        self.clause = clause


@dataclass(frozen=True)
class Violation:
    index: int
    clause: str

    def to_json(self) -> dict:
        return {"index": self.index, "clause": self.clause}


def _upper_violation(p: int, jumps: Sequence[int]) -> Optional[Violation]:
    if not jumps:
        return Violation(0, "empty jump sequence")
    prev = 0
    for rho, j in enumerate(jumps, start=1):
        if not isinstance(j, int) or isinstance(j, bool):
            return Violation(rho, f"jump {j!r} is not an integer")
        if rho == 1:
            if j < 1:
                return Violation(1, f"first upper jump {j} must be >= 1")
            if gcd(j, p) != 1:
                return Violation(1, f"first upper jump {j} must be prime to p={p}")
        else:
            if j < p * prev:
                return Violation(rho, f"{j} < p * {prev} = {p * prev}")
            if j > p * prev and j % p == 0:
                return Violation(rho, f"{j} > p * {prev} but divisible by p={p}")
        prev = j
    return None


def _lower_to_upper(p: int, lower: Sequence[int]) -> list[int]:
    upper = []
    prev_j = prev_i = 0
    for rho, j in enumerate(lower, start=1):
        step, r = divmod(j - prev_j, p ** (rho - 1))
        if r:
            raise InvalidJumps(rho, f"lower jump difference {j - prev_j} not divisible by p^{rho - 1}")
        prev_i += step
        upper.append(prev_i)
        prev_j = j
    return upper


def _upper_to_lower(p: int, upper: Sequence[int]) -> list[int]:
    lower = []
    prev_j = prev_i = 0
    for rho, i in enumerate(upper, start=1):
        prev_j += p ** (rho - 1) * (i - prev_i)
        lower.append(prev_j)
        prev_i = i
    return lower


def _lower_violation(p: int, jumps: Sequence[int]) -> Optional[Violation]:
    if not jumps:
        return Violation(0, "empty jump sequence")
    if jumps[0] < 1:
        return Violation(1, f"first lower jump {jumps[0]} must be >= 1")
    for rho in range(1, len(jumps)):
        if jumps[rho] <= jumps[rho - 1]:
            return Violation(rho + 1, "lower jumps must be strictly increasing")
    try:
        upper = _lower_to_upper(p, jumps)
    except InvalidJumps as exc:
        return Violation(exc.index, exc.clause)
    bad = _upper_violation(p, upper)
    if bad is not None:
        return Violation(bad.index, f"Herbrand preimage {upper} invalid: {bad.clause}")
    return None


def validate_jumps(p: int, jumps: Sequence[int], convention: str = UPPER) -> Optional[Violation]:
    """None when valid, else the first violated clause and its (1-based) index."""
    if convention == UPPER:
        return _upper_violation(p, jumps)
    if convention == LOWER:
        return _lower_violation(p, jumps)
    raise ValueError(f"unknown convention {convention!r}")


@dataclass(frozen=True)
class JumpSequence:
    p: int
    jumps: tuple[int, ...]
    convention: str = UPPER

    def __post_init__(self):
        object.__setattr__(self, "jumps", tuple(self.jumps))
        bad = validate_jumps(self.p, self.jumps, self.convention)
        if bad is not None:
            raise InvalidJumps(bad.index, bad.clause)

    @property
    def e(self) -> int:
        return len(self.jumps)

    def __getitem__(self, rho: int) -> int:
        """1-based access with the i_0 = 0 convention."""
        return 0 if rho == 0 else self.jumps[rho - 1]

    def to_json(self) -> dict:
        return {"p": self.p, "convention": self.convention, "jumps": list(self.jumps)}

    @classmethod
    def from_json(cls, data: dict) -> "JumpSequence":
        return cls(int(data["p"]), tuple(int(j) for j in data["jumps"]), data.get("convention", UPPER))

    def upper(self) -> "JumpSequence":
        return self if self.convention == UPPER else herbrand(self, UPPER)

    def lower(self) -> "JumpSequence":
        return self if self.convention == LOWER else herbrand(self, LOWER)


def herbrand(seq: JumpSequence, target: str) -> JumpSequence:
    """Convert between upper and lower numbering (j_r - j_{r-1} = p^(r-1) (i_r - i_{r-1}))."""
    if target == seq.convention:
        return seq
    if target == LOWER:
        return JumpSequence(seq.p, tuple(_upper_to_lower(seq.p, seq.jumps)), LOWER)
    if target == UPPER:
        return JumpSequence(seq.p, tuple(_lower_to_upper(seq.p, seq.jumps)), UPPER)
    raise ValueError(f"unknown convention {target!r}")


def different_degree(seq: JumpSequence) -> int:
    p, e = seq.p, seq.e
    if seq.convention == UPPER:
        return sum((i + 1) * (p ** r - p ** (r - 1)) for r, i in enumerate(seq.jumps, start=1))
    total = p ** e - 1
    prev = 0
    for r, j in enumerate(seq.jumps, start=1):
        total += (j - prev) * (p ** (e - (r - 1)) - 1)
        prev = j
    return total


@dataclass(frozen=True)
class EssentialDecomposition:
    q: tuple[int, ...]
    eps: tuple[int, ...]
    r: tuple[int, ...]
    d: tuple[int, ...]
    N: int

    @property
    def e0(self) -> int:
        return len(self.r)

    @property
    def has_essential(self) -> bool:
        return self.e0 > 0

    def block_bounds(self, i: int) -> tuple[int, int]:
        """Rows d_{i-1} < mu <= d_i of essential block i (1-based)."""
        return self.d[i - 1], self.d[i]

    def to_json(self) -> dict:
        return {"q": list(self.q), "eps": list(self.eps), "r": list(self.r), "d": list(self.d),
                "N": self.N, "e0": self.e0, "has_essential": self.has_essential}


def essential_decomposition(seq: JumpSequence) -> EssentialDecomposition:
    seq = seq.upper()
    p = seq.p
    q, eps = [], []
    for rho in range(1, seq.e + 1):
        a, b = divmod(seq[rho] - p * seq[rho - 1], p)
        q.append(a)
        eps.append(b)
    r = tuple(rho for rho, qq in enumerate(q, start=1) if qq > 0)
    d = [1]
    for rho in r:
        d.append(d[-1] + q[rho - 1])
    return EssentialDecomposition(tuple(q), tuple(eps), r, tuple(d), 1 + sum(q))


def has_no_essential(seq: JumpSequence) -> bool:
    return not essential_decomposition(seq).has_essential


def kg_genus(seq: JumpSequence) -> int:
    """Genus of the cover of P^1 of degree p^e totally branched at one point.

    Riemann-Hurwitz: 2g - 2 = -2 p^e + deg D.
    """
    seq = seq.upper()
    twice = different_degree(seq) - 2 * seq.p ** seq.e + 2
    if twice % 2 or twice < 0:
        raise ArithmeticError(f"genus {twice}/2 for {seq.jumps} is not a non-negative integer")
    return twice // 2


@dataclass(frozen=True)
class DifferentReport:
    special_fiber_degree: int
    per_branch: tuple[int, ...]
    total_generic_degree: int = field(init=False)
    kato_equal: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "per_branch", tuple(self.per_branch))
        object.__setattr__(self, "total_generic_degree", sum(self.per_branch))
        object.__setattr__(self, "kato_equal", self.total_generic_degree == self.special_fiber_degree)

    def to_json(self) -> dict:
        return {"special_fiber_degree": self.special_fiber_degree, "per_branch": list(self.per_branch),
                "total_generic_degree": self.total_generic_degree, "kato_equal": self.kato_equal}


def kato_check(special: int, generic_parts: Sequence[int]) -> DifferentReport:
    return DifferentReport(special, tuple(generic_parts))


def enumerate_upper_sequences(p: int, max_e: int, max_jump: int,
                              min_e: int = 1) -> Iterator[tuple[int, ...]]:
    """All valid upper jump tuples with min_e <= e <= max_e and every jump <= max_jump."""

    def extend(prefix: tuple[int, ...]):
        if len(prefix) >= min_e:
            yield prefix
        if len(prefix) == max_e:
            return
        base = p * prefix[-1]
        if base <= max_jump:
            yield from extend(prefix + (base,))
        for j in range(base + 1, max_jump + 1):
            if j % p:
                yield from extend(prefix + (j,))

    for first in range(1, max_jump + 1):
        if first % p:
            yield from extend((first,))
