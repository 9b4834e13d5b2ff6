"""Splitting a jump profile into branch-point profiles without essential jumps.

The theta matrix distributes the upper jumps i_rho over N = 1 + sum(q_rho) rows.
Row 1 carries the non-essential remainders eps_rho; every essential index r_i
opens a block of q_{r_i} new rows that start at column r_i with the minimal
profile p-1, p^2-1, ...  Stripping the leading zeros of each row gives the
upper jumps of the extension ramified at the corresponding branch point.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional

from .asw import AswClass, upper_jumps
from .fields import FieldError, FiniteField
from .polys import (DEFAULT_MAX_EXTENSION, Embedding, PolyU, SplittingFieldTooLarge, extend_field,
                    identity_embedding, poly_split_roots, product_of_linear, splitting_degree)
from .ramification import (EssentialDecomposition, JumpSequence, different_degree,
                           essential_decomposition, validate_jumps)


@dataclass(frozen=True)
class ThetaMatrix:
    p: int
    rows: tuple[tuple[int, ...], ...]
    # block index (0 for row 1) and first nonzero column of each row
    blocks: tuple[int, ...]
    starts: tuple[int, ...]

    @property
    def N(self) -> int:
        return len(self.rows)

    @property
    def e(self) -> int:
        return len(self.rows[0])

    def theta(self, mu: int, rho: int) -> int:
        """1-based entry with theta_{mu,0} = 0."""
        return 0 if rho == 0 else self.rows[mu - 1][rho - 1]

    def to_json(self) -> list:
        return [list(r) for r in self.rows]


def theta_matrix(seq: JumpSequence, dec: Optional[EssentialDecomposition] = None) -> ThetaMatrix:
    seq = seq.upper()
    p, e = seq.p, seq.e
    dec = dec or essential_decomposition(seq)
    if not dec.has_essential:
        return ThetaMatrix(p, (tuple(seq.jumps),), (0,), (1,))
    row1 = []
    prev = 0
    for rho in range(1, e + 1):
        prev = p * prev + dec.eps[rho - 1]
        row1.append(prev)
    rows, blocks, starts = [tuple(row1)], [0], [1]
    for i, r in enumerate(dec.r, start=1):
        lo, hi = dec.block_bounds(i)
        row = []
        prev = 0
        for rho in range(1, e + 1):
            if rho >= r:
                prev = p * prev + p - 1
            row.append(prev)
        for _ in range(lo, hi):
            rows.append(tuple(row))
            blocks.append(i)
            starts.append(r)
    return ThetaMatrix(p, tuple(rows), tuple(blocks), tuple(starts))


def _branch_different(p: int, start: int, profile: tuple[int, ...]) -> int:
    return p ** (start - 1) * sum((i + 1) * (p ** nu - p ** (nu - 1))
                                  for nu, i in enumerate(profile, start=1))


@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    failures: tuple[dict, ...] = ()

    def to_json(self) -> dict:
        return {"passed": self.passed, "failures": list(self.failures)}


@dataclass(frozen=True)
class PlanReport:
    checks: tuple[Check, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        out = {c.name: c.to_json() for c in self.checks}
        out["passed"] = self.passed
        return out


@dataclass(frozen=True)
class SplitPlan:
    jumps: JumpSequence
    decomposition: EssentialDecomposition
    theta: ThetaMatrix
    profiles: tuple[tuple[int, ...], ...]
    branch_different: tuple[int, ...]
    labels: tuple[str, ...]
    report: Optional[PlanReport] = field(default=None, compare=False)

    @property
    def N(self) -> int:
        return len(self.profiles)

    @property
    def lengths(self) -> tuple[int, ...]:
        return tuple(len(pr) for pr in self.profiles)

    @property
    def special_different(self) -> int:
        return different_degree(self.jumps)

    @property
    def is_identity(self) -> bool:
        return self.N == 1

    def to_json(self) -> dict:
        return {
            "input": self.jumps.to_json(),
            "decomposition": self.decomposition.to_json(),
            "theta": self.theta.to_json(),
            "branches": [
                {"label": lab, "jumps": list(pr), "e": len(pr), "different": d}
                for lab, pr, d in zip(self.labels, self.profiles, self.branch_different)
            ],
            "different": {"special_fiber": self.special_different,
                          "generic_total": sum(self.branch_different),
                          "per_branch": list(self.branch_different)},
            "verification": self.report.to_json() if self.report else None,
        }


def split_plan(seq: JumpSequence, verify: bool = True) -> SplitPlan:
    seq = seq.upper()
    dec = essential_decomposition(seq)
    theta = theta_matrix(seq, dec)
    profiles = tuple(row[start - 1:] for row, start in zip(theta.rows, theta.starts))
    diffs = tuple(_branch_different(seq.p, start, pr) for start, pr in zip(theta.starts, profiles))
    labels = tuple(f"x_{mu}" for mu in range(1, len(profiles) + 1))
    plan = SplitPlan(seq, dec, theta, profiles, diffs, labels)
    if verify:
        plan = SplitPlan(seq, dec, theta, profiles, diffs, labels, verify_plan(plan))
    return plan


def _rows_through(dec: EssentialDecomposition, rho: int) -> tuple[int, int]:
    """(i, d_i) with i the largest block index such that r_i <= rho (i = 0 if none)."""
    i = 0
    for k, r in enumerate(dec.r, start=1):
        if r <= rho:
            i = k
    return i, dec.d[i]


def verify_plan(plan: SplitPlan) -> PlanReport:
    seq, dec, theta, p = plan.jumps, plan.decomposition, plan.theta, plan.jumps.p
    e = seq.e

    lemma, prefix = [], []
    for rho in range(1, e + 1):
        i, d = _rows_through(dec, rho)
        rhs = sum(theta.theta(mu, rho) + 1 for mu in range(1, d + 1))
        if seq[rho] + 1 != rhs:
            (lemma if i else prefix).append({"rho": rho, "lhs": seq[rho] + 1, "rhs": rhs})

    special = different_degree(seq)
    total = sum(plan.branch_different)
    kato = [] if special == total else [{"lhs": total, "rhs": special}]

    no_ess = []
    for mu, pr in enumerate(plan.profiles, start=1):
        bad = validate_jumps(p, pr)
        if bad is not None:
            no_ess.append({"mu": mu, "profile": list(pr), "violation": bad.to_json()})
        elif essential_decomposition(JumpSequence(p, pr)).has_essential:
            no_ess.append({"mu": mu, "profile": list(pr), "violation": "essential jump present"})

    lens = plan.lengths
    mono = [{"mu": mu, "lhs": lens[mu - 1], "rhs": lens[mu]}
            for mu in range(1, len(lens)) if lens[mu] > lens[mu - 1]]

    rec = []
    for mu, pr in enumerate(plan.profiles, start=1):
        prev = 0
        for nu, val in enumerate(pr, start=1):
            step = dec.eps[nu - 1] if mu == 1 else p - 1
            if val != p * prev + step:
                rec.append({"mu": mu, "nu": nu, "lhs": val, "rhs": p * prev + step})
            prev = val

    return PlanReport((
        Check("combinatorial_identity", not lemma, tuple(lemma)),
        Check("prefix_identity", not prefix, tuple(prefix)),
        Check("kato_ledger", not kato, tuple(kato)),
        Check("no_essential_branches", not no_ess, tuple(no_ess)),
        Check("lengths_non_increasing", not mono, tuple(mono)),
        Check("branch_recursions", not rec, tuple(rec)),
    ))


# -- materialization ------------------------------------------------------------

@dataclass(frozen=True)
class MaterializedGenerator:
    plan: SplitPlan
    embedding: Embedding
    factors: tuple[tuple[PolyU, ...], ...]  # factors[mu-1][rho-1]
    branch_points: tuple[int, ...]          # c_mu, with x_mu = c_mu * pi
    seed: int

    @property
    def field(self) -> FiniteField:
        return self.embedding.target

    def product(self, rho: int) -> PolyU:
        out = PolyU.constant(self.field, 1)
        for row in self.factors:
            out = out * row[rho - 1]
        return out

    def to_json(self) -> dict:
        F = self.field
        return {
            "field": F.spec.to_json(),
            "seed": self.seed,
            "branch_points": [{"label": lab, "c": F.to_vector(c)}
                              for lab, c in zip(self.plan.labels, self.branch_points)],
            "factors": [[f.to_json() for f in row] for row in self.factors],
            "degrees": [[int(max(f.degree, 0)) for f in row] for row in self.factors],
        }


def _group_sizes(theta: ThetaMatrix, rho: int) -> list[int]:
    sizes = [theta.theta(1, rho)]
    for mu in range(2, theta.N + 1):
        t = theta.theta(mu, rho)
        sizes.append(t + 1 if t else 0)
    return sizes


def materialize(gen: AswClass, plan: SplitPlan, seed: int = 0,
                max_degree: int = DEFAULT_MAX_EXTENSION) -> MaterializedGenerator:
    """Factor each coordinate p_rho into the per-branch polynomials p_{mu,rho}."""
    if not (gen.normalized and gen.separable):
        raise ValueError("materialize needs a normalized separable generator")
    jumps = upper_jumps(gen) if gen.standard_form else None
    coords = gen.generator.coords
    degs = tuple(int(c.degree) for c in coords)
    if jumps is not None and jumps != plan.jumps:
        raise ValueError(f"generator jumps {jumps.jumps} differ from plan input {plan.jumps.jumps}")
    if degs != plan.jumps.jumps:
        raise ValueError(f"generator degrees {degs} differ from plan jumps {plan.jumps.jumps}")
    rng = random.Random(seed)
    F = gen.field
    N = plan.N
    if N == 1:
        emb = identity_embedding(F)
    else:
        L = splitting_degree(list(coords))
        # the branch points need N distinct constants
        while F.q ** L < N:
            L *= 2
        if F.n * L > max_degree:
            raise SplittingFieldTooLarge(
                f"splitting field has degree {F.n * L} over F_{F.p}, above the bound {max_degree}")
        emb = extend_field(F, L)
    E = emb.target
    factors = [[None] * plan.jumps.e for _ in range(N)]
    for rho, c in enumerate(coords, start=1):
        sizes = _group_sizes(plan.theta, rho)
        if sum(sizes) != int(c.degree):
            raise ArithmeticError(f"degree bookkeeping fails at rho={rho}: {sizes} vs {c.degree}")
        if N == 1:
            factors[0][rho - 1] = c
            continue
        split = poly_split_roots(c, embedding=emb)
        roots = list(split.roots)
        rng.shuffle(roots)
        pos = 0
        for mu, size in enumerate(sizes, start=1):
            lead = split.leading if mu == 1 else 1
            factors[mu - 1][rho - 1] = product_of_linear(E, roots[pos:pos + size], lead)
            pos += size
        check = PolyU.constant(E, 1)
        for mu in range(N):
            check = check * factors[mu][rho - 1]
        if check != emb.poly(c):
            raise ArithmeticError(f"product of factors differs from p_{rho}")
    points = rng.sample(range(E.q), N) if N <= E.q else None
    if points is None:  # pragma: no cover - excluded by the field-size loop above
        raise FieldError("not enough field elements for distinct branch points")
    return MaterializedGenerator(plan, emb, tuple(tuple(r) for r in factors), tuple(points), seed)
