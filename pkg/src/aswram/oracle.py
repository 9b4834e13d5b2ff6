"""Brute-force ramification data of a degree-p Artin-Schreier extension.

For f in standard form of degree m prime to p, the extension L = K(z) with
z^p - z = f(1/t) is totally ramified of degree p.  We model L as k((s)) with
z = lam * s^(-m), where lam^p is the leading coefficient of f, recover
w = 1/t = s^(-p) h(s) by Newton iteration, and let the Galois group act by
z -> z + k.  Ramification data are then read off valuations of sigma(s) - s;
none of the jump or different formulas are used.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .asw import NO, AswClass, in_image_wp
from .polys import PolyU
from .series import LaurentSeries, PrecisionError, poly_eval, series_hensel_root
from .witt import WittVector


class DegenerateInput(ValueError):
    pass


def default_precision(m: int, p: int) -> int:
    return 4 * (m + 1) * (p - 1) + 16


@dataclass(frozen=True)
class OracleResult:
    p: int
    m: int
    precision: int
    jump: int
    different: int
    sigma_valuations: tuple[int, ...]   # v(sigma^k s - s), k = 1..p-1
    equation_residual: int              # relative valuation of f(w) - (z^p - z)
    invariance_residual: int            # min over k of relative v(t(sigma^k s) - t(s))
    uniformizer: str = "s"

    @property
    def trusted(self) -> bool:
        return min(self.equation_residual, self.invariance_residual) >= self.precision

    def to_json(self) -> dict:
        return {"p": self.p, "m": self.m, "precision": self.precision, "jump": self.jump,
                "different": self.different, "sigma_valuations": list(self.sigma_valuations),
                "equation_residual": self.equation_residual,
                "invariance_residual": self.invariance_residual,
                "uniformizer": self.uniformizer, "trusted": self.trusted}


def _check_input(f: PolyU) -> int:
    F = f.field
    p = F.p
    if f.degree < 1:
        raise DegenerateInput("f must have degree >= 1")
    if any(k > 0 and k % p == 0 for k, _ in f.terms()):
        raise DegenerateInput("f is not in standard form (exponent divisible by p)")
    m = int(f.degree)
    if m % p == 0:  # pragma: no cover - implied by standard form
        raise DegenerateInput(f"deg f = {m} is divisible by p")
    if in_image_wp(AswClass(WittVector((f,)))) != NO:
        raise DegenerateInput("f lies in the image of the Artin-Schreier operator")
    return m


def oracle_e1(f: PolyU, precision: Optional[int] = None, rescale: bool = False) -> OracleResult:
    """Measure the lower jump and different of K(z), z^p - z = f(1/t).

    With ``rescale=True`` valuations are measured for the uniformizer s(1+s)
    instead of s.
    """
    m = _check_input(f)
    F = f.field
    p = F.p
    W = precision if precision is not None else default_precision(m, p)
    P = W + p * m + 2 * (m + 1) + 16
    S = lambda c, k: LaurentSeries.monomial(F, c, k, P)  # noqa: E731

    lam = F.pth_root(f.leading)
    coeffs = [S(f.coeff(i), p * (m - i)) for i in range(m + 1)]
    coeffs[0] = coeffs[0] - S(F.pow(lam, p), 0) + S(lam, (p - 1) * m)
    h = series_hensel_root(coeffs, S(1, 0), P)
    w = h.shift(-p)

    # equation residual f(w) - (z^p - z), relative to the leading size s^(-pm)
    fw = poly_eval([LaurentSeries.constant(F, f.coeff(i), P) for i in range(m + 1)], w)
    z = S(lam, -m)
    res = fw - (z ** p - z)
    eq_res = res.valuation + p * m

    s = S(1, 1)
    t = h.inverse().shift(p)
    uni = s * (S(1, 0) + s) if rescale else s
    vals, inv_res = [], []
    for k in range(1, p):
        ck = F.div(F.from_int(k), lam)
        gcoeffs = [LaurentSeries.zero(F, P) for _ in range(m + 1)]
        gcoeffs[0] = S(F.neg(1), 0)
        gcoeffs[m] = S(1, 0) + S(ck, m)
        g = series_hensel_root(gcoeffs, S(1, 0), P)
        sig_s = s * g
        sig_uni = sig_s * (S(1, 0) + sig_s) if rescale else sig_s
        diff = sig_uni - uni
        if diff.is_zero():
            raise PrecisionError(f"sigma^{k}(s) - s vanishes to O(s^{diff.abs_precision}); "
                                 f"trusted valuation < {diff.abs_precision}")
        if diff.valuation >= W:
            raise PrecisionError(f"v(sigma^{k} s - s) = {diff.valuation} is not below precision {W}")
        vals.append(diff.valuation)
        t_sig = h.compose(sig_s).inverse() * sig_s ** p
        inv_res.append((t_sig - t).valuation - p)
    return OracleResult(p, m, W, vals[0] - 1, sum(vals), tuple(vals), eq_res, min(inv_res),
                        "s(1+s)" if rescale else "s")
