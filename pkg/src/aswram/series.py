"""Truncated Laurent series over a finite field, with Newton/Hensel root lifting.

A series is known modulo s^N, where N is its absolute precision.  Every
operation returns the largest precision justified by its operands and never
invents coefficients past it.
"""
from __future__ import annotations

import math
from typing import Sequence

from .fields import FiniteField


class PrecisionError(ArithmeticError):
    pass


class HenselError(ArithmeticError):
    pass


def _kron_mul(a: Sequence[int], b: Sequence[int], p: int, rel: int) -> list[int]:
    """First ``rel`` coefficients of a*b over F_p, via one big-integer product."""
    width = ((rel * (p - 1) ** 2).bit_length() + 8) // 8
    A = int.from_bytes(b"".join(x.to_bytes(width, "little") for x in a), "little")
    B = int.from_bytes(b"".join(x.to_bytes(width, "little") for x in b), "little")
    raw = (A * B).to_bytes((len(a) + len(b)) * width, "little")
    return [int.from_bytes(raw[k * width:(k + 1) * width], "little") % p for k in range(rel)]


class LaurentSeries:
    """sum(coeffs[i] * s^(valuation + i)) + O(s^(valuation + len(coeffs)))."""

    __slots__ = ("field", "valuation", "coeffs")

    def __init__(self, field: FiniteField, valuation: int, coeffs: Sequence[int] = ()):
        c = list(coeffs)
        k = 0
        while k < len(c) and c[k] == 0:
            k += 1
        self.field = field
        self.valuation = valuation + k
        self.coeffs = tuple(c[k:])

    # -- constructors ---------------------------------------------------

    @classmethod
    def from_terms(cls, field: FiniteField, terms: dict[int, int], abs_precision: int) -> "LaurentSeries":
        """Series with the given exponent -> coefficient terms, known to O(s^abs_precision)."""
        live = {k: c for k, c in terms.items() if c and k < abs_precision}
        lo = min(live, default=abs_precision)
        return cls(field, lo, [live.get(k, 0) for k in range(lo, abs_precision)])

    @classmethod
    def constant(cls, field: FiniteField, c: int, abs_precision: int) -> "LaurentSeries":
        return cls.from_terms(field, {0: c}, abs_precision)

    @classmethod
    def monomial(cls, field: FiniteField, c: int, k: int, abs_precision: int) -> "LaurentSeries":
        return cls.from_terms(field, {k: c}, abs_precision)

    @classmethod
    def zero(cls, field: FiniteField, abs_precision: int) -> "LaurentSeries":
        return cls(field, abs_precision, ())

    # -- accessors --------------------------------------------------------

    @property
    def precision(self) -> int:
        """Number of tracked terms (relative precision)."""
        return len(self.coeffs)

    @property
    def abs_precision(self) -> int:
        return self.valuation + len(self.coeffs)

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def leading(self) -> int:
        return self.coeffs[0] if self.coeffs else 0

    def coeff(self, k: int) -> int:
        if k >= self.abs_precision:
            raise PrecisionError(f"coefficient of s^{k} is beyond precision {self.abs_precision}")
        i = k - self.valuation
        return self.coeffs[i] if i >= 0 else 0

    def __repr__(self):
        body = " + ".join(f"{c}*s^{self.valuation + i}" for i, c in enumerate(self.coeffs) if c)
        return f"{body or '0'} + O(s^{self.abs_precision})"

    def agrees_with(self, other: "LaurentSeries") -> bool:
        return (self - other).is_zero()

    # -- arithmetic -------------------------------------------------------

    def truncate(self, abs_precision: int) -> "LaurentSeries":
        if abs_precision >= self.abs_precision:
            return self
        keep = max(0, abs_precision - self.valuation)
        if keep == 0:
            return LaurentSeries.zero(self.field, abs_precision)
        return LaurentSeries(self.field, self.valuation, self.coeffs[:keep])

    def _combine(self, other: "LaurentSeries", sign: int) -> "LaurentSeries":
        F = self.field
        ap = min(self.abs_precision, other.abs_precision)
        lo = min(self.valuation, other.valuation, ap)
        out = [0] * (ap - lo)
        for i, c in enumerate(self.coeffs):
            k = self.valuation + i - lo
            if k < len(out):
                out[k] = c
        for i, c in enumerate(other.coeffs):
            k = other.valuation + i - lo
            if k < len(out):
                out[k] = F.add(out[k], c) if sign > 0 else F.sub(out[k], c)
        return LaurentSeries(F, lo, out)

    def __add__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self._combine(other, 1)

    def __sub__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self._combine(other, -1)

    def __neg__(self) -> "LaurentSeries":
        F = self.field
        return LaurentSeries(F, self.valuation, [F.neg(c) for c in self.coeffs])

    def __mul__(self, other: "LaurentSeries") -> "LaurentSeries":
        F = self.field
        v = self.valuation + other.valuation
        if self.is_zero() or other.is_zero():
            # O(s^a) * (b s^w + ...) is O(s^(a + w)); an unknown factor bounds nothing better.
            ap = min(self.abs_precision + other.valuation, other.abs_precision + self.valuation)
            return LaurentSeries.zero(F, ap)
        rel = min(len(self.coeffs), len(other.coeffs))
        a, b = self.coeffs[:rel], other.coeffs[:rel]
        if F.n == 1:
            out = _kron_mul(a, b, F.p, rel)
        else:
            out = [0] * rel
            for i, x in enumerate(a):
                if x:
                    for j in range(rel - i):
                        if b[j]:
                            out[i + j] = F.add(out[i + j], F.mul(x, b[j]))
        return LaurentSeries(F, v, out)

    def scale(self, c: int) -> "LaurentSeries":
        F = self.field
        if c == 0:
            return LaurentSeries.zero(F, self.abs_precision)
        return LaurentSeries(F, self.valuation, [F.mul(c, x) for x in self.coeffs])

    def shift(self, k: int) -> "LaurentSeries":
        """Multiply by s^k."""
        return LaurentSeries(self.field, self.valuation + k, self.coeffs)

    def inverse(self) -> "LaurentSeries":
        if self.is_zero():
            raise ZeroDivisionError(f"series {self} is zero to its precision")
        F = self.field
        a = self.coeffs
        n = len(a)
        inv0 = F.inv(a[0])
        out = [inv0]
        for k in range(1, n):
            acc = 0
            for i in range(1, k + 1):
                if a[i]:
                    acc = F.add(acc, F.mul(a[i], out[k - i]))
            out.append(F.neg(F.mul(inv0, acc)))
        return LaurentSeries(F, -self.valuation, out)

    def __truediv__(self, other: "LaurentSeries") -> "LaurentSeries":
        return self * other.inverse()

    def __pow__(self, k: int) -> "LaurentSeries":
        if k < 0:
            return self.inverse() ** (-k)
        F = self.field
        result = LaurentSeries(F, 0, (1,) + (0,) * (max(self.precision, 1) - 1))
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def compose(self, inner: "LaurentSeries") -> "LaurentSeries":
        """self(inner) for inner of positive valuation (a substitution s -> inner)."""
        if inner.is_zero() or inner.valuation < 1:
            raise ValueError("substituted series must have positive valuation")
        F = self.field
        if self.is_zero():
            return LaurentSeries.zero(F, self.abs_precision * inner.valuation)
        # Horner in inner, then multiply by inner^valuation.
        cap = len(self.coeffs) * inner.valuation
        acc = LaurentSeries.constant(F, self.coeffs[-1], cap)
        for c in reversed(self.coeffs[:-1]):
            acc = acc * inner + LaurentSeries.constant(F, c, cap)
        body = acc.truncate(cap)
        return body * (inner ** self.valuation)


def poly_eval(coeffs: Sequence[LaurentSeries], h: LaurentSeries) -> LaurentSeries:
    """sum(coeffs[i] * h^i) via Horner."""
    acc = coeffs[-1]
    for c in reversed(coeffs[:-1]):
        acc = acc * h + c
    return acc


def poly_derivative(coeffs: Sequence[LaurentSeries]) -> list[LaurentSeries]:
    F = coeffs[0].field
    return [c.scale(F.from_int(i)) for i, c in enumerate(coeffs)][1:] or [
        LaurentSeries.zero(F, coeffs[0].abs_precision)]


def series_hensel_root(coeffs: Sequence[LaurentSeries], init: LaurentSeries, precision: int,
                       max_iter: int | None = None) -> LaurentSeries:
    """Newton-lift ``init`` to a root h of sum(coeffs[i] h^i) with v(F(h)) >= precision.

    Requires v(F(init)) > 2 v(F'(init)), the classical Hensel condition.
    """
    d_coeffs = poly_derivative(coeffs)
    h = init
    Fh = poly_eval(coeffs, h)
    dFh = poly_eval(d_coeffs, h)
    if dFh.is_zero():
        raise HenselError("derivative vanishes at the initial value; Newton step undefined")
    if Fh.valuation <= 2 * dFh.valuation:
        raise HenselError(
            f"initial value too coarse: v(F)={Fh.valuation}, v(F')={dFh.valuation}")
    max_iter = max_iter or (int(math.log2(max(precision, 2))) + 8)
    for _ in range(max_iter):
        if Fh.valuation >= precision:
            if Fh.abs_precision < precision:
                raise PrecisionError(
                    f"residual known only to O(s^{Fh.abs_precision}), requested {precision}")
            return h
        h = h - Fh / dFh
        new = poly_eval(coeffs, h)
        if not new.is_zero() and new.valuation <= Fh.valuation:
            raise HenselError("Newton iteration stopped converging")
        if new.is_zero() and new.abs_precision <= Fh.valuation:
            raise PrecisionError(f"precision exhausted at O(s^{new.abs_precision})")
        Fh = new
        dFh = poly_eval(d_coeffs, h)
    if Fh.valuation >= precision and Fh.abs_precision >= precision:
        return h
    raise HenselError(f"no convergence to precision {precision} within {max_iter} iterations")
