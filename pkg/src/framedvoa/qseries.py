"""Truncated q-series with rational exponents and exact coefficients.

A series is ``sum_k c_k q^(k/denom)`` known for exponents ``< order``.  Every
operation propagates the range on which its output is exact; nothing beyond
``order`` is ever stored.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Mapping, Union

Coeff = Union[int, Fraction]


class SeriesError(ValueError):
    pass


def _norm(c):
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c.numerator)
    return c


def _ceil_units(x: Fraction, d: int) -> int:
    """Smallest integer ``m`` with ``m/d >= x``."""
    return math.ceil(Fraction(x) * d)


def _lcm(a: int, b: int) -> int:
    return a * b // math.gcd(a, b)


class QSeries:
    __slots__ = ("denom", "terms", "order")

    def __init__(self, denom: int, terms: Mapping[int, Coeff], order):
        if denom <= 0:
            raise SeriesError("denominator must be positive")
        order = Fraction(order)
        kmax = _ceil_units(order, denom) - 1
        clean = {k: _norm(c) for k, c in terms.items() if c and k <= kmax}
        g = reduce(math.gcd, clean, denom)
        if g > 1:
            clean = {k // g: c for k, c in clean.items()}
            denom //= g
        self.denom = denom
        self.terms = dict(sorted(clean.items()))
        self.order = order

    # -- constructors -----------------------------------------------------

    @classmethod
    def from_exponents(cls, terms: Mapping[Fraction, Coeff], order) -> "QSeries":
        exps = [Fraction(e) for e in terms]
        d = reduce(_lcm, (e.denominator for e in exps), 1)
        return cls(d, {int(Fraction(e) * d): c for e, c in terms.items()}, order)

    @classmethod
    def monomial(cls, exponent, coeff: Coeff = 1, order=math.inf) -> "QSeries":
        e = Fraction(exponent)
        if order == math.inf:
            order = e + 10**9
        return cls(e.denominator, {e.numerator: coeff}, order)

    @classmethod
    def constant(cls, c: Coeff, order) -> "QSeries":
        return cls(1, {0: c}, order)

    @classmethod
    def zero(cls, order) -> "QSeries":
        return cls(1, {}, order)

    @classmethod
    def from_dense(cls, coeffs: Iterable[Coeff], step, offset=0, order=None) -> "QSeries":
        """``sum_n coeffs[n] q^(offset + n*step)``; default order one step past the end."""
        step, offset = Fraction(step), Fraction(offset)
        coeffs = list(coeffs)
        d = _lcm(step.denominator, offset.denominator)
        s, o = int(step * d), int(offset * d)
        if order is None:
            order = offset + len(coeffs) * step
        return cls(d, {o + n * s: c for n, c in enumerate(coeffs)}, order)

    # -- inspection ---------------------------------------------------------

    def items(self) -> Iterable[tuple[Fraction, Coeff]]:
        for k, c in self.terms.items():
            yield Fraction(k, self.denom), c

    def coeff(self, exponent) -> Coeff:
        e = Fraction(exponent)
        if e >= self.order:
            raise SeriesError(f"exponent {e} beyond validity order {self.order}")
        k = e * self.denom
        if k.denominator != 1:
            return 0
        return self.terms.get(int(k), 0)

    def __getitem__(self, exponent) -> Coeff:
        return self.coeff(exponent)

    def is_zero(self) -> bool:
        return not self.terms

    def valuation(self) -> Fraction:
        if not self.terms:
            return self.order
        return Fraction(next(iter(self.terms)), self.denom)

    def leading(self) -> tuple[Fraction, Coeff]:
        if not self.terms:
            raise SeriesError("zero series has no leading term")
        k = next(iter(self.terms))
        return Fraction(k, self.denom), self.terms[k]

    def leading_terms(self, n: int) -> list[tuple[Fraction, Coeff]]:
        return list(self.items())[:n]

    def __len__(self) -> int:
        return len(self.terms)

    def __repr__(self) -> str:
        shown = [f"{c}*q^({e})" for e, c in self.leading_terms(4)]
        more = " + ..." if len(self.terms) > 4 else ""
        return f"QSeries({' + '.join(shown) or '0'}{more} + O(q^({self.order})))"

    def __eq__(self, other) -> bool:
        if not isinstance(other, QSeries):
            return NotImplemented
        return self.order == other.order and self.denom == other.denom and self.terms == other.terms

    def __hash__(self):
        return hash((self.denom, self.order, tuple(self.terms.items())))

    def agrees_with(self, other: "QSeries", order=None) -> bool:
        """Equal on the common validity range (or up to ``order``)."""
        bound = min(self.order, other.order) if order is None else Fraction(order)
        return (self - other).truncate(bound).is_zero()

    # -- arithmetic -------------------------------------------------------

    def _rebased(self, d: int) -> dict[int, Coeff]:
        f = d // self.denom
        return {k * f: c for k, c in self.terms.items()}

    def rebase(self, d: int) -> dict[int, Coeff]:
        """Terms keyed by numerators over ``d`` (a multiple of ``denom``)."""
        if d % self.denom:
            raise SeriesError(f"{d} is not a multiple of {self.denom}")
        return self._rebased(d)

    def _coerce(self, other) -> "QSeries":
        if isinstance(other, QSeries):
            return other
        if isinstance(other, (int, Fraction)):
            return QSeries.constant(other, self.order)
        raise TypeError(f"cannot combine QSeries with {type(other).__name__}")

    def __add__(self, other) -> "QSeries":
        other = self._coerce(other)
        d = _lcm(self.denom, other.denom)
        out = self._rebased(d)
        for k, c in other._rebased(d).items():
            out[k] = out.get(k, 0) + c
        return QSeries(d, out, min(self.order, other.order))

    __radd__ = __add__

    def __neg__(self) -> "QSeries":
        return QSeries(self.denom, {k: -c for k, c in self.terms.items()}, self.order)

    def __sub__(self, other) -> "QSeries":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "QSeries":
        return (-self) + other

    def scale(self, c: Coeff) -> "QSeries":
        return QSeries(self.denom, {k: v * c for k, v in self.terms.items()}, self.order)

    def __mul__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if not isinstance(other, QSeries):
            return NotImplemented
        order = min(self.order + other.valuation(), other.order + self.valuation())
        d = _lcm(self.denom, other.denom)
        a = list(self._rebased(d).items())
        b = list(other._rebased(d).items())
        if not a or not b:
            return QSeries.zero(order)
        kmax = _ceil_units(order, d) - 1
        out: dict[int, Coeff] = {}
        b0 = b[0][0]
        for ka, ca in a:
            if ka + b0 > kmax:
                break
            for kb, cb in b:
                k = ka + kb
                if k > kmax:
                    break
                out[k] = out.get(k, 0) + ca * cb
        return QSeries(d, out, order)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "QSeries":
        if n < 0:
            return self.invert() ** (-n)
        if n == 0:
            return QSeries.constant(1, self.order - self.valuation())
        result = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def invert(self) -> "QSeries":
        if not self.terms:
            raise SeriesError("cannot invert a series with zero leading term")
        e, c0 = self.leading()
        k0 = next(iter(self.terms))
        offsets = [k - k0 for k in self.terms]
        step = reduce(math.gcd, offsets, 0) or 1
        rel_order = self.order - e  # known range of self / (c0 q^e)
        n_terms = _ceil_units(rel_order, self.denom)
        n_terms = -(-n_terms // step)
        coeffs = {off // step: c for off, c in zip(offsets, self.terms.values())}
        nz = sorted((i, c) for i, c in coeffs.items() if i > 0)
        inv0 = Fraction(1, 1) / c0 if c0 not in (1, -1) else c0
        out = [inv0]
        for n in range(1, n_terms):
            acc = 0
            for i, c in nz:
                if i > n:
                    break
                acc += c * out[n - i]
            out.append(_norm(-acc * inv0))
        res_order = -e + rel_order
        return QSeries(self.denom, {-k0 + n * step: v for n, v in enumerate(out)}, res_order)

    def __truediv__(self, other) -> "QSeries":
        if isinstance(other, (int, Fraction)):
            return self.scale(Fraction(1) / other)
        return self * other.invert()

    def __rtruediv__(self, other) -> "QSeries":
        return self.invert() * other

    def truncate(self, order) -> "QSeries":
        order = Fraction(order)
        if order > self.order:
            raise SeriesError(f"cannot extend validity from {self.order} to {order}")
        return QSeries(self.denom, self.terms, order)

    def shift_exponent(self, e) -> "QSeries":
        """Multiply by ``q^e``."""
        e = Fraction(e)
        d = _lcm(self.denom, e.denominator)
        s = int(e * d)
        return QSeries(d, {k + s: c for k, c in self._rebased(d).items()}, self.order + e)

    def half_argument(self) -> "QSeries":
        """``s(tau/2)``: every exponent halves."""
        return QSeries(self.denom * 2, self.terms, self.order / 2)

    def map_coefficients(self, f) -> "QSeries":
        return QSeries(self.denom, {k: f(c) for k, c in self.terms.items()}, self.order)

    # -- properties of coefficients -----------------------------------------

    def has_integer_coefficients(self) -> bool:
        return all(isinstance(c, int) for c in self.terms.values())

    def has_nonnegative_coefficients(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def exponent_classes(self) -> set[Fraction]:
        """Exponents modulo 1."""
        return {e - math.floor(e) for e, _ in self.items()}

    # -- numerics -------------------------------------------------------

    def numeric_eval(self, tau: complex) -> complex:
        if tau.imag <= 0:
            raise SeriesError("tau must lie in the upper half plane")
        total = 0j
        for e, c in self.items():
            total += float(c) * cmath.exp(2j * math.pi * tau * float(e))
        return total

    def tail_bound(self, tau: complex, safety: float = 10.0, window: int = 8) -> float:
        """Estimated size of the discarded tail at ``tau``.

        Uses the last ``window`` stored terms to estimate a per-unit-exponent
        decay rate, then sums the geometric tail beyond the last term.
        """
        qabs = math.exp(-2 * math.pi * tau.imag)
        items = [(float(e), abs(float(c))) for e, c in self.items()][-window:]
        if not items:
            return 0.0
        if len(items) == 1:
            e, c = items[0]
            return safety * c * qabs ** float(self.order)
        rates = []
        for (e1, c1), (e2, c2) in zip(items, items[1:]):
            rates.append((c2 / c1) ** (1.0 / (e2 - e1)) * qabs)
        rho = max(rates)
        gap = items[-1][0] - items[-2][0]
        r = rho ** gap
        if r >= 1:
            return math.inf
        e_last, c_last = items[-1]
        return safety * c_last * qabs ** e_last * r / (1 - r)

    # -- serialisation ------------------------------------------------------

    def to_json(self) -> dict:
        return {
            "denom": self.denom,
            "order": str(self.order),
            "terms": [[k, str(c)] for k, c in self.terms.items()],
        }

    @classmethod
    def from_json(cls, data: Mapping) -> "QSeries":
        terms = {int(k): _norm(Fraction(c)) for k, c in data["terms"]}
        return cls(int(data["denom"]), terms, Fraction(data["order"]))


def product_series(factors: Iterable[tuple[int, int, int]], length: int) -> list[int]:
    """Dense integer coefficients of ``prod (1 + sign*x^a)^power`` below ``x^length``.

    ``factors`` holds ``(a, sign, power)`` with ``a >= 1``; ``power`` may be
    negative, in which case the factor is inverted as a power series.
    """
    coeffs = [0] * length
    coeffs[0] = 1
    for a, sign, power in factors:
        if a >= length or power == 0:
            continue
        reps = abs(power)
        for _ in range(reps):
            if power > 0:
                for n in range(length - 1, a - 1, -1):
                    coeffs[n] += sign * coeffs[n - a]
            else:
                # divide by (1 + sign x^a)
                for n in range(a, length):
                    coeffs[n] -= sign * coeffs[n - a]
    return coeffs
