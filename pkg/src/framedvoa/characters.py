"""Ising characters, j, the 2A McKay-Thompson series and the VB^0 character solver."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .codes import BitWord, LinearCode, popcount
from .fusion import Ising
from .qseries import QSeries, SeriesError, product_series

# h - c/24 for the three Ising modules
ISING_SHIFT = {
    Ising.H0: Fraction(-1, 48),
    Ising.H12: Fraction(1, 2) - Fraction(1, 48),
    Ising.H116: Fraction(1, 16) - Fraction(1, 48),
}

VB_CENTRAL_CHARGE = Fraction(47, 2)
VB_SHIFT = -VB_CENTRAL_CHARGE / 24  # -47/48


class DerivationInconsistency(ArithmeticError):
    """A solved character has a negative or non-integral coefficient."""


def _half_products(order: Fraction) -> tuple[list[int], list[int], int]:
    """Dense coefficients in ``x = q^(1/2)`` of prod(1 + x^(2n+1)) and prod(1 - x^(2n+1))."""
    length = math.ceil(2 * (order + Fraction(1, 48))) + 1
    plus = product_series(((2 * n + 1, 1, 1) for n in range(length)), length)
    minus = product_series(((2 * n + 1, -1, 1) for n in range(length)), length)
    return plus, minus, length


def ising_char(h: Ising, order, negative_prefactor: bool = False) -> QSeries:
    """Character of L(1/2, h), valid below ``q^order``.

    The 1/16 character uses the prefactor ``q^(1/16 - 1/48) = q^(1/24)``;
    ``negative_prefactor=True`` selects ``q^(-1/24)`` instead, for comparison.
    """
    order = Fraction(order)
    if order < 1:
        raise SeriesError("order must be at least 1")
    if h is Ising.H116:
        shift = Fraction(-1, 24) if negative_prefactor else ISING_SHIFT[h]
        length = math.ceil(order - shift) + 1
        coeffs = product_series(((n, 1, 1) for n in range(1, length)), length)
        return QSeries.from_dense(coeffs, 1, shift).truncate(order)
    plus, minus, length = _half_products(order)
    sign = 1 if h is Ising.H0 else -1
    coeffs = [Fraction(p + sign * m, 2) for p, m in zip(plus, minus)]
    return QSeries.from_dense(coeffs, Fraction(1, 2), Fraction(-1, 48)).truncate(order)


def ising_triple(order, negative_prefactor: bool = False) -> tuple[QSeries, QSeries, QSeries]:
    return tuple(ising_char(h, order, negative_prefactor) for h in Ising)


def ns_products(order) -> tuple[QSeries, QSeries]:
    """``q^(-1/48) prod(1 +- q^(n+1/2))`` straight from the products."""
    order = Fraction(order)
    plus, minus, _ = _half_products(order)
    mk = lambda c: QSeries.from_dense(c, Fraction(1, 2), Fraction(-1, 48)).truncate(order)
    return mk(plus), mk(minus)


def _sigma3(n: int) -> int:
    return sum(d**3 for d in range(1, n + 1) if n % d == 0)


def eisenstein_e4(order) -> QSeries:
    n = math.ceil(Fraction(order))
    if n < 2:
        raise SeriesError("order must be at least 2")
    coeffs = [1] + [240 * _sigma3(k) for k in range(1, n)]
    return QSeries.from_dense(coeffs, 1).truncate(order)


def _euler_power(power: int, length: int) -> list[int]:
    return product_series(((k, -1, power) for k in range(1, length)), length)


def delta(order) -> QSeries:
    """``q prod (1 - q^n)^24``."""
    n = math.ceil(Fraction(order))
    if n < 2:
        raise SeriesError("order must be at least 2")
    return QSeries.from_dense(_euler_power(24, n), 1, 1).truncate(order)


def j_series(order) -> QSeries:
    """``E4^3 / Delta - 744`` (constant term zero)."""
    order = Fraction(order)
    if order < 2:
        raise SeriesError("order must be at least 2")
    m = math.ceil(order) + 2
    e4 = eisenstein_e4(m)
    eta24 = QSeries.from_dense(_euler_power(24, m), 1)
    j = (e4**3 * eta24.invert()).shift_exponent(-1) - 744
    return j.truncate(order)


def eta_quotient_2a(order) -> QSeries:
    """``(eta(tau)/eta(2 tau))^24 = q^-1 prod (1 - q^(2n-1))^24``."""
    order = Fraction(order)
    m = math.ceil(order) + 2
    coeffs = product_series(((2 * k - 1, -1, 24) for k in range(1, m)), m)
    return QSeries.from_dense(coeffs, 1, -1).truncate(order)


def t2a_series(order, constant: int = 24) -> QSeries:
    """``f + 4096/f + constant`` with ``f`` the 2A eta quotient.

    ``constant`` is exposed only so that a wrong normalisation can be fed to
    the solver as a negative control.
    """
    order = Fraction(order)
    if order < 2:
        raise SeriesError("order must be at least 2")
    f = eta_quotient_2a(order + 3)
    t = f + f.invert() * 4096 + constant
    return t.truncate(order)


def half_argument(s: QSeries) -> QSeries:
    return s.half_argument()


def twisted_sector_character(order, constant: int = 24) -> QSeries:
    """Character of the 2A-twisted module, taken as ``T_2A(tau/2)``.

    Relies on Fricke invariance ``T_2A(-1/(2 tau)) = T_2A(tau)``, so that the
    S-transform of the 2A trace is the same series in ``q^(1/2)``.
    """
    return half_argument(t2a_series(2 * Fraction(order), constant))


@dataclass(frozen=True)
class CharacterTriple:
    b0: QSeries
    b1: QSeries
    bT: QSeries

    def __iter__(self):
        return iter((self.b0, self.b1, self.bT))

    @property
    def order(self) -> Fraction:
        return min(s.order for s in self)

    def to_json(self, n_terms: int | None = None) -> dict:
        out = {}
        for name, s in zip(("b0", "b1", "bT"), self):
            js = s.to_json()
            if n_terms is not None:
                js["terms"] = js["terms"][:n_terms]
            out[name] = js
        return out


def _check_graded_dimension(name: str, s: QSeries) -> None:
    for e, c in s.items():
        if not isinstance(c, int):
            raise DerivationInconsistency(f"{name}: non-integral coefficient {c} at q^({e})")
        if c < 0:
            raise DerivationInconsistency(f"{name}: negative coefficient {c} at q^({e})")


def solve_baby_characters(order, t2a_constant: int = 24, negative_prefactor: bool = False) -> CharacterTriple:
    """Characters of VB^0, VB^1 and VB_T, valid below ``q^order``.

    Solves
      j            = ch0 b0 + ch12 b1 + ch116 bT
      T_2A         = ch0 b0 + ch12 b1 - ch116 bT
      T_2A(tau/2)  = ch12 b0 + ch0 b1 + ch116 bT
    and checks every coefficient is a nonnegative integer.
    """
    order = Fraction(order)
    if order < 2:
        raise SeriesError("order must be at least 2")
    work = order + 3
    ch0, ch12, ch116 = ising_triple(work, negative_prefactor)
    j = j_series(work)
    t = t2a_series(work, t2a_constant)
    tw = twisted_sector_character(work, t2a_constant)

    bT = (j - t) / (ch116 * 2)
    a = (j + t) / 2
    b = tw - ch116 * bT
    den = ch0 * ch0 - ch12 * ch12
    b0 = (ch0 * a - ch12 * b) / den
    b1 = (ch0 * b - ch12 * a) / den
    triple = CharacterTriple(*(s.truncate(order) for s in (b0, b1, bT)))
    for name, s in zip(("b0", "b1", "bT"), triple):
        _check_graded_dimension(name, s)
    return triple


def decomposition_residuals(triple: CharacterTriple, order=None, t2a_constant: int = 24) -> dict[str, QSeries]:
    """Left minus right side of the three defining equations."""
    order = triple.order if order is None else Fraction(order)
    work = order + 3
    ch0, ch12, ch116 = ising_triple(work)
    j = j_series(work)
    t = t2a_series(work, t2a_constant)
    tw = twisted_sector_character(work, t2a_constant)
    b0, b1, bT = triple
    eqs = {
        "character": ch0 * b0 + ch12 * b1 + ch116 * bT - j,
        "2A-trace": ch0 * b0 + ch12 * b1 - ch116 * bT - t,
        "twisted": ch12 * b0 + ch0 * b1 + ch116 * bT - tw,
    }
    # validity of each residual is limited by the triple's truncation
    return {k: v.truncate(min(v.order, order + VB_SHIFT + ISING_SHIFT[Ising.H0])) for k, v in eqs.items()}


def code_voa_char(code: LinearCode, order, gamma: BitWord | None = None) -> QSeries:
    """Character of ``U_{D+gamma}``: the coset weight enumerator at (ch0, ch12)."""
    order = Fraction(order)
    n = code.length
    g = 0 if gamma is None else gamma.bits
    counts: dict[int, int] = {}
    for w in code.words():
        k = popcount(w ^ g)
        counts[k] = counts.get(k, 0) + 1
    # ch0^(n-w) ch12^w has valuation -n/48 + w/2; carry enough slack
    work = order + Fraction(n, 48) + 1
    ch0 = ising_char(Ising.H0, work)
    ch12 = ising_char(Ising.H12, work)
    total = None
    for w, a in sorted(counts.items()):
        term = (ch0 ** (n - w) if n - w else QSeries.constant(1, work)) * (ch12**w if w else QSeries.constant(1, work))
        term = term * a
        total = term if total is None else total + term
    return total.truncate(order)
