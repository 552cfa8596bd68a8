"""Free-fermion Fock modules: the NS sector M and the Ramond sector N.

A basis state is a strictly decreasing tuple of created modes over the
vacuum.  In the NS sector a mode ``k`` (positive, in Z + 1/2) stands for
``psi_{-k}``; in the Ramond sector a mode ``n`` (nonnegative integer)
stands for ``phi_{-n}``, with ``n = 0`` allowed once and always last.
Coefficients are ``Fraction`` or, for Ramond vectors such as ``v+-``,
``QSqrt2``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Mapping

from .exact import INV_SQRT2, QSqrt2

HALF = Fraction(1, 2)
CENTRAL_CHARGE = Fraction(1, 2)
RAMOND_WEIGHT = Fraction(1, 16)


class Sector(Enum):
    NS = "NS"
    R = "R"

    def __str__(self) -> str:
        return self.value


class ModeError(ValueError):
    pass


def _check_index(sector: Sector, m: Fraction) -> Fraction:
    m = Fraction(m)
    if sector is Sector.NS and m.denominator != 2:
        raise ModeError(f"NS modes live in Z + 1/2, got {m}")
    if sector is Sector.R and m.denominator != 1:
        raise ModeError(f"Ramond modes are integers, got {m}")
    return m


def _is_zero(c) -> bool:
    return not c


class StateVector(Mapping):
    """Finite linear combination of basis states of one sector."""

    __slots__ = ("sector", "_d")

    def __init__(self, sector: Sector, terms: Mapping[tuple, object] | Iterable = ()):
        self.sector = sector
        d: dict = {}
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        for modes, c in pairs:
            modes = tuple(Fraction(x) for x in modes)
            if any(a <= b for a, b in zip(modes, modes[1:])):
                raise ModeError(f"modes must be strictly decreasing: {modes}")
            d[modes] = d.get(modes, 0) + c
        self._d = {k: v for k, v in d.items() if not _is_zero(v)}

    @classmethod
    def vacuum(cls, sector: Sector = Sector.NS) -> "StateVector":
        return cls(sector, {(): Fraction(1)})

    @classmethod
    def basis(cls, sector: Sector, modes: Iterable) -> "StateVector":
        return cls(sector, {tuple(modes): Fraction(1)})

    def __getitem__(self, modes):
        return self._d.get(tuple(Fraction(x) for x in modes), 0)

    def __iter__(self) -> Iterator[tuple]:
        return iter(self._d)

    def __len__(self) -> int:
        return len(self._d)

    def is_zero(self) -> bool:
        return not self._d

    def _same(self, other: "StateVector") -> None:
        if self.sector is not other.sector:
            raise ModeError("states from different sectors")

    def __add__(self, other: "StateVector") -> "StateVector":
        self._same(other)
        return StateVector(self.sector, list(self._d.items()) + list(other._d.items()))

    def __neg__(self) -> "StateVector":
        return StateVector(self.sector, {k: -v for k, v in self._d.items()})

    def __sub__(self, other: "StateVector") -> "StateVector":
        return self + (-other)

    def scale(self, c) -> "StateVector":
        return StateVector(self.sector, {k: c * v for k, v in self._d.items()})

    def __rmul__(self, c) -> "StateVector":
        return self.scale(c)

    def __eq__(self, other) -> bool:
        if not isinstance(other, StateVector):
            return NotImplemented
        return self.sector is other.sector and self._d == other._d

    def __hash__(self):
        return hash((self.sector, frozenset(self._d.items())))

    def __repr__(self) -> str:
        if not self._d:
            return "0"
        name = "psi" if self.sector is Sector.NS else "phi"
        parts = []
        for modes, c in sorted(self._d.items()):
            ops = "".join(f"{name}_{{{-m}}}" for m in modes)
            parts.append(f"{c!r}*{ops or '1'}|0>")
        return " + ".join(parts)

    def weights(self) -> set[Fraction]:
        return {state_weight(self.sector, m) for m in self._d}

    def max_abs(self) -> float:
        return max((abs(float(c)) for c in self._d.values()), default=0.0)


def state_weight(sector: Sector, modes: tuple) -> Fraction:
    base = RAMOND_WEIGHT if sector is Sector.R else Fraction(0)
    return base + sum(modes, Fraction(0))


# -- single modes ----------------------------------------------------------


def _apply_to_basis(sector: Sector, m: Fraction, modes: tuple) -> tuple[int | Fraction, tuple] | None:
    """``psi_m`` on one basis monomial: ``(coefficient, new modes)`` or ``None`` for zero."""
    if m < 0 or (m == 0 and 0 not in modes):
        a = -m
        if a in modes:
            return None
        pos = sum(1 for x in modes if x > a)
        new = modes[:pos] + (a,) + modes[pos:]
        return (-1) ** pos, new
    if m == 0:
        # 0 is last; move phi_0 past the others and use phi_0^2 = 1/2
        j = len(modes)
        return Fraction((-1) ** (j - 1), 2), modes[:-1]
    if m not in modes:
        return None
    p = modes.index(m)
    return (-1) ** p, modes[:p] + modes[p + 1 :]


def apply_mode(m, v: StateVector) -> StateVector:
    """Apply ``psi_m`` (NS) or ``phi_m`` (Ramond) using the anticommutation relations."""
    m = _check_index(v.sector, m)
    out: dict = {}
    for modes, c in v.items():
        r = _apply_to_basis(v.sector, m, modes)
        if r is not None:
            s, new = r
            out[new] = out.get(new, 0) + s * c
    return StateVector(v.sector, out)


def apply_word(word: Iterable, v: StateVector) -> StateVector:
    """Apply the modes right to left, like operator composition."""
    for m in reversed(list(word)):
        v = apply_mode(m, v)
    return v


# -- Virasoro --------------------------------------------------------------


def _lattice(sector: Sector, lo: Fraction, hi: Fraction) -> list[Fraction]:
    off = HALF if sector is Sector.NS else Fraction(0)
    start = int((lo - off).__floor__())
    stop = int((hi - off).__ceil__())
    return [off + k for k in range(start, stop + 1) if lo <= off + k <= hi]


def virasoro_mode(n: int, v: StateVector) -> StateVector:
    """``L(n) = 1/2 sum_r (r - n/2) :psi_{n-r} psi_r:``, plus 1/16 on ``L(0)`` in the Ramond sector.

    Only ``n = 0`` needs normal ordering; there the ``r < 0`` terms are
    written as ``-psi_r psi_{-r}`` and the sum collapses to
    ``sum_{r > 0} r psi_{-r} psi_r``.
    """
    n = int(n)
    sector = v.sector
    out: dict = {}
    if n == 0:
        shift = RAMOND_WEIGHT if sector is Sector.R else 0
        for modes, c in v.items():
            if shift:
                out[modes] = out.get(modes, 0) + shift * c
            for r in modes:
                if r <= 0:
                    continue
                s1, mid = _apply_to_basis(sector, r, modes)
                s2, new = _apply_to_basis(sector, -r, mid)
                out[new] = out.get(new, 0) + r * s1 * s2 * c
        return StateVector(sector, out)
    for modes, c in v.items():
        # psi_r with r > 0 kills the state unless r is a created mode, and
        # psi_{n-r} then needs n - r <= 0 or n - r among the remaining modes
        top = max(modes, default=Fraction(0))
        for r in _lattice(sector, n - top - 1, top):
            if r > 0 and r not in modes:
                continue
            coeff = (r - Fraction(n, 2)) / 2
            if not coeff:
                continue
            first = _apply_to_basis(sector, r, modes)
            if first is None:
                continue
            s1, mid = first
            second = _apply_to_basis(sector, n - r, mid)
            if second is None:
                continue
            s2, new = second
            out[new] = out.get(new, 0) + coeff * s1 * s2 * c
    return StateVector(sector, out)


def virasoro_word(ns: Iterable[int], v: StateVector) -> StateVector:
    for n in reversed(list(ns)):
        v = virasoro_mode(n, v)
    return v


def commutator_residual(m: int, n: int, v: StateVector) -> StateVector:
    """``[L(m), L(n)] v - (m - n) L(m + n) v - delta_{m+n,0} (m^3 - m)/12 * c * v``."""
    lhs = virasoro_mode(m, virasoro_mode(n, v)) - virasoro_mode(n, virasoro_mode(m, v))
    rhs = virasoro_mode(m + n, v).scale(Fraction(m - n))
    if m + n == 0:
        rhs = rhs + v.scale(Fraction(m**3 - m, 12) * CENTRAL_CHARGE)
    return lhs - rhs


@dataclass(frozen=True)
class CommutatorCheck:
    m: int
    n: int
    states: int
    max_residual: float
    exact_zero: bool

    def to_json(self) -> dict:
        return {
            "name": f"[L({self.m}),L({self.n})]",
            "status": "pass" if self.exact_zero else "fail",
            "residual": self.max_residual,
            "states": self.states,
        }


def check_virasoro(m: int, n: int, samples: Iterable[StateVector]) -> CommutatorCheck:
    worst, zero, count = 0.0, True, 0
    for v in samples:
        r = commutator_residual(m, n, v)
        count += 1
        if not r.is_zero():
            zero = False
            worst = max(worst, r.max_abs())
    return CommutatorCheck(m, n, count, worst, zero)


# -- bases and graded dimensions --------------------------------------------


@lru_cache(maxsize=None)
def _distinct_parts(total: Fraction, parts: tuple[Fraction, ...]) -> tuple[tuple[Fraction, ...], ...]:
    """Strictly decreasing tuples from ``parts`` (sorted descending) summing to ``total``."""
    if total == 0:
        return ((),)
    out = []
    for i, p in enumerate(parts):
        if p <= total:
            for rest in _distinct_parts(total - p, parts[i + 1 :]):
                out.append((p,) + rest)
    return tuple(out)


def basis_states(sector: Sector, weight) -> list[tuple]:
    """All basis monomials of the given ``L(0)``-weight."""
    weight = Fraction(weight)
    if sector is Sector.NS:
        if (2 * weight).denominator != 1 or weight < 0:
            return []
        parts = tuple(sorted((k + HALF for k in range(int(weight) + 1) if k + HALF <= weight), reverse=True))
        return [tuple(p) for p in _distinct_parts(weight, parts)]
    level = weight - RAMOND_WEIGHT
    if level.denominator != 1 or level < 0:
        return []
    parts = tuple(Fraction(k) for k in range(int(level), 0, -1))
    out = []
    for p in _distinct_parts(level, parts):
        out.append(tuple(p))
        out.append(tuple(p) + (Fraction(0),))
    return sorted(out)


def graded_dimensions(sector: Sector, max_weight) -> list[tuple[Fraction, int]]:
    max_weight = Fraction(max_weight)
    step = HALF if sector is Sector.NS else Fraction(1)
    w = Fraction(0) if sector is Sector.NS else RAMOND_WEIGHT
    out = []
    while w <= max_weight:
        out.append((w, len(basis_states(sector, w))))
        w += step
    return out


def states_up_to(sector: Sector, max_weight) -> list[StateVector]:
    return [StateVector.basis(sector, m) for w, _ in graded_dimensions(sector, max_weight) for m in basis_states(sector, w)]


# -- Ramond highest-weight vectors --------------------------------------------


def ramond_vacua() -> tuple[StateVector, StateVector]:
    """``v+- = phi_0|0> +- (1/sqrt 2)|0>``."""
    zero = (Fraction(0),)
    plus = StateVector(Sector.R, {zero: QSqrt2(1), (): INV_SQRT2})
    minus = StateVector(Sector.R, {zero: QSqrt2(1), (): -INV_SQRT2})
    return plus, minus


def partitions(n: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = n if largest is None else largest
    if n == 0:
        yield ()
        return
    for k in range(min(n, largest), 0, -1):
        for rest in partitions(n - k, k):
            yield (k,) + rest


def _rank(vectors: list[StateVector]) -> int:
    """Rank over Q(sqrt 2) by Gaussian elimination."""
    pivots: dict[tuple, dict] = {}
    rank = 0
    for v in vectors:
        row = {k: QSqrt2.coerce(c) for k, c in v.items()}
        for key in sorted(pivots):
            c = row.get(key)
            if c:
                prow = pivots[key]
                for k2, c2 in prow.items():
                    row[k2] = row.get(k2, QSqrt2()) - c * c2
                row = {k: x for k, x in row.items() if x}
        if row:
            lead = min(row)
            inv = row[lead].inverse()
            row = {k: x * inv for k, x in row.items()}
            # keep earlier pivot rows reduced against the new pivot
            for key, prow in pivots.items():
                c = prow.get(lead)
                if c:
                    for k2, c2 in row.items():
                        prow[k2] = prow.get(k2, QSqrt2()) - c * c2
                    pivots[key] = {k: x for k, x in prow.items() if x}
            pivots[lead] = row
            rank += 1
    return rank


def virasoro_submodule_dims(v: StateVector, max_level: int) -> list[int]:
    """``dim span{L(-lambda) v : |lambda| = N}`` for ``N = 0..max_level``."""
    dims = []
    for level in range(max_level + 1):
        vecs = [virasoro_word([-k for k in lam], v) for lam in partitions(level)]
        dims.append(_rank(vecs))
    return dims


@dataclass(frozen=True)
class RamondSplit:
    weights: tuple[Fraction, ...]
    plus: tuple[int, ...]
    minus: tuple[int, ...]
    total: tuple[int, ...]

    @property
    def balanced(self) -> bool:
        return self.plus == self.minus

    @property
    def exhaustive(self) -> bool:
        return all(p + m == t for p, m, t in zip(self.plus, self.minus, self.total))

    def to_json(self) -> dict:
        return {
            "weights": [str(w) for w in self.weights],
            "plus": list(self.plus),
            "minus": list(self.minus),
            "total": list(self.total),
        }


def ramond_split(max_level: int) -> RamondSplit:
    """Dimensions of the Virasoro submodules generated by ``v+`` and ``v-`` up to ``max_level``."""
    plus, minus = ramond_vacua()
    dp = virasoro_submodule_dims(plus, max_level)
    dm = virasoro_submodule_dims(minus, max_level)
    weights = tuple(RAMOND_WEIGHT + k for k in range(max_level + 1))
    total = tuple(len(basis_states(Sector.R, w)) for w in weights)
    return RamondSplit(weights, tuple(dp), tuple(dm), total)


def fock_report(max_weight: int = 8, commutator_weight: int = 6, mode_bound: int = 4) -> dict:
    """Graded dimensions and commutator residuals for both sectors."""
    out = {}
    for sector in Sector:
        dims = graded_dimensions(sector, max_weight)
        samples = states_up_to(sector, commutator_weight)
        checks = []
        for m in range(-mode_bound, mode_bound + 1):
            for n in range(-mode_bound, mode_bound + 1):
                checks.append(check_virasoro(m, n, samples).to_json())
        out[str(sector)] = {
            "sector": str(sector),
            "weights": [{"w": str(w), "dim": d} for w, d in dims],
            "checks": checks,
        }
    return out
