"""The shared 3x3 S-matrix, Verlinde multiplicities and numeric S-transform checks."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .exact import INV_SQRT2, QSqrt2
from .qseries import QSeries

HALF = QSqrt2(Fraction(1, 2))


@dataclass(frozen=True)
class SMatrix3:
    """``[[1/2, 1/2, 1/sqrt2], [1/2, 1/2, -1/sqrt2], [1/sqrt2, -1/sqrt2, 0]]``, exact."""

    rows: tuple[tuple[QSqrt2, ...], ...] = (
        (HALF, HALF, INV_SQRT2),
        (HALF, HALF, -INV_SQRT2),
        (INV_SQRT2, -INV_SQRT2, QSqrt2()),
    )

    def __getitem__(self, ij: tuple[int, int]) -> QSqrt2:
        i, j = ij
        return self.rows[i][j]

    def __matmul__(self, other: "SMatrix3") -> "SMatrix3":
        return SMatrix3(
            tuple(
                tuple(sum((self[i, k] * other[k, j] for k in range(3)), QSqrt2()) for j in range(3))
                for i in range(3)
            )
        )

    def is_symmetric(self) -> bool:
        return all(self[i, j] == self[j, i] for i in range(3) for j in range(3))

    def is_involution(self) -> bool:
        sq = self @ self
        return all(sq[i, j] == (1 if i == j else 0) for i in range(3) for j in range(3))

    def numeric(self) -> list[list[float]]:
        return [[float(x) for x in row] for row in self.rows]

    def to_json(self) -> list[list[str]]:
        return [[repr(x) for x in row] for row in self.rows]


def verlinde(s: SMatrix3 | None = None, unit: int = 0) -> list[list[list[QSqrt2]]]:
    """``N[i][j][k] = sum_m S_im S_jm S_km / S_unit,m`` (S real and symmetric)."""
    s = SMatrix3() if s is None else s
    return [
        [
            [sum((s[i, m] * s[j, m] * s[k, m] / s[unit, m] for m in range(3)), QSqrt2()) for k in range(3)]
            for j in range(3)
        ]
        for i in range(3)
    ]


def verlinde_integers(s: SMatrix3 | None = None) -> list[list[list[int]]]:
    """Verlinde multiplicities, checked to be nonnegative integers."""
    out = []
    for plane in verlinde(s):
        rows = []
        for row in plane:
            vals = []
            for x in row:
                if not x.is_rational() or x.a.denominator != 1 or x.a < 0:
                    raise ArithmeticError(f"Verlinde multiplicity {x!r} is not a natural number")
                vals.append(int(x.a))
            rows.append(vals)
        out.append(rows)
    return out


def parse_tau(text: str) -> complex:
    """Parse ``a+bi`` / ``bi`` / ``0.8i`` into a complex number in the upper half plane."""
    t = text.strip().replace(" ", "").replace("I", "i").replace("i", "j")
    if t in ("j", "+j"):
        t = "1j"
    elif t.endswith("j") and t[:-1] and t[-2] in "+-":
        t = t[:-1] + "1j"
    tau = complex(t)
    if tau.imag <= 0:
        raise ValueError(f"tau = {text} is not in the upper half plane")
    return tau


def _finite(x: float):
    """JSON-safe float: non-finite values become the string ``"inf"``."""
    return x if math.isfinite(x) else "inf"


@dataclass
class SampleResult:
    tau: complex
    residuals: list[float]
    tail_bound: float
    status: str

    def to_json(self) -> dict:
        return {
            "tau": [self.tau.real, self.tau.imag],
            "residuals": [_finite(r) for r in self.residuals],
            "tail_bound": _finite(self.tail_bound),
            "status": self.status,
        }


@dataclass
class STransformReport:
    name: str
    tol: float
    samples: list[SampleResult] = field(default_factory=list)

    @property
    def status(self) -> str:
        states = {s.status for s in self.samples}
        if "fail" in states:
            return "fail"
        if "inconclusive" in states or not self.samples:
            return "inconclusive"
        return "pass"

    @property
    def max_residual(self) -> float:
        return max((r for s in self.samples for r in s.residuals), default=0.0)

    @property
    def max_tail(self) -> float:
        return max((s.tail_bound for s in self.samples), default=0.0)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "tol": self.tol,
            "status": self.status,
            "max_residual": _finite(self.max_residual),
            "max_tail_bound": _finite(self.max_tail),
            "samples": [s.to_json() for s in self.samples],
        }


def verify_s_transform(
    triple: Sequence[QSeries],
    taus: Sequence[complex],
    tol: float = 1e-6,
    s: SMatrix3 | None = None,
    name: str = "triple",
) -> STransformReport:
    """Check ``ch_i(-1/tau) = sum_j S_ij ch_j(tau)`` on truncated series.

    The tail bound covers both evaluation points; a sample is inconclusive
    when it exceeds ``tol / 10``.
    """
    s = SMatrix3() if s is None else s
    sn = s.numeric()
    report = STransformReport(name, tol)
    for tau in taus:
        if tau.imag <= 0:
            raise ValueError("tau must lie in the upper half plane")
        tau_s = -1 / tau
        at = [c.numeric_eval(tau) for c in triple]
        at_s = [c.numeric_eval(tau_s) for c in triple]
        tail = 0.0
        for c in triple:
            tail = max(tail, c.tail_bound(tau), c.tail_bound(tau_s))
        # the tail of the right side is mixed by S, whose rows have l1-norm <= 1 + 1/sqrt2
        tail *= 1 + 1 / math.sqrt(2)
        residuals = [abs(at_s[i] - sum(sn[i][j] * at[j] for j in range(3))) for i in range(3)]
        if tail > tol / 10:
            status = "inconclusive"
        elif max(residuals) < tol:
            status = "pass"
        else:
            status = "fail"
        report.samples.append(SampleResult(tau, residuals, tail, status))
    return report
