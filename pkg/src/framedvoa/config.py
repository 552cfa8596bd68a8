"""Run configuration shared by the CLI and the experiment scripts."""

from __future__ import annotations

from dataclasses import dataclass, field

DEFAULT_TAUS = (0.8j, 1j, 1.3j)


@dataclass(frozen=True)
class RunConfig:
    order: int = 200
    tol: float = 1e-6
    tau_samples: tuple[complex, ...] = DEFAULT_TAUS
    format: str = "text"
    seed: int = 0
    fock_weight: int = 8
    commutator_weight: int = 6
    mode_bound: int = 4

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("order must be at least 2")
        if not self.tol > 0:
            raise ValueError("tol must be positive")
        if any(t.imag <= 0 for t in self.tau_samples):
            raise ValueError("every tau must have positive imaginary part")
        if self.format not in ("text", "json"):
            raise ValueError("format must be text or json")
